#pragma once

#include <memory>

#include "gts/domain.hpp"

namespace gts {

enum class Ordering : uint8_t {
    PERFECT, // first child of every node attains the node's value
    RANDOM,  // leaf values i.i.d. uniform in [lo, hi]
    NOISY,   // as PERFECT, but the extremal child is first with probability p
};

// Seeded synthetic game tree. Bit-for-bit deterministic: every node derives
// its width, value and noise draw from a 64-bit key mixed down the path.
// Root is always a MAX node; types alternate by depth.
//
// width_min == width_max gives the uniform branching factor w; a wider range
// gives a variable branching factor (per-node width uniform in the range).
struct SynthSpec {
    int width = 2;              // uniform width (used when width_min == 0)
    int depth = 4;              // leaves at this depth
    uint64_t seed = 1;
    Value lo = -100;
    Value hi = 100;
    Ordering ordering = Ordering::RANDOM;
    double noise_p = 1.0;       // NOISY only: P(extremal child first)
    int width_min = 0;          // both > 0 enables variable branching
    int width_max = 0;
    uint64_t node_budget = uint64_t(1) << 34; // guard against w^d blowups
};

class SynthDomain : public SearchDomain {
public:
    explicit SynthDomain(const SynthSpec& spec);

    std::string name() const override;
    Pos root() const override;
    bool is_leaf(const Pos& p) const override { return depth_of(p) == spec_.depth; }
    int child_count(const Pos& p) const override;
    Pos child(const Pos& p, int idx) const override;
    Value evaluate(const Pos& p) const override;
    uint64_t hash(const Pos& p) const override { return p.a; }
    NodeType node_type(const Pos& p) const override {
        return (depth_of(p) % 2 == 0) ? NodeType::MAX : NodeType::MIN;
    }
    Value val_max() const override { return val_max_; }
    int feature_count() const override { return 64; }

    std::optional<Value> known_value() const override;

    const SynthSpec& spec() const { return spec_; }

private:
    static int depth_of(const Pos& p) { return static_cast<int>(p.c); }
    // p.b carries the node's assigned value for PERFECT/NOISY trees.
    Value assigned(const Pos& p) const { return static_cast<Value>(static_cast<int64_t>(p.b)); }

    SynthSpec spec_;
    Value val_max_;
    Value root_value_ = 0; // PERFECT/NOISY
};

// Validates the spec (w >= 1, d >= 0, lo <= hi, node budget) and builds the domain.
std::unique_ptr<SynthDomain> synth_tree(const SynthSpec& spec);

} // namespace gts
