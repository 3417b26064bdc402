#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gts/value.hpp"

namespace gts {

enum class NodeType : uint8_t { MAX, MIN };

inline NodeType flip(NodeType t) { return t == NodeType::MAX ? NodeType::MIN : NodeType::MAX; }

// Domain-opaque position. Each domain packs its own state into these words.
struct Pos {
    uint64_t a = 0;
    uint64_t b = 0;
    uint32_t c = 0;
};

// Root-to-node child-index path. Printed as "r", "r.0.1", ...
using Path = std::vector<int>;

std::string path_str(const Path& p);

// True if a precedes b in left-to-right tree order (lexicographic on
// child indices; a proper ancestor precedes its descendants).
bool path_before(const Path& a, const Path& b);

// True if a is a proper ancestor of b.
bool path_is_ancestor(const Path& a, const Path& b);

// Abstract game/tree position space. Implementations are immutable after
// construction; child enumeration order is deterministic and stable.
class SearchDomain {
public:
    virtual ~SearchDomain() = default;

    virtual std::string name() const = 0;
    virtual Pos root() const = 0;
    virtual bool is_leaf(const Pos& p) const = 0;
    virtual int child_count(const Pos& p) const = 0;
    virtual Pos child(const Pos& p, int idx) const = 0;
    virtual Value evaluate(const Pos& p) const = 0;
    virtual uint64_t hash(const Pos& p) const = 0;
    virtual NodeType node_type(const Pos& p) const = 0;

    // Largest magnitude a leaf evaluation can take.
    virtual Value val_max() const = 0;

    // Move-feature bucketing for the history heuristic.
    virtual int feature_count() const { return 64; }
    virtual int move_feature(const Pos& parent, int child_idx) const {
        (void)parent;
        return child_idx % feature_count();
    }

    // Exact minimax value fixed at construction time, when the generator
    // knows it (perfectly/noisily ordered synthetic trees).
    virtual std::optional<Value> known_value() const { return std::nullopt; }

    // Walk a root-to-node path.
    Pos at(const Path& p) const {
        Pos n = root();
        for (int idx : p) n = child(n, idx);
        return n;
    }
};

} // namespace gts
