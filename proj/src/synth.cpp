#include "gts/synth.hpp"

#include <sstream>
#include <stdexcept>

namespace gts {

namespace {

constexpr uint64_t TAG_WIDTH = 0xA24BAED4963EE407ull;
constexpr uint64_t TAG_VALUE = 0x9FB21C651E98DF25ull;
constexpr uint64_t TAG_NOISE = 0xE220A8397B1DCDAFull;
constexpr uint64_t TAG_CHILD = 0xD1B54A32D192ED03ull;

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t mix(uint64_t key, uint64_t tag) { return splitmix64(key ^ tag); }

// Uniform in [a, b], b >= a.
Value uniform_value(uint64_t bits, Value a, Value b) {
    uint64_t span = static_cast<uint64_t>(static_cast<int64_t>(b) - static_cast<int64_t>(a)) + 1;
    return static_cast<Value>(a + static_cast<Value>(bits % span));
}

double unit_double(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

} // namespace

std::unique_ptr<SynthDomain> synth_tree(const SynthSpec& spec) {
    bool variable = spec.width_min > 0 || spec.width_max > 0;
    int wmax = variable ? spec.width_max : spec.width;
    int wmin = variable ? spec.width_min : spec.width;
    if (wmin < 1 || wmax < wmin) throw std::invalid_argument("synth width range invalid");
    if (spec.depth < 0) throw std::invalid_argument("synth depth must be >= 0");
    if (spec.lo > spec.hi) throw std::invalid_argument("synth value range requires lo <= hi");
    if (spec.lo < -VAL_MAX_LIMIT || spec.hi > VAL_MAX_LIMIT)
        throw std::invalid_argument("synth value range exceeds the value limit");
    if (spec.ordering == Ordering::NOISY && (spec.noise_p < 0.0 || spec.noise_p > 1.0))
        throw std::invalid_argument("noise_p must lie in [0, 1]");

    // Overflow guard: total nodes bounded by sum of wmax^k, k = 0..d.
    uint64_t total = 1, level = 1;
    for (int k = 1; k <= spec.depth; k++) {
        if (level > spec.node_budget / static_cast<uint64_t>(wmax)) {
            total = spec.node_budget + 1;
            break;
        }
        level *= static_cast<uint64_t>(wmax);
        if (total > spec.node_budget - level) {
            total = spec.node_budget + 1;
            break;
        }
        total += level;
    }
    if (total > spec.node_budget) throw std::invalid_argument("synth tree exceeds the node budget");

    return std::make_unique<SynthDomain>(spec);
}

SynthDomain::SynthDomain(const SynthSpec& spec) : spec_(spec) {
    val_max_ = std::max<Value>(1, std::max(std::abs(spec_.lo), std::abs(spec_.hi)));
    uint64_t root_key = splitmix64(spec_.seed ^ 0x8BADF00D5EEDull);
    root_value_ = uniform_value(mix(root_key, TAG_VALUE), spec_.lo, spec_.hi);
}

std::string SynthDomain::name() const {
    std::ostringstream ss;
    ss << "synth(";
    if (spec_.width_min > 0)
        ss << "w=" << spec_.width_min << ".." << spec_.width_max;
    else
        ss << "w=" << spec_.width;
    ss << ",d=" << spec_.depth << ",seed=" << spec_.seed;
    switch (spec_.ordering) {
        case Ordering::PERFECT: ss << ",order=perfect"; break;
        case Ordering::RANDOM: ss << ",order=random"; break;
        case Ordering::NOISY: ss << ",order=noisy" << spec_.noise_p; break;
    }
    ss << ")";
    return ss.str();
}

Pos SynthDomain::root() const {
    uint64_t root_key = splitmix64(spec_.seed ^ 0x8BADF00D5EEDull);
    return Pos{root_key, static_cast<uint64_t>(static_cast<int64_t>(root_value_)), 0};
}

int SynthDomain::child_count(const Pos& p) const {
    if (is_leaf(p)) return 0;
    if (spec_.width_min <= 0) return spec_.width;
    uint64_t span = static_cast<uint64_t>(spec_.width_max - spec_.width_min) + 1;
    return spec_.width_min + static_cast<int>(mix(p.a, TAG_WIDTH) % span);
}

Pos SynthDomain::child(const Pos& p, int idx) const {
    uint64_t child_key = splitmix64(p.a ^ (TAG_CHILD + static_cast<uint64_t>(idx) * 0x9E3779B97F4A7C15ull));
    Pos c{child_key, 0, p.c + 1};
    if (spec_.ordering == Ordering::RANDOM) return c;

    // PERFECT/NOISY: propagate assigned values. One child slot receives the
    // parent's value exactly; the rest draw from the side that keeps the
    // parent extremal. NOISY places the extremal slot first with prob. p.
    int w = child_count(p);
    int extremal = 0;
    if (spec_.ordering == Ordering::NOISY && w > 1) {
        double u = unit_double(mix(p.a, TAG_NOISE));
        if (u >= spec_.noise_p) {
            uint64_t pick = mix(p.a, TAG_NOISE ^ TAG_CHILD);
            extremal = 1 + static_cast<int>(pick % static_cast<uint64_t>(w - 1));
        }
    }
    Value v = assigned(p);
    Value cv;
    if (idx == extremal) {
        cv = v;
    } else if (node_type(p) == NodeType::MAX) {
        cv = uniform_value(mix(child_key, TAG_VALUE), spec_.lo, v);
    } else {
        cv = uniform_value(mix(child_key, TAG_VALUE), v, spec_.hi);
    }
    c.b = static_cast<uint64_t>(static_cast<int64_t>(cv));
    return c;
}

Value SynthDomain::evaluate(const Pos& p) const {
    if (spec_.ordering == Ordering::RANDOM)
        return uniform_value(mix(p.a, TAG_VALUE), spec_.lo, spec_.hi);
    return assigned(p);
}

std::optional<Value> SynthDomain::known_value() const {
    if (spec_.ordering == Ordering::RANDOM) return std::nullopt;
    return root_value_;
}

} // namespace gts
