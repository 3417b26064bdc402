#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gts/domain.hpp"
#include "gts/value.hpp"

namespace gts {

std::string value_str(Value v); // integers, with POS_INF/NEG_INF as "inf"/"-inf"

// Instrumentation hooks. Line formats (see LineTrace):
//   leaf <path> <value>
//   ttcut <path> <bound>
//   pass <k> gamma=<g> g=<g> leaves=<n>
//   op <case> node=<path> state=<L|S> h=<merit>
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void leaf(const Path& p, Value v) { (void)p; (void)v; }
    virtual void ttcut(const Path& p, Value bound) { (void)p; (void)bound; }
    virtual void pass(int k, Value gamma, Value g, uint64_t leaves) {
        (void)k; (void)gamma; (void)g; (void)leaves;
    }
    virtual void op(int gamma_case, const Path& p, char state, Value merit) {
        (void)gamma_case; (void)p; (void)state; (void)merit;
    }
};

struct LeafEvent {
    Path path;
    Value value = 0;
    bool operator==(const LeafEvent&) const = default;
};

struct OpEvent {
    int gamma_case = 0;
    Path node;
    char state = 'L';
    Value merit = 0;
    bool operator==(const OpEvent&) const = default;
};

struct PassEvent {
    int k = 0;
    Value gamma = 0;
    Value g = 0;
    uint64_t leaves = 0;
    bool operator==(const PassEvent&) const = default;
};

// Collects events into vectors (golden-trace and equivalence tests).
class VectorTrace : public TraceSink {
public:
    std::vector<LeafEvent> leaves;
    std::vector<OpEvent> ops;
    std::vector<PassEvent> passes;
    std::vector<LeafEvent> ttcuts;

    void leaf(const Path& p, Value v) override { leaves.push_back({p, v}); }
    void ttcut(const Path& p, Value bound) override { ttcuts.push_back({p, bound}); }
    void pass(int k, Value gamma, Value g, uint64_t n) override { passes.push_back({k, gamma, g, n}); }
    void op(int c, const Path& p, char s, Value h) override { ops.push_back({c, p, s, h}); }
};

// Writes one line per event to a stream.
class LineTrace : public TraceSink {
public:
    explicit LineTrace(std::ostream& out) : out_(out) {}
    void leaf(const Path& p, Value v) override;
    void ttcut(const Path& p, Value bound) override;
    void pass(int k, Value gamma, Value g, uint64_t leaves) override;
    void op(int gamma_case, const Path& p, char state, Value merit) override;

private:
    std::ostream& out_;
};

} // namespace gts
