#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gts/domain.hpp"
#include "gts/value.hpp"

namespace gts {

// A solution tree extracted from a search. An upper tree (T+) keeps all
// children at max nodes and exactly one child at min nodes and certifies
// v(n) <= value; a lower tree (T-) is the dual and certifies v(n) >= value.
struct ProofNode {
    int child_index = -1; // edge from the parent (-1 at the root)
    bool leaf = false;
    Value value = 0;
    std::vector<std::unique_ptr<ProofNode>> kids;
};

// Fail-soft search result with the certificates the postcondition demands:
//   g <= alpha  ->  upper tree of value g
//   g >= beta   ->  lower tree of value g
//   otherwise   ->  both trees, both of value g
struct ProofResult {
    Value g = 0;
    std::unique_ptr<ProofNode> upper;
    std::unique_ptr<ProofNode> lower;
};

struct VerifyOutcome {
    bool ok = true;
    std::string reason;
};

// Re-walks both certificates against the domain and checks the three-case
// postcondition of fail-soft alpha-beta for the window (alpha, beta).
VerifyOutcome verify_postcondition(const SearchDomain& dom, const Pos& p,
                                   int depth, Value alpha, Value beta,
                                   const ProofResult& result);

} // namespace gts
