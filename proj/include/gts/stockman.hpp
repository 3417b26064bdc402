#pragma once

#include "gts/search.hpp"

namespace gts {

// Stockman's SSS*: best-first search over a sorted OPEN list of
// (node, LIVE|SOLVED, merit) states rewritten by the six Gamma operators
// (including Campbell's correction). Nodes are identified by root-to-node
// child-index paths, so the domain must be transposition-free (an explicit
// or synthetic tree). The root must be a max node. Emits one `op` trace
// event per operator application (the terminating pop emits none).
Value sss_star(const SearchDomain& dom, const Pos& root, int depth,
               const SearchOpts& opts = {});

enum class EquivStatus { PASS, FAIL, INCONCLUSIVE };

struct EquivReport {
    EquivStatus status = EquivStatus::PASS;
    // First index at which the leaf-evaluation sequences differ (-1 when
    // they agree element-wise; lengths are compared too).
    long divergence = -1;
    uint64_t sss_leaves = 0;
    uint64_t mtd_leaves = 0;
    Value sss_value = 0;
    Value mtd_value = 0;
    uint64_t info_loss = 0; // TT evictions/drops during the mtd_sss run
};

// The equivalence theorem, machine-checked: sss_star and mtd_sss (fresh
// table of the given capacity) must evaluate the same leaves in the same
// order. Divergence with a lossy table is INCONCLUSIVE, never FAIL.
EquivReport check_equivalence(const SearchDomain& dom, int depth,
                              int tt_capacity_log2);

} // namespace gts
