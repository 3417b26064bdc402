#pragma once

#include <cstdint>

#include "gts/search.hpp"
#include "gts/ttable.hpp"

namespace gts {

// Leaves of the minimal tree on a uniform (w, d) tree: Knuth-Moore
// w^floor(d/2) + w^ceil(d/2) - 1. Throws std::overflow_error if the count
// does not fit in 64 bits.
uint64_t knuth_moore_leaves(int w, int d);

struct PhaseCount {
    uint64_t leaf = 0;
    uint64_t interior = 0;
    uint64_t tt_cut = 0; // nodes resolved from the table (one access, no leaf)
    uint64_t total() const { return leaf + interior + tt_cut; }
};

// Left-first minimal graph measurement, three steps:
//   1. full-window search storing best moves (search counts);
//   2. bounds cleared, re-search with window (f-1, f+1) and bounds keyed by
//      root path so no transposition can be reused -> minimal tree counts;
//   3. same re-search with position-keyed bounds -> minimal graph counts.
struct LfmgResult {
    Value value = 0;
    PhaseCount search;
    PhaseCount mintree;
    PhaseCount mingraph;
    bool capacity_ok = true; // no table information was lost in steps 1/3
};

LfmgResult lfmg_measure(const SearchDomain& dom, const Pos& root, int depth,
                        int tt_log2);

// Alpha-beta with enhanced transposition cutoffs: identical value contract
// to alpha_beta_tt; at interior nodes more than etc_min_height plies above
// the horizon, every child's table entry is probed before any child is
// expanded, returning immediately on a child bound that already cuts.
Value alpha_beta_etc(const SearchDomain& dom, const Pos& root, int depth,
                     Value alpha, Value beta, TTable& tt,
                     const SearchOpts& opts = {}, int etc_min_height = 2);

// Approximate real minimal graph via MM(d): a preparation search that, at
// every cutoff node within mm_depth plies of the horizon, sizes all
// cutoff-causing moves with memory-less null-window searches (so
// transpositions count at full subtree size) and records the cheapest as
// the best move; a counting re-search then measures the resulting graph.
// lfmg holds the step-3 counts of lfmg_measure for the same instance.
struct ArmgResult {
    Value value = 0;
    PhaseCount armg;
    PhaseCount lfmg;
    bool capacity_ok = true;
};

ArmgResult armg_mm(const SearchDomain& dom, const Pos& root, int depth,
                   int mm_depth, int tt_log2);

} // namespace gts
