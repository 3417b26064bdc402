#pragma once

#include <vector>

#include "gts/algorithm.hpp"
#include "gts/prooftree.hpp"
#include "gts/search.hpp"
#include "gts/ttable.hpp"

namespace gts {

// Full minimax to the given horizon (no pruning). The reference oracle.
Value minimax(const SearchDomain& dom, const Pos& root, int depth,
              const SearchOpts& opts = {});

// Fail-soft alpha-beta in the minimax view (separate max/min cases), no
// memory. Returns g with: g <= alpha -> f(root) <= g; g >= beta ->
// f(root) >= g; otherwise g = f(root).
Value alpha_beta(const SearchDomain& dom, const Pos& root, int depth,
                 Value alpha, Value beta, const SearchOpts& opts = {});

// Same search, additionally returning the solution-tree certificates the
// postcondition requires (see prooftree.hpp).
ProofResult alpha_beta_with_proof(const SearchDomain& dom, const Pos& root,
                                  int depth, Value alpha, Value beta,
                                  const SearchOpts& opts = {});

// Alpha-beta with a transposition table: bound/exact cutoffs and window
// narrowing on entry, table-move-first ordering, both bounds and the best
// move stored on exit (draft = remaining depth).
Value alpha_beta_tt(const SearchDomain& dom, const Pos& root, int depth,
                    Value alpha, Value beta, TTable& tt,
                    const SearchOpts& opts = {});

// Aspiration window: one search with (estimate-delta, estimate+delta),
// then at most one wide re-search, reusing the fail-soft g as the new
// window edge: fail low -> (NEG_INF, g), fail high -> (g, POS_INF).
// tt may be null (memory-less alpha-beta underneath).
Value aspwin(const SearchDomain& dom, const Pos& root, int depth,
             Value estimate, Value delta, TTable* tt,
             const SearchOpts& opts = {});

// Per-algorithm scalar parameters used by the drivers and harnesses.
struct AlgoParams {
    Value estimate = 0;  // aspwin / aspiration_negascout center; mtd_f f0
    Value delta = 5;     // aspiration half-width
    Value stepsize = 10; // mtd_step jump
    int etc_min_height = 2;
};

struct IDIteration {
    int depth = 0;
    Value value = 0;
    int best = -1;     // root move from the table after this iteration
    SearchStats stats; // this iteration only
};

struct IDResult {
    Value value = 0;
    std::vector<IDIteration> iterations;
    SearchStats total;
};

// Iterative deepening: runs algo at depths step, 2*step, ... up to
// max_depth over one shared table, history table and MT table-move
// ordering enabled, feeding each iteration's value to the next as the
// aspiration estimate / first guess.
IDResult iterative_deepening(const SearchDomain& dom, const Pos& root,
                             int max_depth, int step, Algorithm algo,
                             TTable& tt, const SearchOpts& opts = {},
                             const AlgoParams& params = {});

} // namespace gts
