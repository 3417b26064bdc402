#pragma once

#include "gts/search.hpp"
#include "gts/ttable.hpp"

namespace gts {

// NegaScout in the minimax view: first child searched with the full
// window, later siblings with null windows (g, g+1) at max nodes /
// (g-1, g) at min nodes, a wide re-search when the null-window result
// lands inside the window, and the last-two-ply shortcut that accepts the
// null-window result as exact. tt may be null (memory-less); with a table
// the usual bound prologue/epilogue and table-move-first ordering apply.
Value negascout(const SearchDomain& dom, const Pos& root, int depth,
                Value alpha, Value beta, TTable* tt,
                const SearchOpts& opts = {});

// Aspiration window around negascout: one search with
// (estimate-delta, estimate+delta), then at most one re-search with the
// fail-soft g as the new window edge. Returns the exact value.
Value aspiration_negascout(const SearchDomain& dom, const Pos& root, int depth,
                           Value estimate, Value delta, TTable* tt,
                           const SearchOpts& opts = {});

} // namespace gts
