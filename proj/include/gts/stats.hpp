#pragma once

#include <cstdint>

#include "gts/value.hpp"

namespace gts {

// Node accounting. Every node visit increments exactly one of
// {leaf_evals, interior_visits, tt_cutoff_visits}; total_nodes is their sum.
struct SearchStats {
    uint64_t leaf_evals = 0;
    uint64_t interior_visits = 0;
    uint64_t tt_cutoff_visits = 0;
    uint64_t tt_probes = 0;
    uint64_t tt_hits = 0;
    uint64_t tt_stores = 0;
    uint64_t mt_calls = 0;
    uint64_t researches = 0;
    uint64_t elapsed_us = 0;

    // 0 = unlimited. Checked against total_nodes() at every node entry.
    uint64_t node_budget = 0;

    uint64_t total_nodes() const { return leaf_evals + interior_visits + tt_cutoff_visits; }

    void charge() const {
        if (node_budget != 0 && total_nodes() >= node_budget) throw BudgetExceeded();
    }
};

} // namespace gts
