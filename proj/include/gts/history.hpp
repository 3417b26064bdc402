#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gts/domain.hpp"

namespace gts {

// History heuristic: per move-feature counters, credited 2^depth whenever a
// move turns out best or causes a cutoff, so deep successes dominate.
class HistoryTable {
public:
    explicit HistoryTable(int feature_count) : score_(feature_count, 0) {}

    void credit(int feature, int depth) {
        int shift = std::min(depth, 62);
        score_[feature] += 1ull << shift;
    }

    uint64_t score(int feature) const { return score_[feature]; }
    int feature_count() const { return static_cast<int>(score_.size()); }
    void clear() { std::fill(score_.begin(), score_.end(), 0); }

private:
    std::vector<uint64_t> score_;
};

// Child visit order: the table move first, then the rest by descending
// history score with ties kept in natural (left-to-right) order.
inline std::vector<int> order_moves(const SearchDomain& dom, const Pos& p,
                                    int nchildren, int tt_best,
                                    const HistoryTable* hist) {
    std::vector<int> order(nchildren);
    std::iota(order.begin(), order.end(), 0);
    if (hist) {
        std::vector<uint64_t> key(nchildren);
        for (int i = 0; i < nchildren; ++i)
            key[i] = hist->score(dom.move_feature(p, i));
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return key[a] > key[b]; });
    }
    if (tt_best >= 0 && tt_best < nchildren) {
        auto it = std::find(order.begin(), order.end(), tt_best);
        std::rotate(order.begin(), it, it + 1);
    }
    return order;
}

inline void update_history(HistoryTable& hist, const SearchDomain& dom,
                           const Pos& p, int child_idx, int depth) {
    hist.credit(dom.move_feature(p, child_idx), depth);
}

} // namespace gts
