#pragma once

#include "gts/domain.hpp"
#include "gts/history.hpp"
#include "gts/stats.hpp"
#include "gts/trace.hpp"
#include "gts/ttable.hpp"
#include "gts/value.hpp"

namespace gts {

// Optional instrumentation and ordering hooks shared by all searches.
// Bare calls run with natural (left-to-right) child order; the history
// table and MT table-move ordering are opt-in and enabled by the
// iterative-deepening and benchmark harnesses.
struct SearchOpts {
    SearchStats* stats = nullptr;
    TraceSink* trace = nullptr;
    HistoryTable* history = nullptr; // alpha-beta family ordering + credit
    bool mt_tt_ordering = false;     // MT: visit the table move first
};

inline bool is_search_leaf(const SearchDomain& dom, const Pos& p, int depth) {
    return depth <= 0 || dom.is_leaf(p);
}

// Mirrors table counter deltas into SearchStats for the enclosing scope
// (exception-safe, so budget aborts still account correctly).
class TTMirror {
public:
    TTMirror(TTable& tt, SearchStats& st)
        : tt_(tt), st_(st), before_(tt.counters()) {}
    ~TTMirror() {
        const TTCounters& a = tt_.counters();
        st_.tt_probes += a.probes - before_.probes;
        st_.tt_hits += a.hits - before_.hits;
        st_.tt_stores += a.stores - before_.stores;
    }
    TTMirror(const TTMirror&) = delete;
    TTMirror& operator=(const TTMirror&) = delete;

private:
    TTable& tt_;
    SearchStats& st_;
    TTCounters before_;
};

} // namespace gts
