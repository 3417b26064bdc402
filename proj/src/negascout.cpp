#include "gts/negascout.hpp"

#include <stdexcept>

namespace gts {
namespace {

struct Ctx {
    const SearchDomain& dom;
    SearchStats& st;
    TraceSink& tr;
    HistoryTable* hist;
    TTable* tt;
    Path path{};
};

// True when a fail-high/fail-low null-window result is already the exact
// child value: the child is a leaf, or every child of the child is at the
// frontier (the bottom two plies, where a failing search has evaluated
// all the leaves that matter). On uniform-depth trees this is the same
// test as "child or its first grandchild is a leaf"; on domains with
// early terminal positions that weaker test would accept bounds that are
// not exact, so the depth form is used.
bool near_frontier(Ctx& c, const Pos& child, int cdepth) {
    return cdepth <= 1 || c.dom.is_leaf(child);
}

Value ns_rec(Ctx& c, const Pos& p, int depth, Value alpha, Value beta) {
    c.st.charge();
    uint64_t h = 0;
    int table_move = -1;
    if (c.tt) {
        h = c.dom.hash(p);
        if (auto e = c.tt->probe(h, depth)) {
            if (e->lo >= beta) {
                ++c.st.tt_cutoff_visits;
                c.tr.ttcut(c.path, e->lo);
                return e->lo;
            }
            if (e->hi <= alpha) {
                ++c.st.tt_cutoff_visits;
                c.tr.ttcut(c.path, e->hi);
                return e->hi;
            }
            if (e->lo == e->hi) {
                ++c.st.tt_cutoff_visits;
                c.tr.ttcut(c.path, e->lo);
                return e->lo;
            }
            alpha = std::max(alpha, e->lo);
            beta = std::min(beta, e->hi);
            table_move = e->best;
        } else {
            table_move = c.tt->peek_move(h);
        }
    }
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.tr.leaf(c.path, v);
        if (c.tt) c.tt->store(h, depth, v, v);
        return v;
    }
    ++c.st.interior_visits;
    int n = c.dom.child_count(p);
    std::vector<int> order = order_moves(c.dom, p, n, table_move, c.hist);

    auto search_child = [&](int m, Value a, Value b) {
        c.path.push_back(m);
        Value v = ns_rec(c, c.dom.child(p, m), depth - 1, a, b);
        c.path.pop_back();
        return v;
    };

    Value g = search_child(order[0], alpha, beta);
    int bestm = order[0];
    // g stays a raw fail-soft value throughout; the alpha/beta clamp is
    // applied only to the null-window anchor, never to g itself. Clamping
    // g would crush an exact fail-high value down to the window edge and
    // the bottom-two-ply shortcut at the parent would then certify a bound
    // as exact.
    if (c.dom.node_type(p) == NodeType::MAX) {
        for (int i = 1; i < n && g < beta; ++i) {
            int m = order[i];
            Value a0 = std::max(alpha, g);
            Value t = search_child(m, a0, a0 + 1);
            if (t > a0) {
                if (near_frontier(c, c.dom.child(p, m), depth - 1)) {
                    // null-window result is already the exact child value
                } else if (t < beta) {
                    t = search_child(m, t, beta);
                }
            }
            if (t > g) {
                g = t;
                bestm = m;
            }
        }
    } else {
        for (int i = 1; i < n && g > alpha; ++i) {
            int m = order[i];
            Value b0 = std::min(beta, g);
            Value t = search_child(m, b0 - 1, b0);
            if (t < b0) {
                if (near_frontier(c, c.dom.child(p, m), depth - 1)) {
                    // null-window result is already the exact child value
                } else if (t > alpha) {
                    t = search_child(m, alpha, t);
                }
            }
            if (t < g) {
                g = t;
                bestm = m;
            }
        }
    }
    if (c.tt) {
        Value lo = NEG_INF, hi = POS_INF;
        if (g < beta) hi = g;
        if (g > alpha) lo = g;
        c.tt->store(h, depth, lo, hi, bestm);
    }
    if (c.hist && depth >= 1) update_history(*c.hist, c.dom, p, bestm, depth);
    return g;
}

TraceSink g_null_trace;

} // namespace

Value negascout(const SearchDomain& dom, const Pos& root, int depth,
                Value alpha, Value beta, TTable* tt, const SearchOpts& opts) {
    require_window(alpha, beta);
    SearchStats local;
    SearchStats& st = opts.stats ? *opts.stats : local;
    TraceSink& tr = opts.trace ? *opts.trace : g_null_trace;
    Ctx c{dom, st, tr, opts.history, tt};
    if (tt) {
        TTMirror mirror(*tt, st);
        return ns_rec(c, root, depth, alpha, beta);
    }
    return ns_rec(c, root, depth, alpha, beta);
}

Value aspiration_negascout(const SearchDomain& dom, const Pos& root, int depth,
                           Value estimate, Value delta, TTable* tt,
                           const SearchOpts& opts) {
    if (delta < 1)
        throw std::invalid_argument("aspiration_negascout: delta must be >= 1");
    Value alpha = estimate - delta;
    Value beta = estimate + delta;
    Value g = negascout(dom, root, depth, alpha, beta, tt, opts);
    if (g <= alpha) {
        if (opts.stats) ++opts.stats->researches;
        g = negascout(dom, root, depth, NEG_INF, g, tt, opts);
    } else if (g >= beta) {
        if (opts.stats) ++opts.stats->researches;
        g = negascout(dom, root, depth, g, POS_INF, tt, opts);
    }
    return g;
}

} // namespace gts
