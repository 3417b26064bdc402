#include "gts/alphabeta.hpp"

#include <sstream>
#include <stdexcept>

namespace gts {
namespace {

struct Ctx {
    const SearchDomain& dom;
    SearchStats& st;
    TraceSink& tr;
    HistoryTable* hist;
    Path path{};
};

Value minimax_rec(Ctx& c, const Pos& p, int depth) {
    c.st.charge();
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.tr.leaf(c.path, v);
        return v;
    }
    ++c.st.interior_visits;
    int n = c.dom.child_count(p);
    bool maxing = c.dom.node_type(p) == NodeType::MAX;
    Value g = maxing ? NEG_INF : POS_INF;
    for (int i = 0; i < n; ++i) {
        c.path.push_back(i);
        Value v = minimax_rec(c, c.dom.child(p, i), depth - 1);
        c.path.pop_back();
        g = maxing ? std::max(g, v) : std::min(g, v);
    }
    return g;
}

Value ab_rec(Ctx& c, const Pos& p, int depth, Value alpha, Value beta) {
    c.st.charge();
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.tr.leaf(c.path, v);
        return v;
    }
    ++c.st.interior_visits;
    int n = c.dom.child_count(p);
    std::vector<int> order = order_moves(c.dom, p, n, -1, c.hist);
    Value g;
    int bestm = order[0];
    if (c.dom.node_type(p) == NodeType::MAX) {
        g = NEG_INF;
        Value a = alpha;
        for (int i = 0; i < n && g < beta; ++i) {
            int m = order[i];
            c.path.push_back(m);
            Value v = ab_rec(c, c.dom.child(p, m), depth - 1, a, beta);
            c.path.pop_back();
            if (v > g) {
                g = v;
                bestm = m;
            }
            a = std::max(a, g);
        }
    } else {
        g = POS_INF;
        Value b = beta;
        for (int i = 0; i < n && g > alpha; ++i) {
            int m = order[i];
            c.path.push_back(m);
            Value v = ab_rec(c, c.dom.child(p, m), depth - 1, alpha, b);
            c.path.pop_back();
            if (v < g) {
                g = v;
                bestm = m;
            }
            b = std::min(b, g);
        }
    }
    if (c.hist && depth >= 1) update_history(*c.hist, c.dom, p, bestm, depth);
    return g;
}

std::unique_ptr<ProofNode> make_leaf_node(Value v) {
    auto n = std::make_unique<ProofNode>();
    n->leaf = true;
    n->value = v;
    return n;
}

std::unique_ptr<ProofNode> make_inner_node(Value v) {
    auto n = std::make_unique<ProofNode>();
    n->value = v;
    return n;
}

ProofResult ab_proof_rec(Ctx& c, const Pos& p, int depth, Value alpha,
                         Value beta) {
    c.st.charge();
    ProofResult res;
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.tr.leaf(c.path, v);
        res.g = v;
        res.upper = make_leaf_node(v);
        res.lower = make_leaf_node(v);
        return res;
    }
    ++c.st.interior_visits;
    int n = c.dom.child_count(p);
    struct ChildOut {
        int idx;
        ProofResult r;
    };
    std::vector<ChildOut> outs;
    outs.reserve(n);
    Value g;
    int achiever = -1; // index into outs of the child attaining the final g
    if (c.dom.node_type(p) == NodeType::MAX) {
        g = NEG_INF;
        Value a = alpha;
        for (int m = 0; m < n && g < beta; ++m) {
            c.path.push_back(m);
            ProofResult r = ab_proof_rec(c, c.dom.child(p, m), depth - 1, a, beta);
            c.path.pop_back();
            outs.push_back({m, std::move(r)});
            if (outs.back().r.g > g) {
                g = outs.back().r.g;
                achiever = static_cast<int>(outs.size()) - 1;
            }
            a = std::max(a, g);
        }
        res.g = g;
        if (g < beta) {
            // No cutoff: every child searched and bounded above.
            auto up = make_inner_node(g);
            for (auto& o : outs) {
                o.r.upper->child_index = o.idx;
                up->kids.push_back(std::move(o.r.upper));
            }
            res.upper = std::move(up);
        }
        if (g > alpha) {
            auto low = make_inner_node(g);
            outs[achiever].r.lower->child_index = outs[achiever].idx;
            low->kids.push_back(std::move(outs[achiever].r.lower));
            res.lower = std::move(low);
        }
    } else {
        g = POS_INF;
        Value b = beta;
        for (int m = 0; m < n && g > alpha; ++m) {
            c.path.push_back(m);
            ProofResult r = ab_proof_rec(c, c.dom.child(p, m), depth - 1, alpha, b);
            c.path.pop_back();
            outs.push_back({m, std::move(r)});
            if (outs.back().r.g < g) {
                g = outs.back().r.g;
                achiever = static_cast<int>(outs.size()) - 1;
            }
            b = std::min(b, g);
        }
        res.g = g;
        if (g > alpha) {
            auto low = make_inner_node(g);
            for (auto& o : outs) {
                o.r.lower->child_index = o.idx;
                low->kids.push_back(std::move(o.r.lower));
            }
            res.lower = std::move(low);
        }
        if (g < beta) {
            auto up = make_inner_node(g);
            outs[achiever].r.upper->child_index = outs[achiever].idx;
            up->kids.push_back(std::move(outs[achiever].r.upper));
            res.upper = std::move(up);
        }
    }
    return res;
}

struct TTCtx : Ctx {
    TTable& tt;
    bool etc = false;
    int etc_min_height = 2;
};

Value ab_tt_rec(TTCtx& c, const Pos& p, int depth, Value alpha, Value beta) {
    c.st.charge();
    uint64_t h = c.dom.hash(p);
    int table_move = -1;
    if (auto e = c.tt.probe(h, depth)) {
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
        table_move = c.tt.peek_move(h);
    }
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.tr.leaf(c.path, v);
        c.tt.store(h, depth, v, v);
        return v;
    }
    int n = c.dom.child_count(p);
    bool maxing = c.dom.node_type(p) == NodeType::MAX;
    if (c.etc && depth > c.etc_min_height) {
        // Enhanced transposition cutoff: look every child up before
        // expanding any of them.
        for (int m = 0; m < n; ++m) {
            Pos ch = c.dom.child(p, m);
            if (auto e = c.tt.probe(c.dom.hash(ch), depth - 1)) {
                if (maxing && e->lo >= beta) {
                    ++c.st.tt_cutoff_visits;
                    c.tr.ttcut(c.path, e->lo);
                    return e->lo;
                }
                if (!maxing && e->hi <= alpha) {
                    ++c.st.tt_cutoff_visits;
                    c.tr.ttcut(c.path, e->hi);
                    return e->hi;
                }
            }
        }
    }
    ++c.st.interior_visits;
    std::vector<int> order = order_moves(c.dom, p, n, table_move, c.hist);
    Value g;
    int bestm = order[0];
    if (maxing) {
        g = NEG_INF;
        Value a = alpha;
        for (int i = 0; i < n && g < beta; ++i) {
            int m = order[i];
            c.path.push_back(m);
            Value v = ab_tt_rec(c, c.dom.child(p, m), depth - 1, a, beta);
            c.path.pop_back();
            if (v > g) {
                g = v;
                bestm = m;
            }
            a = std::max(a, g);
        }
    } else {
        g = POS_INF;
        Value b = beta;
        for (int i = 0; i < n && g > alpha; ++i) {
            int m = order[i];
            c.path.push_back(m);
            Value v = ab_tt_rec(c, c.dom.child(p, m), depth - 1, alpha, b);
            c.path.pop_back();
            if (v < g) {
                g = v;
                bestm = m;
            }
            b = std::min(b, g);
        }
    }
    Value lo = NEG_INF, hi = POS_INF;
    if (g < beta) hi = g;
    if (g > alpha) lo = g;
    c.tt.store(h, depth, lo, hi, bestm);
    if (c.hist && depth >= 1) update_history(*c.hist, c.dom, p, bestm, depth);
    return g;
}

struct Resolved {
    SearchStats& st;
    TraceSink& tr;
};

TraceSink g_null_trace;

Resolved resolve(const SearchOpts& opts, SearchStats& local) {
    return {opts.stats ? *opts.stats : local, opts.trace ? *opts.trace : g_null_trace};
}

} // namespace

Value minimax(const SearchDomain& dom, const Pos& root, int depth,
              const SearchOpts& opts) {
    SearchStats local;
    auto [st, tr] = resolve(opts, local);
    Ctx c{dom, st, tr, opts.history};
    return minimax_rec(c, root, depth);
}

Value alpha_beta(const SearchDomain& dom, const Pos& root, int depth,
                 Value alpha, Value beta, const SearchOpts& opts) {
    require_window(alpha, beta);
    SearchStats local;
    auto [st, tr] = resolve(opts, local);
    Ctx c{dom, st, tr, opts.history};
    return ab_rec(c, root, depth, alpha, beta);
}

ProofResult alpha_beta_with_proof(const SearchDomain& dom, const Pos& root,
                                  int depth, Value alpha, Value beta,
                                  const SearchOpts& opts) {
    require_window(alpha, beta);
    SearchStats local;
    auto [st, tr] = resolve(opts, local);
    Ctx c{dom, st, tr, opts.history};
    return ab_proof_rec(c, root, depth, alpha, beta);
}

Value alpha_beta_tt(const SearchDomain& dom, const Pos& root, int depth,
                    Value alpha, Value beta, TTable& tt,
                    const SearchOpts& opts) {
    require_window(alpha, beta);
    SearchStats local;
    auto [st, tr] = resolve(opts, local);
    TTCtx c{{dom, st, tr, opts.history}, tt};
    TTMirror mirror(tt, st);
    return ab_tt_rec(c, root, depth, alpha, beta);
}

Value alpha_beta_etc(const SearchDomain& dom, const Pos& root, int depth,
                     Value alpha, Value beta, TTable& tt,
                     const SearchOpts& opts, int etc_min_height) {
    require_window(alpha, beta);
    SearchStats local;
    auto [st, tr] = resolve(opts, local);
    TTCtx c{{dom, st, tr, opts.history}, tt};
    c.etc = true;
    c.etc_min_height = etc_min_height;
    TTMirror mirror(tt, st);
    return ab_tt_rec(c, root, depth, alpha, beta);
}

namespace {

struct TreeCheck {
    bool ok = true;
    std::string reason;
    Value value = 0;
};

TreeCheck fail_at(const Path& path, const std::string& what) {
    TreeCheck t;
    t.ok = false;
    t.reason = path_str(path) + ": " + what;
    return t;
}

// Walks a recorded solution tree against the domain. upper selects the
// T+ shape (all children at max nodes, one at min); lower is the dual.
TreeCheck check_solution_tree(const SearchDomain& dom, const Pos& p, int depth,
                              const ProofNode& nd, bool upper, Path& path) {
    if (nd.leaf) {
        if (!is_search_leaf(dom, p, depth))
            return fail_at(path, "leaf recorded at an interior position");
        Value v = dom.evaluate(p);
        if (nd.value != v) {
            std::ostringstream os;
            os << "leaf value " << nd.value << " != evaluation " << v;
            return fail_at(path, os.str());
        }
        TreeCheck t;
        t.value = v;
        return t;
    }
    if (is_search_leaf(dom, p, depth))
        return fail_at(path, "interior recorded at a leaf position");
    int n = dom.child_count(p);
    bool maxing = dom.node_type(p) == NodeType::MAX;
    bool full = (upper && maxing) || (!upper && !maxing);
    if (full) {
        if (static_cast<int>(nd.kids.size()) != n)
            return fail_at(path, "solution tree must keep every child here");
        for (int i = 0; i < n; ++i)
            if (nd.kids[i]->child_index != i)
                return fail_at(path, "children out of order in solution tree");
    } else {
        if (nd.kids.size() != 1)
            return fail_at(path, "solution tree must keep exactly one child here");
        int ci = nd.kids[0]->child_index;
        if (ci < 0 || ci >= n) return fail_at(path, "child index out of range");
    }
    Value agg = maxing ? NEG_INF : POS_INF;
    for (const auto& kid : nd.kids) {
        path.push_back(kid->child_index);
        TreeCheck t = check_solution_tree(dom, dom.child(p, kid->child_index),
                                          depth - 1, *kid, upper, path);
        path.pop_back();
        if (!t.ok) return t;
        agg = maxing ? std::max(agg, t.value) : std::min(agg, t.value);
    }
    if (nd.value != agg) {
        std::ostringstream os;
        os << "recorded value " << nd.value << " != backed-up value " << agg;
        return fail_at(path, os.str());
    }
    TreeCheck t;
    t.value = agg;
    return t;
}

} // namespace

VerifyOutcome verify_postcondition(const SearchDomain& dom, const Pos& p,
                                   int depth, Value alpha, Value beta,
                                   const ProofResult& result) {
    VerifyOutcome out;
    auto fail = [&](const std::string& why) {
        out.ok = false;
        out.reason = why;
        return out;
    };
    if (alpha >= beta) return fail("invalid window");
    Value g = result.g;
    bool need_upper = g < beta;  // exact and fail-low cases certify v <= g
    bool need_lower = g > alpha; // exact and fail-high cases certify v >= g
    if (need_upper && !result.upper) return fail("missing upper tree (T+)");
    if (need_lower && !result.lower) return fail("missing lower tree (T-)");
    Path path;
    if (result.upper) {
        TreeCheck t = check_solution_tree(dom, p, depth, *result.upper, true, path);
        if (!t.ok) return fail("T+ invalid: " + t.reason);
        if (t.value != g) {
            std::ostringstream os;
            os << "T+ value " << t.value << " != g " << g;
            return fail(os.str());
        }
    }
    if (result.lower) {
        TreeCheck t = check_solution_tree(dom, p, depth, *result.lower, false, path);
        if (!t.ok) return fail("T- invalid: " + t.reason);
        if (t.value != g) {
            std::ostringstream os;
            os << "T- value " << t.value << " != g " << g;
            return fail(os.str());
        }
    }
    return out;
}

Value aspwin(const SearchDomain& dom, const Pos& root, int depth,
             Value estimate, Value delta, TTable* tt, const SearchOpts& opts) {
    if (delta < 1) throw std::invalid_argument("aspwin: delta must be >= 1");
    auto search = [&](Value a, Value b) {
        return tt ? alpha_beta_tt(dom, root, depth, a, b, *tt, opts)
                  : alpha_beta(dom, root, depth, a, b, opts);
    };
    Value alpha = estimate - delta;
    Value beta = estimate + delta;
    Value g = search(alpha, beta);
    if (g <= alpha) {
        if (opts.stats) ++opts.stats->researches;
        g = search(NEG_INF, g);
    } else if (g >= beta) {
        if (opts.stats) ++opts.stats->researches;
        g = search(g, POS_INF);
    }
    return g;
}

} // namespace gts
