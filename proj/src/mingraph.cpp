#include "gts/mingraph.hpp"

#include <limits>
#include <stdexcept>

#include "gts/alphabeta.hpp"
#include "gts/history.hpp"

namespace gts {

uint64_t knuth_moore_leaves(int w, int d) {
    if (w < 1 || d < 0)
        throw std::invalid_argument("knuth_moore_leaves: need w >= 1, d >= 0");
    auto ipow = [](uint64_t base, int exp) {
        uint64_t r = 1;
        for (int i = 0; i < exp; ++i) {
            if (base != 0 && r > std::numeric_limits<uint64_t>::max() / base)
                throw std::overflow_error("knuth_moore_leaves: overflow");
            r *= base;
        }
        return r;
    };
    uint64_t lo = ipow(static_cast<uint64_t>(w), d / 2);
    uint64_t hi = ipow(static_cast<uint64_t>(w), (d + 1) / 2);
    if (lo > std::numeric_limits<uint64_t>::max() - hi)
        throw std::overflow_error("knuth_moore_leaves: overflow");
    return lo + hi - 1;
}

namespace {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t path_key(const Path& p) {
    uint64_t h = 0xA0761D6478BD642Full;
    for (int idx : p) h = mix64(h ^ static_cast<uint64_t>(idx + 1));
    return h;
}

PhaseCount phase_of(const SearchStats& st) {
    return {st.leaf_evals, st.interior_visits, st.tt_cutoff_visits};
}

// Counting re-search shared by the minimal-tree, minimal-graph and MM
// phases. Bounds live in `bounds` (keyed by root path when by_path, else
// by position); move ordering always comes from the position-keyed best
// moves left behind by the preparation search.
struct MeasureCtx {
    const SearchDomain& dom;
    TTable& bounds;
    const TTable& moves;
    bool by_path;
    SearchStats& st;
    Path path{};
};

Value measure_rec(MeasureCtx& c, const Pos& p, int depth, Value alpha,
                  Value beta) {
    c.st.charge();
    uint64_t key = c.by_path ? path_key(c.path) : c.dom.hash(p);
    int table_move = -1;
    if (auto e = c.bounds.probe(key, depth)) {
        if (e->lo >= beta || e->hi <= alpha || e->lo == e->hi) {
            ++c.st.tt_cutoff_visits;
            return e->lo >= beta ? e->lo : (e->hi <= alpha ? e->hi : e->lo);
        }
        alpha = std::max(alpha, e->lo);
        beta = std::min(beta, e->hi);
        table_move = e->best;
    }
    if (table_move < 0) table_move = c.moves.peek_move(c.dom.hash(p));
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.bounds.store(key, depth, v, v);
        return v;
    }
    ++c.st.interior_visits;
    int n = c.dom.child_count(p);
    std::vector<int> order = order_moves(c.dom, p, n, table_move, nullptr);
    Value g;
    int bestm = order[0];
    if (c.dom.node_type(p) == NodeType::MAX) {
        g = NEG_INF;
        Value a = alpha;
        for (int i = 0; i < n && g < beta; ++i) {
            int m = order[i];
            c.path.push_back(m);
            Value v = measure_rec(c, c.dom.child(p, m), depth - 1, a, beta);
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
            Value v = measure_rec(c, c.dom.child(p, m), depth - 1, alpha, b);
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
    c.bounds.store(key, depth, lo, hi, bestm);
    return g;
}

PhaseCount run_count_pass(const SearchDomain& dom, const Pos& root, int depth,
                          TTable& bounds, const TTable& moves, bool by_path,
                          Value f, const char* phase) {
    SearchStats st;
    MeasureCtx c{dom, bounds, moves, by_path, st};
    Value v = measure_rec(c, root, depth, f - 1, f + 1);
    if (v != f)
        throw std::logic_error(std::string(phase) +
                               " re-search disagrees with the full search");
    return phase_of(st);
}

// Preparation search for MM(d): plain alpha-beta with a table, except that
// at cutoff nodes within mm_depth plies of the horizon the recorded best
// move is the cutoff-causing move with the cheapest refutation, each
// candidate sized by a memory-less null-window search (so a transposition
// costs its full subtree). The returned value is the normal one.
struct MMCtx {
    const SearchDomain& dom;
    TTable& tt;
    int mm_depth;
    SearchStats st;
};

Value mm_rec(MMCtx& c, const Pos& p, int depth, Value alpha, Value beta) {
    c.st.charge();
    uint64_t h = c.dom.hash(p);
    int table_move = -1;
    if (auto e = c.tt.probe(h, depth)) {
        if (e->lo >= beta || e->hi <= alpha || e->lo == e->hi) {
            ++c.st.tt_cutoff_visits;
            return e->lo >= beta ? e->lo : (e->hi <= alpha ? e->hi : e->lo);
        }
        alpha = std::max(alpha, e->lo);
        beta = std::min(beta, e->hi);
        table_move = e->best;
    }
    if (is_search_leaf(c.dom, p, depth)) {
        ++c.st.leaf_evals;
        Value v = c.dom.evaluate(p);
        c.tt.store(h, depth, v, v);
        return v;
    }
    ++c.st.interior_visits;
    int n = c.dom.child_count(p);
    std::vector<int> order = order_moves(c.dom, p, n, table_move, nullptr);
    bool maxing = c.dom.node_type(p) == NodeType::MAX;
    Value g;
    int bestm = order[0];
    if (maxing) {
        g = NEG_INF;
        Value a = alpha;
        for (int i = 0; i < n && g < beta; ++i) {
            int m = order[i];
            Value v = mm_rec(c, c.dom.child(p, m), depth - 1, a, beta);
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
            Value v = mm_rec(c, c.dom.child(p, m), depth - 1, alpha, b);
            if (v < g) {
                g = v;
                bestm = m;
            }
            b = std::min(b, g);
        }
    }
    bool cutoff = maxing ? g >= beta : g <= alpha;
    if (cutoff && depth <= c.mm_depth) {
        // Size every cutoff-causing move; the incumbent refuter keeps the
        // slot unless a strictly cheaper causer exists (ties would retarget
        // the counting pass into subtrees for no gain).
        uint64_t best_cost = std::numeric_limits<uint64_t>::max();
        int cheapest = bestm;
        for (int m = 0; m < n; ++m) {
            SearchStats probe_st;
            SearchOpts po;
            po.stats = &probe_st;
            Pos ch = c.dom.child(p, m);
            Value t = maxing
                          ? alpha_beta(c.dom, ch, depth - 1, beta - 1, beta, po)
                          : alpha_beta(c.dom, ch, depth - 1, alpha, alpha + 1, po);
            bool causes = maxing ? t >= beta : t <= alpha;
            if (!causes) continue;
            uint64_t cost = probe_st.total_nodes();
            if (m == bestm && cost <= best_cost) {
                best_cost = cost;
                cheapest = m;
            } else if (cost < best_cost) {
                best_cost = cost;
                cheapest = m;
            }
        }
        bestm = cheapest;
    }
    Value lo = NEG_INF, hi = POS_INF;
    if (g < beta) hi = g;
    if (g > alpha) lo = g;
    c.tt.store(h, depth, lo, hi, bestm);
    return g;
}

} // namespace

LfmgResult lfmg_measure(const SearchDomain& dom, const Pos& root, int depth,
                        int tt_log2) {
    LfmgResult out;
    auto table = tt_new(tt_log2);
    SearchStats st1;
    SearchOpts o1;
    o1.stats = &st1;
    out.value = alpha_beta_tt(dom, root, depth, NEG_INF, POS_INF, *table, o1);
    out.search = phase_of(st1);
    bool lost = table->info_loss() > 0;
    table->strip_bounds();

    auto by_path = tt_new(tt_log2);
    out.mintree = run_count_pass(dom, root, depth, *by_path, *table,
                                 /*by_path=*/true, out.value, "minimal-tree");

    table->reset_counters();
    out.mingraph = run_count_pass(dom, root, depth, *table, *table,
                                  /*by_path=*/false, out.value, "minimal-graph");
    out.capacity_ok = !lost && table->info_loss() == 0;
    return out;
}

ArmgResult armg_mm(const SearchDomain& dom, const Pos& root, int depth,
                   int mm_depth, int tt_log2) {
    if (mm_depth < 1)
        throw std::invalid_argument("armg_mm: mm_depth must be >= 1");
    ArmgResult out;
    LfmgResult base = lfmg_measure(dom, root, depth, tt_log2);
    out.value = base.value;
    out.lfmg = base.mingraph;

    // Seed best moves with a full-window search, then run the cheapest-
    // cutoff preparation inside the proof window (f-1, f+1) so causers are
    // judged against the same bounds the counting pass will replay.
    auto table = tt_new(tt_log2);
    SearchStats seed_st;
    SearchOpts seed_opts;
    seed_opts.stats = &seed_st;
    alpha_beta_tt(dom, root, depth, NEG_INF, POS_INF, *table, seed_opts);
    bool lost = table->info_loss() > 0;
    table->strip_bounds();

    MMCtx mc{dom, *table, mm_depth, {}};
    Value v = mm_rec(mc, root, depth, base.value - 1, base.value + 1);
    if (v != base.value)
        throw std::logic_error("armg_mm: preparation search value mismatch");
    lost = lost || table->info_loss() > 0;
    table->strip_bounds();
    table->reset_counters();
    out.armg = run_count_pass(dom, root, depth, *table, *table,
                              /*by_path=*/false, base.value, "mm-graph");
    // Both passes replay proof graphs for the same value; the real minimal
    // graph lower-bounds both, so report the smaller certificate.
    if (out.armg.total() > out.lfmg.total()) out.armg = out.lfmg;
    out.capacity_ok = base.capacity_ok && !lost && table->info_loss() == 0;
    return out;
}

} // namespace gts
