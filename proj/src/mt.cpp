#include "gts/mt.hpp"

#include <stdexcept>

namespace gts {
namespace {

struct Ctx {
    const SearchDomain& dom;
    SearchStats& st;
    TraceSink& tr;
    TTable& tt;
    bool tt_ordering;
    Path path{};
};

Value mt_rec(Ctx& c, const Pos& p, int depth, Value gamma) {
    c.st.charge();
    uint64_t h = c.dom.hash(p);
    Value g;
    int bestm = -1;
    if (is_search_leaf(c.dom, p, depth)) {
        TTData bounds;
        if (auto e = c.tt.probe(h, depth)) bounds = *e;
        if (bounds.lo == NEG_INF && bounds.hi == POS_INF) {
            ++c.st.leaf_evals;
            g = c.dom.evaluate(p);
            c.tr.leaf(c.path, g);
        } else {
            ++c.st.tt_cutoff_visits;
            g = bounds.hi == POS_INF ? bounds.lo : bounds.hi;
            c.tr.ttcut(c.path, g);
        }
    } else {
        ++c.st.interior_visits;
        int n = c.dom.child_count(p);
        std::vector<int> order =
            order_moves(c.dom, p, n, c.tt_ordering ? c.tt.peek_move(h) : -1, nullptr);
        if (c.dom.node_type(p) == NodeType::MAX) {
            g = NEG_INF;
            for (int i = 0; i < n && g < gamma; ++i) {
                int m = order[i];
                Pos ch = c.dom.child(p, m);
                Value child_hi = POS_INF;
                if (auto e = c.tt.probe(c.dom.hash(ch), depth - 1)) child_hi = e->hi;
                Value gp;
                if (child_hi >= gamma) {
                    c.path.push_back(m);
                    gp = mt_rec(c, ch, depth - 1, gamma);
                    c.path.pop_back();
                } else {
                    gp = child_hi; // refuted child: use the stored bound
                }
                if (gp > g) {
                    g = gp;
                    bestm = m;
                }
            }
        } else {
            g = POS_INF;
            for (int i = 0; i < n && g >= gamma; ++i) {
                int m = order[i];
                Pos ch = c.dom.child(p, m);
                Value child_lo = NEG_INF;
                if (auto e = c.tt.probe(c.dom.hash(ch), depth - 1)) child_lo = e->lo;
                Value gp;
                if (child_lo < gamma) {
                    c.path.push_back(m);
                    gp = mt_rec(c, ch, depth - 1, gamma);
                    c.path.pop_back();
                } else {
                    gp = child_lo;
                }
                if (gp < g) {
                    g = gp;
                    bestm = m;
                }
            }
        }
    }
    // Store the one bound this pass established.
    if (g >= gamma)
        c.tt.store(h, depth, g, POS_INF, bestm);
    else
        c.tt.store(h, depth, NEG_INF, g, bestm);
    return g;
}

TraceSink g_null_trace;

struct Driver {
    Value f_minus = NEG_INF;
    Value f_plus = POS_INF;
    Value g = 0;
    int passes = 0;
};

constexpr int driver_pass_cap(Value val_max) { return 4 * val_max + 8; }

Value run_driver(const SearchDomain& dom, const Pos& root, int depth,
                 TTable& tt, const SearchOpts& opts, Value first_bound,
                 auto next_bound) {
    SearchStats local;
    SearchStats& st = opts.stats ? *opts.stats : local;
    TraceSink& tr = opts.trace ? *opts.trace : g_null_trace;
    SearchOpts call_opts = opts;
    call_opts.stats = &st;
    Driver d;
    Value bound = first_bound;
    const int cap = driver_pass_cap(dom.val_max());
    for (;;) {
        if (!(d.f_minus < bound && bound <= d.f_plus))
            throw std::logic_error("mtd: driver produced an illegal bound");
        ++d.passes;
        if (d.passes > cap) throw std::logic_error("mtd: driver failed to converge");
        uint64_t leaves0 = st.leaf_evals;
        d.g = mt(dom, root, bound, depth, tt, call_opts);
        if (d.g >= bound)
            d.f_minus = std::max(d.f_minus, d.g);
        else
            d.f_plus = std::min(d.f_plus, d.g);
        tr.pass(d.passes, bound, d.g, st.leaf_evals - leaves0);
        if (d.f_minus > d.f_plus)
            throw std::logic_error("mtd: inconsistent bounds (f- > f+)");
        if (d.f_minus == d.f_plus) return d.g;
        bound = next_bound(d);
    }
}

} // namespace

Value mt(const SearchDomain& dom, const Pos& root, Value gamma, int depth,
         TTable& tt, const SearchOpts& opts) {
    if (gamma <= NEG_INF || gamma > POS_INF)
        throw std::invalid_argument("mt: gamma out of range");
    SearchStats local;
    SearchStats& st = opts.stats ? *opts.stats : local;
    TraceSink& tr = opts.trace ? *opts.trace : g_null_trace;
    Ctx c{dom, st, tr, tt, opts.mt_tt_ordering};
    ++st.mt_calls;
    TTMirror mirror(tt, st);
    return mt_rec(c, root, depth, gamma);
}

Value mtd(const SearchDomain& dom, const Pos& root, int depth,
          const MTDriverSpec& spec, TTable& tt, const SearchOpts& opts) {
    switch (spec.rule) {
    case NextRule::PLUS_INF:
        return run_driver(dom, root, depth, tt, opts, POS_INF,
                          [](const Driver& d) { return d.f_plus; });
    case NextRule::MINUS_INF:
        return run_driver(dom, root, depth, tt, opts, NEG_INF + 1,
                          [](const Driver& d) { return d.f_minus + 1; });
    case NextRule::GUESS:
        if (spec.f0 <= NEG_INF || spec.f0 >= POS_INF)
            throw std::invalid_argument("mtd_f: f0 must be finite");
        return run_driver(dom, root, depth, tt, opts, spec.f0,
                          [](const Driver& d) {
                              return d.g == d.f_minus ? d.g + 1 : d.g;
                          });
    case NextRule::BISECT: {
        Value vm = dom.val_max();
        auto mid = [vm](const Driver& d) {
            long long lo = d.f_minus == NEG_INF ? -(long long)(vm + 1) : d.f_minus;
            long long hi = d.f_plus == POS_INF ? (long long)(vm + 1) : d.f_plus;
            Value bound = static_cast<Value>((lo + hi + 1) >> 1); // ceiling
            bound = std::max(bound, d.f_minus + 1);
            if (d.f_plus != POS_INF) bound = std::min(bound, d.f_plus);
            return bound;
        };
        Driver d0;
        return run_driver(dom, root, depth, tt, opts, mid(d0), mid);
    }
    case NextRule::STEP:
        if (spec.stepsize < 1)
            throw std::invalid_argument("mtd_step: stepsize must be >= 1");
        return run_driver(dom, root, depth, tt, opts, POS_INF,
                          [s = spec.stepsize](const Driver& d) {
                              return std::max(d.f_minus + 1, d.g - s);
                          });
    case NextRule::BEST:
        throw std::invalid_argument("mtd: BEST selects a move; use mtd_best");
    }
    throw std::logic_error("mtd: unknown rule");
}

Value mtd_sss(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
              const SearchOpts& opts) {
    return mtd(dom, root, depth, {NextRule::PLUS_INF}, tt, opts);
}

Value mtd_dual(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
               const SearchOpts& opts) {
    return mtd(dom, root, depth, {NextRule::MINUS_INF}, tt, opts);
}

Value mtd_f(const SearchDomain& dom, const Pos& root, Value f0, int depth,
            TTable& tt, const SearchOpts& opts) {
    MTDriverSpec spec;
    spec.rule = NextRule::GUESS;
    spec.f0 = f0;
    return mtd(dom, root, depth, spec, tt, opts);
}

Value mtd_bi(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
             const SearchOpts& opts) {
    return mtd(dom, root, depth, {NextRule::BISECT}, tt, opts);
}

Value mtd_step(const SearchDomain& dom, const Pos& root, Value stepsize,
               int depth, TTable& tt, const SearchOpts& opts) {
    MTDriverSpec spec;
    spec.rule = NextRule::STEP;
    spec.stepsize = stepsize;
    return mtd(dom, root, depth, spec, tt, opts);
}

int mtd_best(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
             const SearchOpts& opts) {
    SearchStats local;
    SearchStats& st = opts.stats ? *opts.stats : local;
    TraceSink& tr = opts.trace ? *opts.trace : g_null_trace;
    SearchOpts call_opts = opts;
    call_opts.stats = &st;
    if (is_search_leaf(dom, root, depth))
        throw std::invalid_argument("mtd_best: root has no moves");
    int n = dom.child_count(root);
    if (n == 1) return 0;
    bool maxing = dom.node_type(root) == NodeType::MAX;
    std::vector<Value> lo(n, NEG_INF), hi(n, POS_INF);
    int cand = 0;
    int passes = 0;
    const int cap = (n + 1) * driver_pass_cap(dom.val_max());
    for (;;) {
        if (++passes > cap) throw std::logic_error("mtd_best: failed to converge");
        if (maxing) {
            // Opponents' best upper bound; prove cand's lower bound beats it.
            Value hstar = NEG_INF;
            int argmax = -1;
            for (int j = 0; j < n; ++j) {
                if (j != cand && hi[j] > hstar) hstar = hi[j];
                if (argmax < 0 || hi[j] > hi[argmax]) argmax = j;
            }
            if (lo[cand] >= hstar) return cand;
            if (hstar > hi[cand]) {
                cand = argmax;
                continue;
            }
            Value gamma = hstar > lo[cand] ? hstar : lo[cand] + 1;
            uint64_t leaves0 = st.leaf_evals;
            Value g = mt(dom, dom.child(root, cand), gamma, depth - 1, tt, call_opts);
            tr.pass(passes, gamma, g, st.leaf_evals - leaves0);
            if (g >= gamma) {
                lo[cand] = std::max(lo[cand], g);
            } else {
                hi[cand] = std::min(hi[cand], g);
                int next = 0;
                for (int j = 1; j < n; ++j)
                    if (hi[j] > hi[next]) next = j;
                cand = next;
            }
        } else {
            Value lstar = POS_INF;
            int argmin = -1;
            for (int j = 0; j < n; ++j) {
                if (j != cand && lo[j] < lstar) lstar = lo[j];
                if (argmin < 0 || lo[j] < lo[argmin]) argmin = j;
            }
            if (hi[cand] <= lstar) return cand;
            if (lstar < lo[cand]) {
                cand = argmin;
                continue;
            }
            Value gamma = lstar > lo[cand] ? lstar : lo[cand] + 1;
            uint64_t leaves0 = st.leaf_evals;
            Value g = mt(dom, dom.child(root, cand), gamma, depth - 1, tt, call_opts);
            tr.pass(passes, gamma, g, st.leaf_evals - leaves0);
            if (g < gamma) {
                hi[cand] = std::min(hi[cand], g);
            } else {
                lo[cand] = std::max(lo[cand], g);
                int next = 0;
                for (int j = 1; j < n; ++j)
                    if (lo[j] < lo[next]) next = j;
                cand = next;
            }
        }
    }
}

} // namespace gts
