#include "gts/stockman.hpp"

#include <algorithm>
#include <stdexcept>

#include "gts/mt.hpp"
#include "gts/ttable.hpp"

namespace gts {
namespace {

struct OpenEntry {
    Path path;
    Pos pos;
    bool solved = false;
    Value merit = POS_INF;
};

TraceSink g_null_trace;

} // namespace

Value sss_star(const SearchDomain& dom, const Pos& root, int depth,
               const SearchOpts& opts) {
    if (dom.node_type(root) != NodeType::MAX)
        throw std::invalid_argument("sss_star: root must be a max node");
    SearchStats local;
    SearchStats& st = opts.stats ? *opts.stats : local;
    TraceSink& tr = opts.trace ? *opts.trace : g_null_trace;

    auto walk = [&](const Path& path) {
        Pos p = root;
        for (int i : path) p = dom.child(p, i);
        return p;
    };

    std::vector<OpenEntry> open;
    open.push_back({{}, root, false, POS_INF});
    while (!open.empty()) {
        OpenEntry cur = std::move(open.front());
        open.erase(open.begin());
        if (cur.solved && cur.path.empty()) return cur.merit; // termination
        int rem = depth - static_cast<int>(cur.path.size());
        if (!cur.solved) {
            if (is_search_leaf(dom, cur.pos, rem)) {
                // Case 4: solve the leaf at min(merit, eval), re-inserted in
                // front of all lesser-merit states, ties resolved left-first.
                st.charge();
                ++st.leaf_evals;
                tr.op(4, cur.path, 'L', cur.merit);
                Value v = dom.evaluate(cur.pos);
                tr.leaf(cur.path, v);
                OpenEntry solved{cur.path, cur.pos, true, std::min(cur.merit, v)};
                auto it = std::find_if(
                    open.begin(), open.end(), [&](const OpenEntry& e) {
                        return e.merit < solved.merit ||
                               (e.merit == solved.merit &&
                                path_before(solved.path, e.path));
                    });
                open.insert(it, std::move(solved));
            } else if (dom.node_type(cur.pos) == NodeType::MIN) {
                // Case 5: descend to the first child only.
                st.charge();
                ++st.interior_visits;
                tr.op(5, cur.path, 'L', cur.merit);
                Path cp = cur.path;
                cp.push_back(0);
                open.insert(open.begin(),
                            {std::move(cp), dom.child(cur.pos, 0), false, cur.merit});
            } else {
                // Case 6: expand all children of a max node, left-first.
                st.charge();
                ++st.interior_visits;
                tr.op(6, cur.path, 'L', cur.merit);
                int n = dom.child_count(cur.pos);
                std::vector<OpenEntry> block;
                block.reserve(n);
                for (int i = 0; i < n; ++i) {
                    Path cp = cur.path;
                    cp.push_back(i);
                    block.push_back(
                        {std::move(cp), dom.child(cur.pos, i), false, cur.merit});
                }
                open.insert(open.begin(),
                            std::make_move_iterator(block.begin()),
                            std::make_move_iterator(block.end()));
            }
        } else if (dom.node_type(cur.pos) == NodeType::MIN) {
            // Case 1: a solved min child settles its max parent; purge the
            // parent's other descendants from OPEN.
            tr.op(1, cur.path, 'S', cur.merit);
            Path pp = cur.path;
            pp.pop_back();
            std::erase_if(open, [&](const OpenEntry& e) {
                return path_is_ancestor(pp, e.path);
            });
            open.insert(open.begin(), {pp, walk(pp), true, cur.merit});
        } else {
            Path pp = cur.path;
            int last = pp.back();
            pp.pop_back();
            Pos par = walk(pp);
            if (last + 1 < dom.child_count(par)) {
                // Case 2: try the next brother under the min parent.
                tr.op(2, cur.path, 'S', cur.merit);
                Path bp = pp;
                bp.push_back(last + 1);
                open.insert(open.begin(),
                            {std::move(bp), dom.child(par, last + 1), false,
                             cur.merit});
            } else {
                // Case 3: last brother solved; the min parent is solved.
                tr.op(3, cur.path, 'S', cur.merit);
                open.insert(open.begin(), {std::move(pp), par, true, cur.merit});
            }
        }
    }
    throw std::logic_error("sss_star: OPEN list exhausted without termination");
}

EquivReport check_equivalence(const SearchDomain& dom, int depth,
                              int tt_capacity_log2) {
    EquivReport rep;
    VectorTrace sss_tr;
    SearchStats sss_st;
    SearchOpts sss_opts;
    sss_opts.stats = &sss_st;
    sss_opts.trace = &sss_tr;
    rep.sss_value = sss_star(dom, dom.root(), depth, sss_opts);
    rep.sss_leaves = sss_st.leaf_evals;

    auto tt = tt_new(tt_capacity_log2);
    VectorTrace mtd_tr;
    SearchStats mtd_st;
    SearchOpts mtd_opts;
    mtd_opts.stats = &mtd_st;
    mtd_opts.trace = &mtd_tr;
    rep.mtd_value = mtd_sss(dom, dom.root(), depth, *tt, mtd_opts);
    rep.mtd_leaves = mtd_st.leaf_evals;
    rep.info_loss = tt->info_loss();

    long n = static_cast<long>(
        std::min(sss_tr.leaves.size(), mtd_tr.leaves.size()));
    long diverge = -1;
    for (long i = 0; i < n; ++i) {
        if (!(sss_tr.leaves[i] == mtd_tr.leaves[i])) {
            diverge = i;
            break;
        }
    }
    if (diverge < 0 && sss_tr.leaves.size() != mtd_tr.leaves.size()) diverge = n;
    bool same = diverge < 0 && rep.sss_value == rep.mtd_value;
    if (same) {
        rep.status = EquivStatus::PASS;
    } else if (rep.info_loss > 0) {
        rep.status = EquivStatus::INCONCLUSIVE;
        rep.divergence = diverge;
    } else {
        rep.status = EquivStatus::FAIL;
        rep.divergence = diverge;
    }
    return rep;
}

} // namespace gts
