#include <doctest.h>

#include <random>

#include "gts/alphabeta.hpp"
#include "gts/othello6.hpp"
#include "gts/synth.hpp"
#include "gts/treespec.hpp"

using namespace gts;

namespace {

std::vector<Value> leaf_values(const VectorTrace& tr) {
    std::vector<Value> out;
    for (auto& l : tr.leaves) out.push_back(l.value);
    return out;
}

} // namespace

TEST_CASE("minimax evaluates the whole fixture") {
    auto t = fixture_tree();
    SearchStats st;
    SearchOpts o;
    o.stats = &st;
    CHECK(minimax(*t, t->root(), 4, o) == 35);
    CHECK(st.leaf_evals == 16);
    CHECK(st.interior_visits == 15);
}

TEST_CASE("alpha-beta on the fixture: 11 leaves, deep cutoff included") {
    auto t = fixture_tree();
    VectorTrace tr;
    SearchStats st;
    SearchOpts o;
    o.stats = &st;
    o.trace = &tr;
    CHECK(alpha_beta(*t, t->root(), 4, NEG_INF, POS_INF, o) == 35);
    CHECK(st.leaf_evals == 11);
    CHECK(st.interior_visits == 13);
    CHECK(leaf_values(tr) ==
          std::vector<Value>{41, 5, 12, 90, 101, 80, 10, 36, 35, 50, 36});
    CHECK(tr.leaves.front().path == Path{0, 0, 0, 0});
    CHECK(tr.leaves.back().path == Path{1, 1, 0, 1});
    // the deep cutoff: r.1.0.0.1 is never evaluated
    for (auto& l : tr.leaves) CHECK(l.path != Path{1, 0, 0, 1});
}

TEST_CASE("alpha-beta fail-soft cases on the fixture") {
    auto t = fixture_tree();
    // fail low: g is an upper bound tighter than alpha
    Value lo = alpha_beta(*t, t->root(), 4, 50, 60);
    CHECK(lo <= 50);
    CHECK(lo >= 35); // never below the true value
    // fail high
    Value hi = alpha_beta(*t, t->root(), 4, 10, 20);
    CHECK(hi >= 20);
    CHECK(hi <= 35);
    // exact inside the window
    CHECK(alpha_beta(*t, t->root(), 4, 30, 40) == 35);
    CHECK_THROWS_AS(alpha_beta(*t, t->root(), 4, 7, 7), std::invalid_argument);
}

TEST_CASE("postcondition certificates on random trees and windows") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 120; ++i) {
        SynthSpec sp;
        sp.width = 2 + (int)(rng() % 3);
        sp.depth = 2 + (int)(rng() % 4);
        sp.seed = rng();
        auto dom = synth_tree(sp);
        Value a = (Value)(rng() % 201) - 100;
        Value b = (Value)(rng() % 201) - 100;
        if (a >= b) b = a + 1 + (Value)(rng() % 10);
        ProofResult pr = alpha_beta_with_proof(*dom, dom->root(), sp.depth, a, b);
        VerifyOutcome vo = verify_postcondition(*dom, dom->root(), sp.depth, a, b, pr);
        INFO("seed=", sp.seed, " window=(", a, ",", b, ") reason=", vo.reason);
        REQUIRE(vo.ok);
        CHECK(pr.g == alpha_beta(*dom, dom->root(), sp.depth, a, b));
    }
}

TEST_CASE("verify_postcondition rejects doctored certificates") {
    auto t = fixture_tree();
    ProofResult pr = alpha_beta_with_proof(*t, t->root(), 4, NEG_INF, POS_INF);
    REQUIRE(verify_postcondition(*t, t->root(), 4, NEG_INF, POS_INF, pr).ok);
    pr.g += 1; // claim a different value than the certificates prove
    CHECK(!verify_postcondition(*t, t->root(), 4, NEG_INF, POS_INF, pr).ok);
}

TEST_CASE("alpha_beta_tt: warm identical re-search touches no leaves") {
    auto t = fixture_tree();
    auto tt = tt_new(16);
    SearchStats s1;
    SearchOpts o1;
    o1.stats = &s1;
    CHECK(alpha_beta_tt(*t, t->root(), 4, NEG_INF, POS_INF, *tt, o1) == 35);
    CHECK(s1.leaf_evals == 11);
    SearchStats s2;
    SearchOpts o2;
    o2.stats = &s2;
    CHECK(alpha_beta_tt(*t, t->root(), 4, NEG_INF, POS_INF, *tt, o2) == 35);
    CHECK(s2.leaf_evals == 0);
    CHECK(s2.tt_cutoff_visits == 1); // resolved at the root
}

TEST_CASE("alpha_beta_tt agrees with alpha_beta everywhere") {
    for (uint64_t seed : {11ull, 22ull, 33ull, 44ull}) {
        SynthSpec sp;
        sp.width = 3;
        sp.depth = 5;
        sp.seed = seed;
        auto dom = synth_tree(sp);
        Value plain = alpha_beta(*dom, dom->root(), 5, NEG_INF, POS_INF);
        auto tt = tt_new(16);
        CHECK(alpha_beta_tt(*dom, dom->root(), 5, NEG_INF, POS_INF, *tt) == plain);
    }
    auto oth = othello6();
    Value plain = alpha_beta(*oth, oth->root(), 5, NEG_INF, POS_INF);
    auto tt = tt_new(18);
    CHECK(alpha_beta_tt(*oth, oth->root(), 5, NEG_INF, POS_INF, *tt) == plain);
}

TEST_CASE("aspwin re-searches off the fail-soft bound") {
    auto t = fixture_tree();
    SUBCASE("window around the value needs no re-search") {
        SearchStats st;
        SearchOpts o;
        o.stats = &st;
        auto tt = tt_new(16);
        CHECK(aspwin(*t, t->root(), 4, 33, 5, tt.get(), o) == 35);
        CHECK(st.researches == 0);
    }
    SUBCASE("fail high re-searches once") {
        SearchStats st;
        SearchOpts o;
        o.stats = &st;
        auto tt = tt_new(16);
        CHECK(aspwin(*t, t->root(), 4, 10, 5, tt.get(), o) == 35);
        CHECK(st.researches == 1);
    }
    SUBCASE("fail low re-searches once") {
        SearchStats st;
        SearchOpts o;
        o.stats = &st;
        CHECK(aspwin(*t, t->root(), 4, 80, 5, nullptr, o) == 35);
        CHECK(st.researches == 1);
    }
    CHECK_THROWS_AS(aspwin(*t, t->root(), 4, 35, 0, nullptr), std::invalid_argument);
}

TEST_CASE("node budget aborts the search") {
    auto t = fixture_tree();
    SearchStats st;
    st.node_budget = 5;
    SearchOpts o;
    o.stats = &st;
    CHECK_THROWS_AS(minimax(*t, t->root(), 4, o), BudgetExceeded);
    CHECK(st.total_nodes() <= 5);
}

TEST_CASE("history heuristic reorders siblings") {
    // two searches of the same tree, one with history credit seeded toward
    // the strongest move feature, must explore no more leaves than natural order
    SynthSpec sp;
    sp.width = 4;
    sp.depth = 5;
    sp.seed = 77;
    auto dom = synth_tree(sp);
    SearchStats plain;
    SearchOpts op;
    op.stats = &plain;
    Value v1 = alpha_beta(*dom, dom->root(), 5, NEG_INF, POS_INF, op);

    CHECK(v1 == 64);
    CHECK(plain.leaf_evals == 320);

    HistoryTable hist(dom->feature_count());
    SearchStats warm;
    SearchOpts ow;
    ow.stats = &warm;
    ow.history = &hist;
    Value v2 = alpha_beta(*dom, dom->root(), 5, NEG_INF, POS_INF, ow);
    CHECK(v1 == v2);
    CHECK(hist.score(0) + hist.score(1) + hist.score(2) + hist.score(3) > 0);

    // a second run ordered by the learned scores prunes harder here
    SearchStats re;
    SearchOpts orr;
    orr.stats = &re;
    orr.history = &hist;
    CHECK(alpha_beta(*dom, dom->root(), 5, NEG_INF, POS_INF, orr) == v1);
    CHECK(re.leaf_evals == 241);
}

TEST_CASE("iterative deepening on the fixture") {
    auto t = fixture_tree();
    auto tt = tt_new(16);
    IDResult r = iterative_deepening(*t, t->root(), 4, 1, Algorithm::ALPHA_BETA_TT, *tt);
    REQUIRE(r.iterations.size() == 4);
    CHECK(r.iterations[0].depth == 1);
    CHECK(r.iterations[3].depth == 4);
    // interior nodes evaluate to 0 in the explicit tree, so shallow horizons see 0
    CHECK(r.iterations[0].value == 0);
    CHECK(r.iterations[3].value == 35);
    CHECK(r.value == 35);
    CHECK(r.iterations[3].best == 1); // the right root subtree carries 35
    CHECK(r.iterations[3].stats.leaf_evals == 11);
    CHECK(r.total.leaf_evals == 21);

    SUBCASE("step 2 ends exactly at max_depth") {
        auto tt2 = tt_new(16);
        IDResult r2 = iterative_deepening(*t, t->root(), 4, 2, Algorithm::ALPHA_BETA_TT, *tt2);
        REQUIRE(r2.iterations.size() == 2);
        CHECK(r2.iterations[0].depth == 2);
        CHECK(r2.iterations[1].depth == 4);
        CHECK(r2.value == 35);
        auto tt3 = tt_new(16);
        IDResult r3 = iterative_deepening(*t, t->root(), 3, 2, Algorithm::ALPHA_BETA_TT, *tt3);
        REQUIRE(r3.iterations.size() == 2);
        CHECK(r3.iterations[0].depth == 2);
        CHECK(r3.iterations[1].depth == 3); // odd max depth still terminates there
    }
    SUBCASE("budget abort keeps the completed prefix") {
        auto tt4 = tt_new(16);
        SearchStats st;
        st.node_budget = 40;
        SearchOpts o;
        o.stats = &st;
        CHECK_THROWS_AS(
            iterative_deepening(*t, t->root(), 4, 1, Algorithm::MINIMAX, *tt4, o),
            BudgetExceeded);
        CHECK(st.total_nodes() <= 40);
    }
}
