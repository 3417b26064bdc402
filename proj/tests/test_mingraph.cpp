#include <doctest.h>

#include <random>

#include "gts/alphabeta.hpp"
#include "gts/mingraph.hpp"
#include "gts/othello6.hpp"
#include "gts/synth.hpp"
#include "gts/treespec.hpp"

using namespace gts;

TEST_CASE("knuth_moore_leaves closed form") {
    CHECK(knuth_moore_leaves(2, 1) == 2);
    CHECK(knuth_moore_leaves(2, 2) == 3);
    CHECK(knuth_moore_leaves(2, 4) == 7);
    CHECK(knuth_moore_leaves(3, 3) == 11);   // 3^1 + 3^2 - 1
    CHECK(knuth_moore_leaves(4, 6) == 127);  // 4^3 + 4^3 - 1
    CHECK(knuth_moore_leaves(5, 0) == 1);
    CHECK(knuth_moore_leaves(38, 12) == 6021872767); // 38^6 * 2 - 1
    CHECK_THROWS_AS(knuth_moore_leaves(1000, 50), std::overflow_error);
}

TEST_CASE("lfmg on the fixture: frozen phase counts") {
    auto t = fixture_tree();
    auto r = lfmg_measure(*t, t->root(), 4, 16);
    CHECK(r.value == 35);
    CHECK(r.capacity_ok);
    CHECK(r.search.leaf == 11);
    CHECK(r.search.interior == 13);
    CHECK(r.search.tt_cut == 0);
    CHECK(r.mintree.leaf == 7); // knuth_moore_leaves(2, 4)
    CHECK(r.mintree.interior == 11);
    CHECK(r.mintree.tt_cut == 0);
    // the fixture has no transpositions: graph == tree
    CHECK(r.mingraph.leaf == 7);
    CHECK(r.mingraph.interior == 11);
    CHECK(r.mingraph.tt_cut == 0);
}

TEST_CASE("minimal tree matches the closed form on perfectly ordered trees") {
    for (int w = 2; w <= 4; ++w) {
        for (int d = 2; d <= 5; ++d) {
            SynthSpec sp;
            sp.width = w;
            sp.depth = d;
            sp.seed = 11;
            sp.ordering = Ordering::PERFECT;
            auto dom = synth_tree(sp);
            auto r = lfmg_measure(*dom, dom->root(), d, 20);
            INFO("w=", w, " d=", d);
            CHECK(r.value == *dom->known_value());
            CHECK(r.mintree.leaf == knuth_moore_leaves(w, d));
            // trees have no transpositions
            CHECK(r.mingraph.total() == r.mintree.total());
        }
    }
}

TEST_CASE("lfmg ordering: mintree <= search everywhere") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 30; ++i) {
        SynthSpec sp;
        sp.width = 2 + (int)(rng() % 3);
        sp.depth = 2 + (int)(rng() % 4);
        sp.seed = rng();
        auto dom = synth_tree(sp);
        auto r = lfmg_measure(*dom, dom->root(), sp.depth, 20);
        INFO("seed=", sp.seed);
        CHECK(r.value == minimax(*dom, dom->root(), sp.depth));
        CHECK(r.mingraph.total() <= r.mintree.total());
        CHECK(r.mintree.leaf <= r.search.leaf);
    }
}

TEST_CASE("transpositions make the minimal graph smaller than the tree") {
    auto oth = othello6();
    auto r = lfmg_measure(*oth, oth->root(), 6, 22);
    CHECK(r.capacity_ok);
    CHECK(r.mingraph.total() == 418);
    CHECK(r.mintree.total() == 420);
    CHECK(r.mingraph.total() < r.mintree.total());
}

TEST_CASE("alpha_beta_etc: same value, table probed ahead of expansion") {
    auto t = fixture_tree();
    auto tt = tt_new(16);
    CHECK(alpha_beta_etc(*t, t->root(), 4, NEG_INF, POS_INF, *tt) == 35);

    auto oth = othello6();
    for (int d : {4, 5}) {
        auto tta = tt_new(20);
        auto ttb = tt_new(20);
        SearchStats sa, sb;
        SearchOpts oa, ob;
        oa.stats = &sa;
        ob.stats = &sb;
        Value va = alpha_beta_tt(*oth, oth->root(), d, NEG_INF, POS_INF, *tta, oa);
        Value vb = alpha_beta_etc(*oth, oth->root(), d, NEG_INF, POS_INF, *ttb, ob);
        INFO("depth ", d);
        CHECK(va == vb);
        CHECK(sb.tt_probes > sa.tt_probes); // the extra child probes
    }
}

TEST_CASE("armg never exceeds lfmg and sometimes improves on it") {
    SUBCASE("variable-branching tree with a strict win") {
        SynthSpec sp;
        sp.width_min = 1;
        sp.width_max = 4;
        sp.depth = 6;
        sp.seed = 4;
        auto dom = synth_tree(sp);
        auto r = armg_mm(*dom, dom->root(), 6, 2, 20);
        CHECK(r.value == minimax(*dom, dom->root(), 6));
        CHECK(r.armg.total() == 50);
        CHECK(r.lfmg.total() == 53);
    }
    SUBCASE("uniform sweep stays within the bound") {
        for (uint64_t seed : {1, 2, 3, 8, 12, 19}) {
            SynthSpec sp;
            sp.width_min = 1;
            sp.width_max = 4;
            sp.depth = 6;
            sp.seed = seed;
            auto dom = synth_tree(sp);
            auto r = armg_mm(*dom, dom->root(), 6, 2, 20);
            INFO("seed=", seed);
            CHECK(r.value == minimax(*dom, dom->root(), 6));
            CHECK(r.armg.total() <= r.lfmg.total());
        }
    }
    SUBCASE("game graph") {
        auto oth = othello6();
        auto r = armg_mm(*oth, oth->root(), 5, 2, 20);
        CHECK(r.armg.total() == 159);
        CHECK(r.lfmg.total() == 170);
    }
    auto t = fixture_tree();
    CHECK_THROWS_AS(armg_mm(*t, t->root(), 4, 0, 16), std::invalid_argument);
}
