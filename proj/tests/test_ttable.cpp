#include <doctest.h>

#include "gts/ttable.hpp"

using namespace gts;

TEST_CASE("store/probe round trip") {
    auto tt = tt_new(6);
    tt->store(0x1234, 3, 10, 50, 2);
    auto e = tt->probe(0x1234, 3);
    REQUIRE(e.has_value());
    CHECK(e->lo == 10);
    CHECK(e->hi == 50);
    CHECK(e->draft == 3);
    CHECK(e->best == 2);
    CHECK(tt->used() == 1);
    CHECK(tt->counters().probes == 1);
    CHECK(tt->counters().hits == 1);
    CHECK(tt->counters().stores == 1);
}

TEST_CASE("probe is draft-gated") {
    auto tt = tt_new(6);
    tt->store(0x42, 3, 5, 5);
    CHECK(!tt->probe(0x42, 5).has_value()); // too shallow for the request
    CHECK(tt->probe(0x42, 3).has_value());
    CHECK(tt->probe(0x42, 1).has_value()); // deeper entries satisfy shallow requests
    CHECK(tt->counters().probes == 3);
    CHECK(tt->counters().hits == 2);
    CHECK(!tt->probe(0x999, 0).has_value()); // unknown key
}

TEST_CASE("infinite bounds survive the packed encoding") {
    auto tt = tt_new(6);
    tt->store(7, 2, NEG_INF, 12);
    auto e = tt->probe(7, 2);
    REQUIRE(e.has_value());
    CHECK(e->lo == NEG_INF);
    CHECK(e->hi == 12);
    tt->store(8, 2, -VAL_MAX_LIMIT, VAL_MAX_LIMIT);
    e = tt->probe(8, 2);
    REQUIRE(e.has_value());
    CHECK(e->lo == -VAL_MAX_LIMIT);
    CHECK(e->hi == VAL_MAX_LIMIT);
    tt->store(9, 2, 99, POS_INF);
    e = tt->probe(9, 2);
    CHECK(e->lo == 99);
    CHECK(e->hi == POS_INF);
}

TEST_CASE("same key and draft merge-tightens the interval") {
    auto tt = tt_new(6);
    tt->store(0x7777, 4, 20, POS_INF, 1);
    tt->store(0x7777, 4, NEG_INF, 60);
    auto e = tt->probe(0x7777, 4);
    REQUIRE(e.has_value());
    CHECK(e->lo == 20);
    CHECK(e->hi == 60);
    CHECK(e->best == 1); // best == -1 keeps the previous move
    tt->store(0x7777, 4, 33, 33, 0);
    e = tt->probe(0x7777, 4);
    CHECK(e->lo == 33);
    CHECK(e->hi == 33);
    CHECK(e->best == 0);
    CHECK(tt->counters().overwrites == 2);
    CHECK(tt->used() == 1);
}

TEST_CASE("a different draft replaces the entry outright") {
    auto tt = tt_new(6);
    tt->store(0xabc, 2, 10, 40, 1);
    tt->store(0xabc, 5, NEG_INF, 7, 3);
    auto e = tt->probe(0xabc, 5);
    REQUIRE(e.has_value());
    CHECK(e->lo == NEG_INF);
    CHECK(e->hi == 7);
    CHECK(e->draft == 5);
    CHECK(e->best == 3);
}

TEST_CASE("replacement policies on key collisions") {
    // capacity 2^4: keys differing only above bit 4 share a slot
    uint64_t k1 = 0x5, k2 = 0x5 + (1ull << 20);

    SUBCASE("deep-preferred keeps the deeper entry") {
        auto tt = tt_new(4, ReplacePolicy::DEEP_PREFERRED);
        tt->store(k1, 6, 1, 2);
        tt->store(k2, 3, 7, 8); // shallower: dropped
        CHECK(tt->probe(k1, 6).has_value());
        CHECK(!tt->probe(k2, 0).has_value());
        CHECK(tt->counters().dropped == 1);
        CHECK(tt->counters().evictions == 0);
        tt->store(k2, 9, 7, 8); // deeper: evicts
        CHECK(!tt->probe(k1, 0).has_value());
        CHECK(tt->probe(k2, 9).has_value());
        CHECK(tt->counters().evictions == 1);
        CHECK(tt->info_loss() == 2);
    }
    SUBCASE("always replaces") {
        auto tt = tt_new(4, ReplacePolicy::ALWAYS);
        tt->store(k1, 6, 1, 2);
        tt->store(k2, 3, 7, 8);
        CHECK(!tt->probe(k1, 0).has_value());
        CHECK(tt->probe(k2, 3).has_value());
        CHECK(tt->counters().evictions == 1);
    }
    SUBCASE("a new generation outranks draft") {
        auto tt = tt_new(4, ReplacePolicy::DEEP_PREFERRED);
        tt->store(k1, 9, 1, 2);
        tt->bump_age();
        tt->store(k2, 2, 7, 8); // shallower but current-age: evicts the stale entry
        CHECK(tt->probe(k2, 2).has_value());
        CHECK(!tt->probe(k1, 0).has_value());
    }
}

TEST_CASE("peek_move ignores draft and leaves counters alone") {
    auto tt = tt_new(6);
    tt->store(0x31, 3, 10, 20, 4);
    auto before = tt->counters();
    CHECK(tt->peek_move(0x31) == 4);
    CHECK(tt->peek_move(0x32) == -1);
    CHECK(tt->counters().probes == before.probes);
    CHECK(tt->counters().hits == before.hits);
    // probe at a draft the entry cannot satisfy still misses
    CHECK(!tt->probe(0x31, 7).has_value());
    CHECK(tt->peek_move(0x31) == 4);
}

TEST_CASE("strip_bounds clears bounds but keeps moves and drafts") {
    auto tt = tt_new(6);
    tt->store(0x11, 4, 15, 15, 2);
    tt->store(0x12, 1, 3, 9, 0);
    tt->strip_bounds();
    auto e = tt->probe(0x11, 4);
    REQUIRE(e.has_value());
    CHECK(e->lo == NEG_INF);
    CHECK(e->hi == POS_INF);
    CHECK(e->best == 2);
    CHECK(e->draft == 4);
    CHECK(tt->peek_move(0x12) == 0);
}

TEST_CASE("clear empties the table") {
    auto tt = tt_new(6);
    tt->store(0x3, 1, 4, 4, 1);
    tt->clear();
    CHECK(tt->used() == 0);
    CHECK(!tt->probe(0x3, 0).has_value());
    CHECK(tt->peek_move(0x3) == -1);
}

TEST_CASE("capacity validation") {
    CHECK_THROWS_AS(tt_new(0), std::invalid_argument);
    CHECK_THROWS_AS(tt_new(31), std::invalid_argument);
    CHECK(tt_new(1)->capacity() == 2);
    CHECK(tt_new(10)->capacity() == 1024);
    CHECK_THROWS_AS(tt_new(6)->store(1, 1, 5, 4), std::logic_error); // lo > hi
}
