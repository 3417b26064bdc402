#include <doctest.h>

#include <sstream>

#include "gts/bench.hpp"
#include "gts/othello6.hpp"

using namespace gts;

namespace {

ExperimentConfig config_from(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

} // namespace

TEST_CASE("parse_config happy path") {
    auto cfg = config_from("# comment\n"
                           "domain = synth:w=3,d=4,order=random\n"
                           "algorithms = alpha_beta, mtd_sss # trailing comment\n"
                           "depths = 2, 4\n"
                           "tt_log2 = 16, 18\n"
                           "seeds = 7, 8, 9\n"
                           "step = 2\n"
                           "budget = 1000\n"
                           "estimate = 12\n"
                           "delta = 3\n"
                           "stepsize = 4\n"
                           "output = out.csv\n");
    CHECK(cfg.domain == "synth:w=3,d=4,order=random");
    CHECK(cfg.algorithms ==
          std::vector<Algorithm>{Algorithm::ALPHA_BETA, Algorithm::MTD_SSS});
    CHECK(cfg.depths == std::vector<int>{2, 4});
    CHECK(cfg.tt_log2 == std::vector<int>{16, 18});
    CHECK(cfg.seeds == std::vector<uint64_t>{7, 8, 9});
    CHECK(cfg.step == 2);
    CHECK(cfg.budget == 1000);
    CHECK(cfg.params.estimate == 12);
    CHECK(cfg.params.delta == 3);
    CHECK(cfg.params.stepsize == 4);
    CHECK(cfg.output == "out.csv");
}

TEST_CASE("parse_config rejects malformed input") {
    const char* good = "algorithms = alpha_beta\ndepths = 4\n";
    CHECK_NOTHROW(config_from(good));
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\ndepths = 4\nwat = 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\ndepths = x\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = quiescence\ndepths = 4\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\ndepths = 4\nstep = 3\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\ndepths = 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\ndepths = 4\ntt_log2 = 2\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from("depths = 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\n"), std::invalid_argument);
    CHECK_THROWS_AS(config_from("algorithms = alpha_beta\ndepths = 4\nno-equals\n"),
                    std::invalid_argument);
}

TEST_CASE("csv_line and quoting") {
    CsvRow r;
    r.domain = "fixture";
    r.algorithm = "alpha_beta";
    r.depth = 4;
    r.tt_log2 = 16;
    r.seed = 3;
    r.leaf_evals = 11;
    r.interior = 13;
    r.total_nodes = 24;
    r.tt_hits = 0;
    r.mt_calls = 0;
    r.value = 35;
    r.elapsed_us = 9;
    CHECK(csv_line(r) == "fixture,alpha_beta,4,16,3,11,13,24,0,0,35,9");
    r.domain = "synth:w=3,d=4";
    CHECK(csv_line(r) == "\"synth:w=3,d=4\",alpha_beta,4,16,3,11,13,24,0,0,35,9");
    r.domain = "a\"b";
    CHECK(csv_line(r).substr(0, 6) == "\"a\"\"b\"");
}

TEST_CASE("write_csv sorts on the key columns") {
    CsvRow a, b;
    a.domain = b.domain = "fixture";
    a.algorithm = "mtd_sss";
    b.algorithm = "alpha_beta";
    a.depth = b.depth = 4;
    std::ostringstream os;
    write_csv(os, {a, b});
    std::string out = os.str();
    CHECK(out.substr(0, std::string(CSV_HEADER).size()) == CSV_HEADER);
    CHECK(out.find("alpha_beta") < out.find("mtd_sss"));
}

TEST_CASE("make_instances expands domain specs") {
    CHECK(make_instances("fixture", {1}).size() == 1);
    CHECK(make_instances("tictactoe", {1}).size() == 1);
    CHECK(make_instances("othello6", {1}).size() == 1);
    auto suite = make_instances("othello6_suite", {1});
    CHECK(suite.size() == 20);
    CHECK(suite[0].seed == 0);
    CHECK(suite[19].seed == 19);
    // all suite instances share one domain object
    CHECK(suite[0].dom == suite[7].dom);
    auto synth = make_instances("synth:w=3,d=4,order=noisy,p=0.8", {5, 6});
    CHECK(synth.size() == 2);
    CHECK(synth[0].seed == 5);
    CHECK(synth[1].seed == 6);
    CHECK_THROWS_AS(make_instances("chess", {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_instances("synth:w=3,q=1", {1}), std::invalid_argument);
}

TEST_CASE("run_algorithm rejects mtd_best and missing tables") {
    auto insts = make_instances("fixture", {0});
    const auto& inst = insts[0];
    auto tt = tt_new(16);
    CHECK_THROWS_AS(run_algorithm(Algorithm::MTD_BEST, *inst.dom, inst.root, 4,
                                  tt.get()),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_algorithm(Algorithm::MTD_SSS, *inst.dom, inst.root, 4,
                                  nullptr),
                    std::invalid_argument);
    // full-window defaults give the exact value for every value algorithm
    for (Algorithm a : {Algorithm::MINIMAX, Algorithm::ALPHA_BETA,
                        Algorithm::ALPHA_BETA_TT, Algorithm::NEGASCOUT,
                        Algorithm::MTD_SSS, Algorithm::SSS_STAR,
                        Algorithm::ALPHA_BETA_ETC}) {
        auto fresh = tt_new(16);
        CHECK(run_algorithm(a, *inst.dom, inst.root, 4, fresh.get()) == 35);
    }
}

TEST_CASE("run_compare: frozen cumulative deepening rows on the fixture") {
    auto cfg = config_from("domain = fixture\n"
                           "algorithms = alpha_beta_tt, mtd_sss\n"
                           "depths = 4\n"
                           "tt_log2 = 16\n");
    auto rows = run_compare(cfg);
    REQUIRE(rows.size() == 8); // 2 algorithms x 4 deepening iterations
    // columns checked: algorithm, depth, cumulative leaves/interior/total,
    // tt_hits, mt_calls, value (elapsed_us is wall time and free to vary)
    struct Want {
        const char* algo;
        int depth;
        uint64_t leaves, interior, total, hits, calls;
        Value value;
    };
    const Want want[8] = {
        {"alpha_beta_tt", 1, 2, 1, 3, 0, 0, 0},
        {"alpha_beta_tt", 2, 5, 4, 9, 0, 0, 0},
        {"alpha_beta_tt", 3, 10, 10, 20, 0, 0, 0},
        {"alpha_beta_tt", 4, 21, 23, 44, 0, 0, 35},
        {"mtd_sss", 1, 2, 2, 5, 2, 2, 0},
        {"mtd_sss", 2, 5, 7, 14, 5, 4, 0},
        {"mtd_sss", 3, 10, 16, 29, 9, 6, 0},
        {"mtd_sss", 4, 18, 39, 63, 29, 10, 35},
    };
    for (int i = 0; i < 8; ++i) {
        INFO("row ", i);
        CHECK(rows[i].algorithm == want[i].algo);
        CHECK(rows[i].depth == want[i].depth);
        CHECK(rows[i].tt_log2 == 16);
        CHECK(rows[i].seed == 0);
        CHECK(rows[i].leaf_evals == want[i].leaves);
        CHECK(rows[i].interior == want[i].interior);
        CHECK(rows[i].total_nodes == want[i].total);
        CHECK(rows[i].tt_hits == want[i].hits);
        CHECK(rows[i].mt_calls == want[i].calls);
        CHECK(rows[i].value == want[i].value);
    }
}

TEST_CASE("run_compare rejects mtd_best") {
    auto cfg = config_from("domain = fixture\n"
                           "algorithms = mtd_best\n"
                           "depths = 4\n");
    CHECK_THROWS_AS(run_compare(cfg), std::invalid_argument);
}

TEST_CASE("run_memsweep: frozen cells and level-off capacity") {
    auto cfg = config_from("domain = othello6\n"
                           "algorithms = mtd_sss\n"
                           "depths = 4\n"
                           "tt_log2 = 6, 8, 10, 12\n");
    auto res = run_memsweep(cfg);
    REQUIRE(res.rows.size() == 4);
    const uint64_t want_leaves[4] = {102, 91, 89, 89};
    for (int i = 0; i < 4; ++i) {
        INFO("capacity 2^", res.rows[i].tt_log2);
        CHECK(res.rows[i].leaf_evals == want_leaves[i]);
        CHECK(res.rows[i].value == -2);
        CHECK(res.rows[i].depth == 4);
    }
    CHECK(res.level_off_log2 == 10);
}

TEST_CASE("run_memsweep without mtd_sss reports no level-off") {
    auto cfg = config_from("domain = fixture\n"
                           "algorithms = alpha_beta_tt\n"
                           "depths = 4\n"
                           "tt_log2 = 8, 10\n");
    auto res = run_memsweep(cfg);
    CHECK(res.rows.size() == 2);
    CHECK(res.level_off_log2 == -1);
}

TEST_CASE("run_trace line formats") {
    auto insts = make_instances("fixture", {0});
    const auto& inst = insts[0];
    SUBCASE("null-window driver: leaf, pass, ttcut lines") {
        std::ostringstream os;
        run_trace(*inst.dom, inst.root, Algorithm::MTD_SSS, 4, os);
        std::istringstream is(os.str());
        std::vector<std::string> lines;
        for (std::string l; std::getline(is, l);) lines.push_back(l);
        REQUIRE(lines.size() >= 7);
        CHECK(lines[0] == "leaf r.0.0.0.0 41");
        CHECK(lines[1] == "leaf r.0.0.1.0 12");
        CHECK(lines[2] == "leaf r.1.0.0.0 10");
        CHECK(lines[3] == "leaf r.1.0.1.0 36");
        CHECK(lines[4] == "pass 1 gamma=inf g=41 leaves=4");
        CHECK(lines[5] == "ttcut r.0.0.0.0 41");
        CHECK(lines[6] == "leaf r.0.0.0.1 5");
        CHECK(lines.back() == "pass 4 gamma=35 g=35 leaves=2");
    }
    SUBCASE("best-first driver: op lines") {
        std::ostringstream os;
        run_trace(*inst.dom, inst.root, Algorithm::SSS_STAR, 4, os);
        std::istringstream is(os.str());
        std::vector<std::string> lines;
        for (std::string l; std::getline(is, l);) lines.push_back(l);
        bool saw_op = false;
        for (auto& l : lines)
            if (l.rfind("op ", 0) == 0) saw_op = true;
        CHECK(saw_op);
        CHECK(lines[0] == "op 6 node=r state=L h=inf");
        CHECK(lines.back() == "op 1 node=r.1 state=S h=35");
    }
}

TEST_CASE("write_mingraph_csv emits one line per phase") {
    LfmgResult l;
    l.value = 35;
    l.search = {11, 13, 0};
    l.mintree = {7, 11, 0};
    l.mingraph = {7, 11, 0};
    std::ostringstream os;
    write_mingraph_csv(os, "fixture", 4, l);
    CHECK(os.str() == "domain,depth,phase,leaf,interior,total\n"
                      "fixture,4,search,11,13,24\n"
                      "fixture,4,mintree,7,11,18\n"
                      "fixture,4,mingraph,7,11,18\n");
    ArmgResult a;
    a.armg = {6, 10, 1};
    std::ostringstream os2;
    write_mingraph_csv(os2, "g", 5, l, &a);
    CHECK(os2.str().find("g,5,armg,6,10,17\n") != std::string::npos);
}

TEST_CASE("geomean") {
    CHECK(geomean({1.0, 4.0}) == doctest::Approx(2.0));
    CHECK(geomean({2.0, 2.0, 2.0}) == doctest::Approx(2.0));
    CHECK(geomean({0.5, 2.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(geomean({}), std::invalid_argument);
    CHECK_THROWS_AS(geomean({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(geomean({-1.0}), std::invalid_argument);
}
