#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gts/bench.hpp"
#include "gts/mt.hpp"
#include "gts/stockman.hpp"
#include "gts/synth.hpp"
#include "gts/ttable.hpp"

namespace {

using namespace gts;

struct SolveArgs {
    std::string domain;
    std::string algo;
    int depth = 4;
    int tt_log2 = 16;
    uint64_t seed = 1;
    uint64_t budget = 0;
    AlgoParams params;
    bool id = false;
    int step = 1;
};

Algorithm parse_algo_or_die(const std::string& name) {
    auto a = parse_algorithm(name);
    if (!a) throw CLI::ValidationError("algo", "unknown algorithm: " + name);
    return *a;
}

int cmd_solve(const SolveArgs& args) {
    std::vector<Instance> instances = make_instances(args.domain, {args.seed});
    Algorithm algo = parse_algo_or_die(args.algo);
    for (const Instance& inst : instances) {
        auto tt = tt_new(args.tt_log2);
        SearchStats st;
        st.node_budget = args.budget;
        SearchOpts o;
        o.stats = &st;
        auto t0 = std::chrono::steady_clock::now();
        if (algo == Algorithm::MTD_BEST) {
            int best = mtd_best(*inst.dom, inst.root, args.depth, *tt, o);
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cout << args.domain << ' ' << args.algo << " depth=" << args.depth
                      << " seed=" << inst.seed << " best_move=" << best
                      << " leaves=" << st.leaf_evals << " interior="
                      << st.interior_visits << " total=" << st.total_nodes()
                      << " tt_hits=" << st.tt_hits << " mt_calls=" << st.mt_calls
                      << " elapsed_us=" << us << '\n';
            continue;
        }
        Value v;
        if (args.id) {
            IDResult r = iterative_deepening(*inst.dom, inst.root, args.depth,
                                             args.step, algo, *tt, o, args.params);
            v = r.value;
        } else {
            v = run_algorithm(algo, *inst.dom, inst.root, args.depth, tt.get(), o,
                              args.params);
        }
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << args.domain << ' ' << args.algo << " depth=" << args.depth
                  << " seed=" << inst.seed << " value=" << v << " leaves="
                  << st.leaf_evals << " interior=" << st.interior_visits
                  << " total=" << st.total_nodes() << " tt_hits=" << st.tt_hits
                  << " mt_calls=" << st.mt_calls << " elapsed_us=" << us << '\n';
    }
    return 0;
}

int write_rows(const ExperimentConfig& cfg, std::vector<CsvRow> rows) {
    if (cfg.output.empty()) {
        write_csv(std::cout, std::move(rows));
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << cfg.output << '\n';
            return 1;
        }
        size_t n = rows.size();
        write_csv(out, std::move(rows));
        std::cerr << "wrote " << n << " rows to " << cfg.output << '\n';
    }
    return 0;
}

int cmd_compare(const std::string& config_path) {
    ExperimentConfig cfg = load_config_file(config_path);
    return write_rows(cfg, run_compare(cfg));
}

int cmd_memsweep(const std::string& config_path) {
    ExperimentConfig cfg = load_config_file(config_path);
    MemsweepResult res = run_memsweep(cfg);
    int rc = write_rows(cfg, std::move(res.rows));
    if (res.level_off_log2 >= 0)
        std::cerr << "mtd_sss level-off at tt_log2=" << res.level_off_log2 << '\n';
    return rc;
}

int cmd_mingraph(const std::string& domain, int depth, int mm, int tt_log2,
                 uint64_t seed) {
    std::vector<Instance> instances = make_instances(domain, {seed});
    const Instance& inst = instances.front();
    LfmgResult lfmg = lfmg_measure(*inst.dom, inst.root, depth, tt_log2);
    if (mm > 0) {
        ArmgResult armg = armg_mm(*inst.dom, inst.root, depth, mm, tt_log2);
        write_mingraph_csv(std::cout, domain, depth, lfmg, &armg);
        if (!armg.capacity_ok)
            std::cerr << "warning: table too small, counts are not exact "
                         "(raise --tt-log2)\n";
    } else {
        write_mingraph_csv(std::cout, domain, depth, lfmg, nullptr);
        if (!lfmg.capacity_ok)
            std::cerr << "warning: table too small, counts are not exact "
                         "(raise --tt-log2)\n";
    }
    return 0;
}

int cmd_trace(const std::string& domain, const std::string& algo, int depth,
              int tt_log2, uint64_t seed) {
    std::vector<Instance> instances = make_instances(domain, {seed});
    const Instance& inst = instances.front();
    run_trace(*inst.dom, inst.root, parse_algo_or_die(algo), depth, std::cout,
              tt_log2);
    return 0;
}

int cmd_equiv(int trees, uint64_t seed, int tt_log2) {
    int pass = 0, fail = 0, inconclusive = 0;
    auto report = [&](const std::string& label, const EquivReport& r) {
        const char* s = r.status == EquivStatus::PASS           ? "PASS"
                        : r.status == EquivStatus::INCONCLUSIVE ? "INCONCLUSIVE"
                                                                : "FAIL";
        std::cout << label << ": " << s;
        if (r.status == EquivStatus::FAIL)
            std::cout << " (diverges at leaf " << r.divergence
                      << ", sss=" << r.sss_leaves << " leaves/" << r.sss_value
                      << ", mtd=" << r.mtd_leaves << " leaves/" << r.mtd_value
                      << ")";
        if (r.status == EquivStatus::INCONCLUSIVE)
            std::cout << " (table lost " << r.info_loss << " entries)";
        std::cout << '\n';
        if (r.status == EquivStatus::PASS) ++pass;
        else if (r.status == EquivStatus::FAIL) ++fail;
        else ++inconclusive;
    };
    {
        std::vector<Instance> fx = make_instances("fixture", {0});
        report("fixture", check_equivalence(*fx.front().dom, 4, tt_log2));
    }
    for (int i = 0; i < trees; ++i) {
        SynthSpec spec;
        spec.width = 2 + static_cast<int>(i % 3);   // w in {2,3,4}
        spec.depth = 2 + static_cast<int>(i % 5);   // d in {2..6}
        spec.seed = seed + static_cast<uint64_t>(i);
        spec.ordering = Ordering::RANDOM;
        auto dom = synth_tree(spec);
        std::string label = "synth w=" + std::to_string(spec.width) +
                            " d=" + std::to_string(spec.depth) +
                            " seed=" + std::to_string(spec.seed);
        report(label, check_equivalence(*dom, spec.depth, tt_log2));
    }
    std::cout << "equiv: " << pass << " pass, " << inconclusive
              << " inconclusive, " << fail << " fail\n";
    return fail == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"game-tree search benchmark harness"};
    app.require_subcommand(1);

    SolveArgs solve;
    CLI::App* s = app.add_subcommand("solve", "run one algorithm at fixed depth");
    s->add_option("domain", solve.domain, "domain spec")->required();
    s->add_option("algo", solve.algo, "algorithm name")->required();
    s->add_option("--depth", solve.depth, "search depth")->required();
    s->add_option("--tt-log2", solve.tt_log2, "table capacity (log2)");
    s->add_option("--seed", solve.seed, "synth tree seed");
    s->add_option("--budget", solve.budget, "node budget (0 = unlimited)");
    s->add_option("--estimate", solve.params.estimate, "aspiration center / first guess");
    s->add_option("--delta", solve.params.delta, "aspiration half-width");
    s->add_option("--stepsize", solve.params.stepsize, "mtd_step jump");
    s->add_option("--etc-min-height", solve.params.etc_min_height,
                  "minimum height for enhanced transposition cutoffs");
    s->add_flag("--id", solve.id, "run under iterative deepening");
    s->add_option("--step", solve.step, "deepening increment");

    std::string compare_cfg;
    CLI::App* c = app.add_subcommand("compare", "algorithm comparison table");
    c->add_option("config", compare_cfg, "config file")->required();

    std::string memsweep_cfg;
    CLI::App* m = app.add_subcommand("memsweep", "table-size sensitivity sweep");
    m->add_option("config", memsweep_cfg, "config file")->required();

    std::string mg_domain;
    int mg_depth = 4, mg_mm = 0, mg_tt = 20;
    uint64_t mg_seed = 1;
    CLI::App* g = app.add_subcommand("mingraph", "minimal tree/graph measurement");
    g->add_option("domain", mg_domain, "domain spec")->required();
    g->add_option("--depth", mg_depth, "search depth")->required();
    g->add_option("--mm", mg_mm, "MM pass depth (0 = off)");
    g->add_option("--tt-log2", mg_tt, "table capacity (log2)");
    g->add_option("--seed", mg_seed, "synth tree seed");

    std::string tr_domain, tr_algo;
    int tr_depth = 4, tr_tt = 16;
    uint64_t tr_seed = 1;
    CLI::App* t = app.add_subcommand("trace", "emit a leaf/pass/op trace");
    t->add_option("domain", tr_domain, "domain spec")->required();
    t->add_option("algo", tr_algo, "algorithm name")->required();
    t->add_option("--depth", tr_depth, "search depth")->required();
    t->add_option("--tt-log2", tr_tt, "table capacity (log2)");
    t->add_option("--seed", tr_seed, "synth tree seed");

    int eq_trees = 100, eq_tt = 16;
    uint64_t eq_seed = 1;
    CLI::App* e = app.add_subcommand("equiv", "best-first/null-window equivalence check");
    e->add_option("--trees", eq_trees, "number of random trees");
    e->add_option("--seed", eq_seed, "first tree seed");
    e->add_option("--tt-log2", eq_tt, "table capacity (log2)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (s->parsed()) return cmd_solve(solve);
        if (c->parsed()) return cmd_compare(compare_cfg);
        if (m->parsed()) return cmd_memsweep(memsweep_cfg);
        if (g->parsed()) return cmd_mingraph(mg_domain, mg_depth, mg_mm, mg_tt, mg_seed);
        if (t->parsed()) return cmd_trace(tr_domain, tr_algo, tr_depth, tr_tt, tr_seed);
        if (e->parsed()) return cmd_equiv(eq_trees, eq_seed, eq_tt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
