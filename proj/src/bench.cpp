#include "gts/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gts/mt.hpp"
#include "gts/negascout.hpp"
#include "gts/othello6.hpp"
#include "gts/stockman.hpp"
#include "gts/synth.hpp"
#include "gts/tictactoe.hpp"
#include "gts/treespec.hpp"

namespace gts {
namespace {

// Fixed generation seed of the 20-position benchmark suite; the CSV seed
// column carries the position index.
constexpr uint64_t SUITE_SEED = 12345;
constexpr int SUITE_SIZE = 20;

constexpr int TT_LOG2_MIN = 6;
constexpr int TT_LOG2_MAX = 26;

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void bad_config(const std::string& what) {
    throw std::invalid_argument("config: " + what);
}

long long parse_ll(const std::string& key, const std::string& tok) {
    try {
        size_t used = 0;
        long long v = std::stoll(trim(tok), &used);
        if (used != trim(tok).size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        bad_config("bad integer '" + tok + "' for key '" + key + "'");
    }
}

double parse_double(const std::string& key, const std::string& tok) {
    try {
        size_t used = 0;
        double v = std::stod(trim(tok), &used);
        if (used != trim(tok).size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        bad_config("bad number '" + tok + "' for key '" + key + "'");
    }
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.algorithms.empty()) bad_config("no algorithms listed");
    if (cfg.depths.empty()) bad_config("no depths listed");
    for (int d : cfg.depths)
        if (d < 1) bad_config("depths must be >= 1");
    if (cfg.tt_log2.empty()) bad_config("no tt_log2 capacities listed");
    for (int c : cfg.tt_log2)
        if (c < TT_LOG2_MIN || c > TT_LOG2_MAX)
            bad_config("tt_log2 must lie in [" + std::to_string(TT_LOG2_MIN) +
                       ", " + std::to_string(TT_LOG2_MAX) + "]");
    if (cfg.step != 1 && cfg.step != 2) bad_config("step must be 1 or 2");
    if (cfg.params.delta < 1) bad_config("delta must be >= 1");
    if (cfg.params.stepsize < 1) bad_config("stepsize must be >= 1");
}

void add_stats(SearchStats& dst, const SearchStats& src) {
    dst.leaf_evals += src.leaf_evals;
    dst.interior_visits += src.interior_visits;
    dst.tt_cutoff_visits += src.tt_cutoff_visits;
    dst.tt_probes += src.tt_probes;
    dst.tt_hits += src.tt_hits;
    dst.tt_stores += src.tt_stores;
    dst.mt_calls += src.mt_calls;
    dst.researches += src.researches;
    dst.elapsed_us += src.elapsed_us;
}

uint64_t us_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(dt).count());
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    q += '"';
    return q;
}

} // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            bad_config("line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "domain") {
            cfg.domain = val;
        } else if (key == "algorithms") {
            cfg.algorithms.clear();
            for (const std::string& tok : split(val, ',')) {
                auto a = parse_algorithm(trim(tok));
                if (!a) bad_config("unknown algorithm '" + trim(tok) + "'");
                cfg.algorithms.push_back(*a);
            }
        } else if (key == "depths") {
            cfg.depths.clear();
            for (const std::string& tok : split(val, ','))
                cfg.depths.push_back(static_cast<int>(parse_ll(key, tok)));
        } else if (key == "tt_log2") {
            cfg.tt_log2.clear();
            for (const std::string& tok : split(val, ','))
                cfg.tt_log2.push_back(static_cast<int>(parse_ll(key, tok)));
        } else if (key == "seeds") {
            cfg.seeds.clear();
            for (const std::string& tok : split(val, ','))
                cfg.seeds.push_back(static_cast<uint64_t>(parse_ll(key, tok)));
        } else if (key == "step") {
            cfg.step = static_cast<int>(parse_ll(key, val));
        } else if (key == "output") {
            cfg.output = val;
        } else if (key == "budget") {
            cfg.budget = static_cast<uint64_t>(parse_ll(key, val));
        } else if (key == "estimate") {
            cfg.params.estimate = static_cast<Value>(parse_ll(key, val));
        } else if (key == "delta") {
            cfg.params.delta = static_cast<Value>(parse_ll(key, val));
        } else if (key == "stepsize") {
            cfg.params.stepsize = static_cast<Value>(parse_ll(key, val));
        } else if (key == "etc_min_height") {
            cfg.params.etc_min_height = static_cast<int>(parse_ll(key, val));
        } else {
            bad_config("unknown key '" + key + "' (line " + std::to_string(lineno) + ")");
        }
    }
    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

const char* const CSV_HEADER =
    "domain,algorithm,depth,tt_log2,seed,leaf_evals,interior,total_nodes,"
    "tt_hits,mt_calls,value,elapsed_us";

std::string csv_line(const CsvRow& r) {
    std::ostringstream os;
    os << csv_field(r.domain) << ',' << r.algorithm << ',' << r.depth << ','
       << r.tt_log2 << ',' << r.seed << ',' << r.leaf_evals << ',' << r.interior
       << ',' << r.total_nodes << ',' << r.tt_hits << ',' << r.mt_calls << ','
       << r.value << ',' << r.elapsed_us;
    return os.str();
}

void write_csv(std::ostream& out, std::vector<CsvRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
        return std::tie(a.domain, a.algorithm, a.depth, a.tt_log2, a.seed) <
               std::tie(b.domain, b.algorithm, b.depth, b.tt_log2, b.seed);
    });
    out << CSV_HEADER << '\n';
    for (const CsvRow& r : rows) out << csv_line(r) << '\n';
}

std::vector<Instance> make_instances(const std::string& spec,
                                     const std::vector<uint64_t>& seeds) {
    std::vector<Instance> out;
    auto single = [&out](std::shared_ptr<const SearchDomain> d) {
        Pos r = d->root();
        out.push_back({0, std::move(d), r});
    };
    if (spec == "fixture") {
        single(std::shared_ptr<const SearchDomain>(fixture_tree()));
    } else if (spec == "tictactoe") {
        single(std::shared_ptr<const SearchDomain>(tictactoe()));
    } else if (spec == "othello6") {
        single(std::shared_ptr<const SearchDomain>(othello6()));
    } else if (spec == "othello6_suite") {
        std::shared_ptr<const SearchDomain> d(othello6());
        std::vector<Pos> roots = othello6_positions(SUITE_SIZE, SUITE_SEED);
        for (int i = 0; i < static_cast<int>(roots.size()); ++i)
            out.push_back({static_cast<uint64_t>(i), d, roots[i]});
    } else if (spec.rfind("tree:", 0) == 0) {
        single(std::shared_ptr<const SearchDomain>(load_tree_file(spec.substr(5))));
    } else if (spec.rfind("synth:", 0) == 0) {
        SynthSpec base;
        for (const std::string& item : split(spec.substr(6), ',')) {
            std::string kv = trim(item);
            if (kv.empty()) continue;
            size_t eq = kv.find('=');
            if (eq == std::string::npos)
                bad_config("synth spec expects key=value, got '" + kv + "'");
            std::string key = trim(kv.substr(0, eq));
            std::string val = trim(kv.substr(eq + 1));
            if (key == "w") {
                base.width = static_cast<int>(parse_ll(key, val));
            } else if (key == "d") {
                base.depth = static_cast<int>(parse_ll(key, val));
            } else if (key == "order") {
                if (val == "perfect") base.ordering = Ordering::PERFECT;
                else if (val == "random") base.ordering = Ordering::RANDOM;
                else if (val == "noisy") base.ordering = Ordering::NOISY;
                else bad_config("unknown ordering '" + val + "'");
            } else if (key == "wmin") {
                base.width_min = static_cast<int>(parse_ll(key, val));
            } else if (key == "wmax") {
                base.width_max = static_cast<int>(parse_ll(key, val));
            } else if (key == "lo") {
                base.lo = static_cast<Value>(parse_ll(key, val));
            } else if (key == "hi") {
                base.hi = static_cast<Value>(parse_ll(key, val));
            } else if (key == "p") {
                base.noise_p = parse_double(key, val);
            } else {
                bad_config("unknown synth key '" + key + "'");
            }
        }
        for (uint64_t seed : seeds) {
            SynthSpec s = base;
            s.seed = seed;
            std::shared_ptr<const SearchDomain> d(synth_tree(s));
            Pos r = d->root();
            out.push_back({seed, std::move(d), r});
        }
    } else {
        throw std::invalid_argument("unknown domain spec: " + spec);
    }
    if (out.empty()) throw std::invalid_argument("domain spec produced no instances");
    return out;
}

Value run_algorithm(Algorithm algo, const SearchDomain& dom, const Pos& root,
                    int depth, TTable* tt, const SearchOpts& opts,
                    const AlgoParams& params) {
    auto need_tt = [&]() -> TTable& {
        if (!tt)
            throw std::invalid_argument(std::string(algorithm_name(algo)) +
                                        " requires a transposition table");
        return *tt;
    };
    switch (algo) {
    case Algorithm::MINIMAX:
        return minimax(dom, root, depth, opts);
    case Algorithm::ALPHA_BETA:
        return alpha_beta(dom, root, depth, NEG_INF, POS_INF, opts);
    case Algorithm::ALPHA_BETA_TT:
        return alpha_beta_tt(dom, root, depth, NEG_INF, POS_INF, need_tt(), opts);
    case Algorithm::ASPWIN:
        return aspwin(dom, root, depth, params.estimate, params.delta, tt, opts);
    case Algorithm::NEGASCOUT:
        return negascout(dom, root, depth, NEG_INF, POS_INF, tt, opts);
    case Algorithm::ASPIRATION_NEGASCOUT:
        return aspiration_negascout(dom, root, depth, params.estimate,
                                    params.delta, tt, opts);
    case Algorithm::MTD_SSS:
        return mtd_sss(dom, root, depth, need_tt(), opts);
    case Algorithm::MTD_DUAL:
        return mtd_dual(dom, root, depth, need_tt(), opts);
    case Algorithm::MTD_F:
        return mtd_f(dom, root, params.estimate, depth, need_tt(), opts);
    case Algorithm::MTD_BI:
        return mtd_bi(dom, root, depth, need_tt(), opts);
    case Algorithm::MTD_STEP:
        return mtd_step(dom, root, params.stepsize, depth, need_tt(), opts);
    case Algorithm::MTD_BEST:
        throw std::invalid_argument(
            "mtd_best selects a root move, not a value; call mtd_best directly");
    case Algorithm::SSS_STAR:
        return sss_star(dom, root, depth, opts);
    case Algorithm::ALPHA_BETA_ETC:
        return alpha_beta_etc(dom, root, depth, NEG_INF, POS_INF, need_tt(),
                              opts, params.etc_min_height);
    }
    throw std::logic_error("unhandled algorithm");
}

IDResult iterative_deepening(const SearchDomain& dom, const Pos& root,
                             int max_depth, int step, Algorithm algo,
                             TTable& tt, const SearchOpts& opts,
                             const AlgoParams& params) {
    if (max_depth < 1)
        throw std::invalid_argument("iterative_deepening: max_depth must be >= 1");
    if (step < 1)
        throw std::invalid_argument("iterative_deepening: step must be >= 1");
    if (algo == Algorithm::MTD_BEST)
        throw std::invalid_argument("iterative_deepening: mtd_best is not a value algorithm");

    std::vector<int> depths;
    for (int d = step; d < max_depth; d += step) depths.push_back(d);
    depths.push_back(max_depth);

    IDResult res;
    HistoryTable local_hist(dom.feature_count());
    AlgoParams p = params;
    // opts.stats->node_budget, when set, limits this whole deepening run.
    const uint64_t budget = opts.stats ? opts.stats->node_budget : 0;

    auto flush = [&]() {
        if (opts.stats) add_stats(*opts.stats, res.total);
    };
    try {
        for (int d : depths) {
            tt.bump_age();
            IDIteration it;
            it.depth = d;
            if (budget) {
                uint64_t spent = res.total.total_nodes();
                if (spent >= budget) throw BudgetExceeded();
                it.stats.node_budget = budget - spent;
            }
            SearchOpts o;
            o.stats = &it.stats;
            o.trace = opts.trace;
            o.history = opts.history ? opts.history : &local_hist;
            o.mt_tt_ordering = true;
            auto t0 = std::chrono::steady_clock::now();
            try {
                it.value = run_algorithm(algo, dom, root, d, &tt, o, p);
            } catch (...) {
                it.stats.elapsed_us = us_since(t0);
                add_stats(res.total, it.stats);
                res.iterations.push_back(it);
                throw;
            }
            it.stats.elapsed_us = us_since(t0);
            it.best = algorithm_uses_tt(algo) ? tt.peek_move(dom.hash(root)) : -1;
            add_stats(res.total, it.stats);
            res.iterations.push_back(it);
            res.value = it.value;
            p.estimate = it.value; // next iteration's guess / window center
        }
    } catch (...) {
        flush();
        throw;
    }
    flush();
    return res;
}

namespace {

[[noreturn]] void value_disagreement(const std::string& domain, uint64_t seed,
                                     int depth, const std::string& first_algo,
                                     Value first, const std::string& algo,
                                     Value got) {
    std::ostringstream os;
    os << "value disagreement (correctness failure):\n"
       << "  domain=" << domain << " seed=" << seed << " depth=" << depth << '\n'
       << "  " << first_algo << " -> " << first << '\n'
       << "  " << algo << " -> " << got << '\n';
    throw std::runtime_error(os.str());
}

} // namespace

std::vector<CsvRow> run_compare(const ExperimentConfig& cfg) {
    validate_config(cfg);
    for (Algorithm a : cfg.algorithms)
        if (a == Algorithm::MTD_BEST)
            bad_config("run_compare: mtd_best is not a value algorithm");
    std::vector<Instance> instances = make_instances(cfg.domain, cfg.seeds);
    const int cap = cfg.tt_log2.front();
    std::vector<CsvRow> rows;
    for (const Instance& inst : instances) {
        for (int depth : cfg.depths) {
            // iteration depth -> (first algorithm, its value)
            std::map<int, std::pair<std::string, Value>> agreed;
            for (Algorithm algo : cfg.algorithms) {
                auto tt = tt_new(cap);
                SearchStats st;
                st.node_budget = cfg.budget;
                SearchOpts o;
                o.stats = &st;
                IDResult r = iterative_deepening(*inst.dom, inst.root, depth,
                                                 cfg.step, algo, *tt, o, cfg.params);
                SearchStats cum;
                for (const IDIteration& it : r.iterations) {
                    add_stats(cum, it.stats);
                    CsvRow row;
                    row.domain = cfg.domain;
                    row.algorithm = algorithm_name(algo);
                    row.depth = it.depth;
                    row.tt_log2 = cap;
                    row.seed = inst.seed;
                    row.leaf_evals = cum.leaf_evals;
                    row.interior = cum.interior_visits;
                    row.total_nodes = cum.total_nodes();
                    row.tt_hits = cum.tt_hits;
                    row.mt_calls = cum.mt_calls;
                    row.value = it.value;
                    row.elapsed_us = cum.elapsed_us;
                    rows.push_back(std::move(row));
                    auto found = agreed.find(it.depth);
                    if (found == agreed.end())
                        agreed.emplace(it.depth,
                                       std::make_pair(algorithm_name(algo), it.value));
                    else if (found->second.second != it.value)
                        value_disagreement(cfg.domain, inst.seed, it.depth,
                                           found->second.first, found->second.second,
                                           algorithm_name(algo), it.value);
                }
            }
        }
    }
    return rows;
}

MemsweepResult run_memsweep(const ExperimentConfig& cfg) {
    validate_config(cfg);
    for (Algorithm a : cfg.algorithms)
        if (a == Algorithm::MTD_BEST)
            bad_config("run_memsweep: mtd_best is not a value algorithm");
    std::vector<Instance> instances = make_instances(cfg.domain, cfg.seeds);
    std::vector<int> caps = cfg.tt_log2;
    std::sort(caps.begin(), caps.end());
    caps.erase(std::unique(caps.begin(), caps.end()), caps.end());

    MemsweepResult out;
    std::map<int, uint64_t> sss_leaves; // capacity -> summed mtd_sss leaves
    std::map<std::pair<uint64_t, int>, std::pair<std::string, Value>> agreed;
    for (const Instance& inst : instances) {
        for (int depth : cfg.depths) {
            for (Algorithm algo : cfg.algorithms) {
                for (int cap : caps) {
                    auto tt = tt_new(cap);
                    SearchStats st;
                    st.node_budget = cfg.budget;
                    SearchOpts o;
                    o.stats = &st;
                    auto t0 = std::chrono::steady_clock::now();
                    Value v = run_algorithm(algo, *inst.dom, inst.root, depth,
                                            tt.get(), o, cfg.params);
                    st.elapsed_us = us_since(t0);
                    CsvRow row;
                    row.domain = cfg.domain;
                    row.algorithm = algorithm_name(algo);
                    row.depth = depth;
                    row.tt_log2 = cap;
                    row.seed = inst.seed;
                    row.leaf_evals = st.leaf_evals;
                    row.interior = st.interior_visits;
                    row.total_nodes = st.total_nodes();
                    row.tt_hits = st.tt_hits;
                    row.mt_calls = st.mt_calls;
                    row.value = v;
                    row.elapsed_us = st.elapsed_us;
                    out.rows.push_back(std::move(row));
                    auto key = std::make_pair(inst.seed, depth);
                    auto found = agreed.find(key);
                    if (found == agreed.end())
                        agreed.emplace(key, std::make_pair(algorithm_name(algo), v));
                    else if (found->second.second != v)
                        value_disagreement(cfg.domain, inst.seed, depth,
                                           found->second.first, found->second.second,
                                           algorithm_name(algo), v);
                    if (algo == Algorithm::MTD_SSS) sss_leaves[cap] += st.leaf_evals;
                }
            }
        }
    }
    if (!sss_leaves.empty() && caps.size() >= 1) {
        uint64_t target = sss_leaves[caps.back()];
        int level = caps.back();
        for (auto it = caps.rbegin(); it != caps.rend(); ++it) {
            if (sss_leaves[*it] != target) break;
            level = *it;
        }
        out.level_off_log2 = level;
    }
    return out;
}

void run_trace(const SearchDomain& dom, const Pos& root, Algorithm algo,
               int depth, std::ostream& out, int tt_log2,
               const AlgoParams& params) {
    LineTrace tr(out);
    SearchOpts o;
    o.trace = &tr;
    auto tt = tt_new(tt_log2);
    run_algorithm(algo, dom, root, depth, tt.get(), o, params);
}

void write_mingraph_csv(std::ostream& out, const std::string& domain,
                        int depth, const LfmgResult& lfmg,
                        const ArmgResult* armg) {
    out << "domain,depth,phase,leaf,interior,total\n";
    auto line = [&](const char* phase, const PhaseCount& pc) {
        out << csv_field(domain) << ',' << depth << ',' << phase << ','
            << pc.leaf << ',' << pc.interior << ',' << pc.total() << '\n';
    };
    line("search", lfmg.search);
    line("mintree", lfmg.mintree);
    line("mingraph", lfmg.mingraph);
    if (armg) line("armg", armg->armg);
}

double geomean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("geomean: empty sample");
    double s = 0.0;
    for (double x : xs) {
        if (x <= 0.0) throw std::invalid_argument("geomean: samples must be positive");
        s += std::log(x);
    }
    return std::exp(s / static_cast<double>(xs.size()));
}

} // namespace gts
