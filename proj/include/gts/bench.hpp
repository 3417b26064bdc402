#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "gts/algorithm.hpp"
#include "gts/alphabeta.hpp"
#include "gts/domain.hpp"
#include "gts/mingraph.hpp"

namespace gts {

// Experiment description, parsed from a flat key=value file (one pair per
// line, '#' comments). Keys: domain, algorithms, depths, tt_log2, seeds,
// step, output, budget, estimate, delta, stepsize, etc_min_height.
struct ExperimentConfig {
    std::string domain = "fixture";
    std::vector<Algorithm> algorithms;
    std::vector<int> depths;
    std::vector<int> tt_log2 = {16};
    std::vector<uint64_t> seeds = {1};
    int step = 1; // iterative-deepening depth increment (1 or 2)
    std::string output;  // CSV path; empty = stdout
    uint64_t budget = 0; // node budget per cell, 0 = unlimited
    AlgoParams params;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);

struct CsvRow {
    std::string domain;
    std::string algorithm;
    int depth = 0;
    int tt_log2 = 0;
    uint64_t seed = 0;
    uint64_t leaf_evals = 0;
    uint64_t interior = 0;
    uint64_t total_nodes = 0;
    uint64_t tt_hits = 0;
    uint64_t mt_calls = 0;
    Value value = 0;
    uint64_t elapsed_us = 0;
};

extern const char* const CSV_HEADER;

std::string csv_line(const CsvRow& r);

// Sorts rows (all key columns, counts excluded) and writes header + rows
// with LF line endings.
void write_csv(std::ostream& out, std::vector<CsvRow> rows);

// One benchmark instance: a root position within a domain plus the seed
// recorded in the CSV seed column.
struct Instance {
    uint64_t seed = 0;
    std::shared_ptr<const SearchDomain> dom;
    Pos root;
};

// Expands a domain spec string into instances:
//   fixture            the 16-leaf worked example tree (seed 0)
//   tree:<path>        explicit tree file (seed 0)
//   tictactoe          3x3 tic-tac-toe from the empty board (seed 0)
//   othello6           6x6 Othello from the initial position (seed 0)
//   othello6_suite     20 fixed seeded start positions (seed = index)
//   synth:w=..,d=..,order=perfect|random|noisy[,wmin=..,wmax=..,lo=..,
//         hi=..,p=..]  one instance per entry of seeds
std::vector<Instance> make_instances(const std::string& spec,
                                     const std::vector<uint64_t>& seeds);

// Single fixed-depth run of one algorithm with harness defaults (full
// window; estimate/f0/delta/stepsize from params). tt is required for
// table-backed algorithms and ignored by the rest. MTD_BEST is a
// move-selection rule, not a value search, and is rejected here.
Value run_algorithm(Algorithm algo, const SearchDomain& dom, const Pos& root,
                    int depth, TTable* tt, const SearchOpts& opts = {},
                    const AlgoParams& params = {});

// Per (instance, depth, algorithm): fresh table, iterative deepening,
// one row per iteration with cumulative counts. Enforces value agreement
// across algorithms within each (domain, depth, seed) group and throws
// with a diagnostic dump on disagreement.
std::vector<CsvRow> run_compare(const ExperimentConfig& cfg);

struct MemsweepResult {
    std::vector<CsvRow> rows;
    // Smallest capacity whose mtd_sss leaf count already equals the
    // largest capacity's, with all larger capacities equal too; -1 when
    // mtd_sss is not in the run or no capacity levels off.
    int level_off_log2 = -1;
};

// Per (instance, depth, algorithm, capacity): fresh table, one direct
// fixed-depth run per cell (no deepening), one row per cell. Value
// agreement enforced across algorithms and capacities.
MemsweepResult run_memsweep(const ExperimentConfig& cfg);

// Runs one algorithm at fixed depth with a line trace attached and writes
// the leaf/ttcut/pass/op events to out.
void run_trace(const SearchDomain& dom, const Pos& root, Algorithm algo,
               int depth, std::ostream& out, int tt_log2 = 16,
               const AlgoParams& params = {});

// Minimal-tree/graph measurement CSV: one line per phase
// (search|mintree|mingraph and optionally armg), columns
// domain, depth, phase, leaf, interior, total.
void write_mingraph_csv(std::ostream& out, const std::string& domain,
                        int depth, const LfmgResult& lfmg,
                        const ArmgResult* armg = nullptr);

// Geometric mean of strictly positive samples.
double geomean(const std::vector<double>& xs);

} // namespace gts
