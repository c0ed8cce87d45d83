#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adim/generate.hpp"
#include "adim/graph.hpp"
#include "adim/solvers.hpp"
#include "adim/tree.hpp"

namespace adim {

enum class Problem { kopt, geq_k, eq1, tree_chain };

enum class OutputFormat { json, csv };

struct RunConfig {
    std::vector<Problem> problems;       // at least one
    std::vector<int> k_values;           // for the geq_k sweep, each >= 1
    int workers = 1;
    std::chrono::seconds timeout{1800};  // per-network wall clock budget
    OutputFormat format = OutputFormat::json;
    std::string out_path;
};

/// One row of the per-k sweep. A row whose cardinality repeats the
/// previous row is marked suppressed; CSV output drops such rows, JSON
/// keeps everything.
struct SweepEntry {
    int k = 1;
    GeqSolution solution;
    bool suppressed = false;
};

/// Everything measured for one network. Fields are engaged only for the
/// problems that actually ran.
struct NetworkSummary {
    std::string name;
    int n_input = 0;  // node count before component extraction
    int n = 0;        // largest-component node count
    long long m = 0;  // largest-component edge count
    std::vector<std::string> labels;  // component node id -> input label
    std::optional<KoptSolution> kopt;
    std::optional<Eq1Solution> eq1;
    std::vector<SweepEntry> sweep;
    std::vector<TreeChainEntry> tree_chain;
    bool skipped = false;   // component too small to measure
    bool complete = true;   // false when the timeout cut the run short
    std::string note;
};

/// Extracts the largest component, computes the distance matrix once and
/// reuses it for every requested problem. Components with fewer than 3
/// nodes are skipped with a warning note.
NetworkSummary run_single(const RunConfig& cfg, const Graph& g, const std::string& name = {},
                          const std::vector<std::string>& labels = {});

struct EnsembleConfig {
    GenConfig base;
    int count = 50;  // desk-scale default
};

struct BatchStats {
    int requested = 0;
    int aggregated = 0;
    int failed = 0;
    // fraction of samples with k_opt >= t, for t over the observed range
    std::vector<std::pair<int, double>> kopt_cumulative;
    double kopt_quantile = 0.90;
    int kopt_quantile_bound = 0;  // smallest t with >= 90% of samples at k_opt <= t
    // fractions of samples by L_eq1 category; they sum to 1
    double eq1_frac_1 = 0.0;
    double eq1_frac_2 = 0.0;
    double eq1_frac_gt2 = 0.0;
};

struct BatchResult {
    EnsembleConfig ensemble;
    BatchStats stats;
    std::vector<NetworkSummary> samples;  // sample-index order
    std::vector<int> retries;             // generator retries per sample
};

/// Generates count samples on decorrelated sub-seeds, measures each
/// (samples run in parallel across cfg.workers), and folds the aggregate
/// in sample-index order so the result is independent of scheduling.
/// Failed samples are recorded, excluded from the aggregate and counted.
BatchResult run_batch(const RunConfig& cfg, const EnsembleConfig& ens);

nlohmann::json to_json(const NetworkSummary& s);
nlohmann::json to_json(const BatchResult& b);

/// CSV shapes: the summary mirrors one network per row; the sweep one k
/// per row with suppressed rows dropped; batch stats a threshold grid
/// followed by the L_eq1 categories.
std::string summary_csv(const NetworkSummary& s);
std::string sweep_csv(const NetworkSummary& s);
std::string batch_csv(const BatchResult& b);
std::string samples_csv(const BatchResult& b);

/// Writes result files under cfg.out_path (a file for a single summary, a
/// directory for a batch). Deterministic given identical inputs: reruns
/// with the same seeds and flags produce byte-identical files.
void emit(const RunConfig& cfg, const NetworkSummary& s);
void emit(const RunConfig& cfg, const BatchResult& b);

}  // namespace adim
