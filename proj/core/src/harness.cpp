#include "adim/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "adim/distance_matrix.hpp"
#include "adim/errors.hpp"
#include "parallel_for.hpp"

namespace adim {

namespace {

bool wants(const RunConfig& cfg, Problem p) {
    return std::find(cfg.problems.begin(), cfg.problems.end(), p) != cfg.problems.end();
}

void validate(const RunConfig& cfg) {
    if (cfg.problems.empty())
        throw std::invalid_argument("run config must select at least one problem");
    for (int k : cfg.k_values)
        if (k < 1) throw std::invalid_argument("sweep k values must be positive");
    if (wants(cfg, Problem::geq_k) && cfg.k_values.empty())
        throw std::invalid_argument("geq-k runs need at least one k value");
}

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

}  // namespace

NetworkSummary run_single(const RunConfig& cfg, const Graph& g, const std::string& name,
                          const std::vector<std::string>& labels) {
    validate(cfg);

    NetworkSummary s;
    s.name = name;
    s.n_input = g.node_count();

    ComponentExtraction lcc = largest_connected_component(g);
    s.n = lcc.graph.node_count();
    s.m = lcc.graph.edge_count();
    if (!labels.empty()) {
        s.labels.reserve(lcc.original_ids.size());
        for (int orig : lcc.original_ids) s.labels.push_back(labels[orig]);
    }

    if (s.n < 3) {
        s.skipped = true;
        s.note = "largest component has fewer than 3 nodes; skipped";
        std::cerr << "adim: " << (name.empty() ? "<unnamed>" : name) << ": " << s.note << "\n";
        return s;
    }

    SolverOptions opt;
    opt.workers = cfg.workers;
    opt.deadline = std::chrono::steady_clock::now() + cfg.timeout;

    const DistanceMatrix d = all_pairs_shortest_paths(lcc.graph, cfg.workers);

    try {
        if (wants(cfg, Problem::kopt)) s.kopt = adim_kopt(d, opt);
        if (wants(cfg, Problem::geq_k)) {
            std::vector<int> ks = cfg.k_values;
            std::sort(ks.begin(), ks.end());
            ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
            bool infeasible_from_here = false;
            for (int k : ks) {
                SweepEntry entry;
                entry.k = k;
                if (k > s.n - 1 || infeasible_from_here) {
                    entry.solution.k = k;  // out of range or above k_opt: infeasible
                } else {
                    entry.solution = adim_geq_k(d, k, opt);
                    if (!entry.solution.feasible) infeasible_from_here = true;
                }
                s.sweep.push_back(std::move(entry));
            }
            for (std::size_t i = 1; i < s.sweep.size(); ++i) {
                const auto& prev = s.sweep[i - 1].solution;
                const auto& cur = s.sweep[i].solution;
                s.sweep[i].suppressed = (prev.feasible == cur.feasible) &&
                                        (!cur.feasible || prev.cardinality == cur.cardinality);
            }
        }
        if (wants(cfg, Problem::eq1)) s.eq1 = adim_eq1(d, opt);
        if (wants(cfg, Problem::tree_chain)) s.tree_chain = full_antiresolving_chain(d, opt);
    } catch (const TimeoutError& e) {
        s.complete = false;
        s.note = std::string("incomplete: ") + e.what();
        std::cerr << "adim: " << (name.empty() ? "<unnamed>" : name) << ": " << s.note << "\n";
    }
    return s;
}

BatchResult run_batch(const RunConfig& cfg, const EnsembleConfig& ens) {
    validate(cfg);
    if (ens.count < 1) throw std::invalid_argument("batch needs at least one sample");
    if (ens.base.model == GenModel::erdos_renyi && ens.base.n * ens.base.p < 2.5)
        std::cerr << "adim: warning: n*p = " << ens.base.n * ens.base.p
                  << " < 2.5; samples may be disconnected or trivially identifiable\n";

    BatchResult result;
    result.ensemble = ens;
    result.samples.resize(ens.count);
    result.retries.assign(ens.count, 0);

    RunConfig per_sample = cfg;
    per_sample.workers = 1;  // parallelism lives at the sample level

    detail::parallel_for_ordered(ens.count, cfg.workers, nullptr, [&](int index) {
        GenConfig gc = ens.base;
        gc.seed = substream_seed(ens.base.seed, static_cast<std::uint64_t>(index));
        const std::string name =
            std::string(model_name(gc.model)) + "-sample-" + std::to_string(index);
        try {
            GenResult gen = generate(gc);
            result.retries[index] = gen.retries;
            result.samples[index] = run_single(per_sample, gen.graph, name);
        } catch (const std::exception& e) {
            NetworkSummary failed;
            failed.name = name;
            failed.skipped = true;
            failed.note = std::string("failed: ") + e.what();
            result.samples[index] = std::move(failed);
        }
    });

    // deterministic fold in sample-index order
    BatchStats& stats = result.stats;
    stats.requested = ens.count;
    std::map<int, int> kopt_counts;
    int eq1_1 = 0, eq1_2 = 0, eq1_gt2 = 0, with_eq1 = 0, with_kopt = 0;
    for (const NetworkSummary& s : result.samples) {
        if (s.skipped || !s.complete) {
            ++stats.failed;
            continue;
        }
        ++stats.aggregated;
        if (s.kopt) {
            ++with_kopt;
            ++kopt_counts[s.kopt->k_opt];
        }
        if (s.eq1) {
            ++with_eq1;
            if (s.eq1->cardinality == 1)
                ++eq1_1;
            else if (s.eq1->cardinality == 2)
                ++eq1_2;
            else
                ++eq1_gt2;
        }
    }
    if (with_kopt > 0) {
        const int lo = kopt_counts.begin()->first;
        const int hi = kopt_counts.rbegin()->first;
        int at_least = with_kopt;
        int below = 0;
        stats.kopt_quantile_bound = hi;
        bool bound_set = false;
        for (int t = lo; t <= hi; ++t) {
            stats.kopt_cumulative.emplace_back(t, static_cast<double>(at_least) / with_kopt);
            auto it = kopt_counts.find(t);
            const int here = it == kopt_counts.end() ? 0 : it->second;
            at_least -= here;
            below += here;
            if (!bound_set && below + 1e-9 >= stats.kopt_quantile * with_kopt) {
                stats.kopt_quantile_bound = t;
                bound_set = true;
            }
        }
    }
    if (with_eq1 > 0) {
        stats.eq1_frac_1 = static_cast<double>(eq1_1) / with_eq1;
        stats.eq1_frac_2 = static_cast<double>(eq1_2) / with_eq1;
        stats.eq1_frac_gt2 = static_cast<double>(eq1_gt2) / with_eq1;
    }
    return result;
}

namespace {

nlohmann::json sweep_json(const NetworkSummary& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepEntry& e : s.sweep) {
        nlohmann::json row = to_json(e.solution, s.labels.empty() ? nullptr : &s.labels);
        row["suppressed"] = e.suppressed;
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace

nlohmann::json to_json(const NetworkSummary& s) {
    const std::vector<std::string>* labels = s.labels.empty() ? nullptr : &s.labels;
    nlohmann::json j;
    j["name"] = s.name;
    j["n_input"] = s.n_input;
    j["n"] = s.n;
    j["m"] = s.m;
    j["skipped"] = s.skipped;
    j["complete"] = s.complete;
    if (!s.note.empty()) j["note"] = s.note;
    if (s.kopt) {
        j["kopt"] = to_json(*s.kopt, labels);
        j["kopt"]["fraction_pct"] = fixed(100.0 * s.kopt->fraction, 1);
        j["kopt"]["p_opt"] = fixed(1.0 / s.kopt->k_opt, 3);
    }
    if (s.eq1) j["eq1"] = to_json(*s.eq1, labels);
    if (!s.sweep.empty()) j["sweep"] = sweep_json(s);
    if (!s.tree_chain.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const TreeChainEntry& e : s.tree_chain) {
            nlohmann::json row;
            row["problem"] = "tree-chain";
            row["k"] = e.k;
            row["cardinality"] = e.cardinality;
            nlohmann::json w = nlohmann::json::array();
            for (int v : e.witness.members())
                if (labels)
                    w.push_back((*labels)[v]);
                else
                    w.push_back(v);
            row["witness"] = std::move(w);
            arr.push_back(std::move(row));
        }
        j["tree_chain"] = std::move(arr);
    }
    return j;
}

nlohmann::json to_json(const BatchResult& b) {
    nlohmann::json j;
    j["config"]["model"] = model_name(b.ensemble.base.model);
    j["config"]["n"] = b.ensemble.base.n;
    j["config"]["p"] = b.ensemble.base.p;
    j["config"]["q"] = b.ensemble.base.q;
    j["config"]["seed"] = b.ensemble.base.seed;
    j["config"]["count"] = b.ensemble.count;
    j["stats"]["requested"] = b.stats.requested;
    j["stats"]["aggregated"] = b.stats.aggregated;
    j["stats"]["failed"] = b.stats.failed;
    if (!b.stats.kopt_cumulative.empty()) {
        nlohmann::json grid = nlohmann::json::array();
        for (auto [t, frac] : b.stats.kopt_cumulative) {
            nlohmann::json row;
            row["k"] = t;
            row["fraction_geq"] = frac;
            grid.push_back(std::move(row));
        }
        j["stats"]["kopt_cumulative"] = std::move(grid);
        j["stats"]["kopt_quantile"] = b.stats.kopt_quantile;
        j["stats"]["kopt_quantile_bound"] = b.stats.kopt_quantile_bound;
        j["stats"]["quantile_line"] =
            "At least " + fixed(100.0 * b.stats.kopt_quantile, 0) +
            "% of networks have k_opt <= " + std::to_string(b.stats.kopt_quantile_bound);
    }
    j["stats"]["eq1"] = {{"1", b.stats.eq1_frac_1},
                         {"2", b.stats.eq1_frac_2},
                         {">2", b.stats.eq1_frac_gt2}};
    nlohmann::json samples = nlohmann::json::array();
    for (const NetworkSummary& s : b.samples) samples.push_back(to_json(s));
    j["samples"] = std::move(samples);
    j["retries"] = b.retries;
    return j;
}

std::string summary_csv(const NetworkSummary& s) {
    std::ostringstream out;
    out << "name,n_input,n,m,k_opt,p_opt,L_at_kopt,kopt_fraction_pct,L_eq1\n";
    out << s.name << ',' << s.n_input << ',' << s.n << ',' << s.m << ',';
    if (s.kopt)
        out << s.kopt->k_opt << ',' << fixed(1.0 / s.kopt->k_opt, 3) << ','
            << s.kopt->cardinality << ',' << fixed(100.0 * s.kopt->fraction, 1) << ',';
    else
        out << ",,,,";
    if (s.eq1) out << s.eq1->cardinality;
    out << '\n';
    return out.str();
}

std::string sweep_csv(const NetworkSummary& s) {
    std::ostringstream out;
    out << "k,p_k,L_geq_k\n";
    for (const SweepEntry& e : s.sweep) {
        if (e.suppressed) continue;
        out << e.k << ',' << fixed(1.0 / e.k, 3) << ',';
        if (e.solution.feasible)
            out << e.solution.cardinality;
        else
            out << "inf";
        out << '\n';
    }
    return out.str();
}

std::string batch_csv(const BatchResult& b) {
    std::ostringstream out;
    out << "section,key,value\n";
    for (auto [t, frac] : b.stats.kopt_cumulative)
        out << "kopt_geq," << t << ',' << fixed(frac, 4) << '\n';
    if (!b.stats.kopt_cumulative.empty())
        out << "kopt_quantile,le_" << b.stats.kopt_quantile_bound << ','
            << fixed(b.stats.kopt_quantile, 2) << '\n';
    out << "eq1,1," << fixed(b.stats.eq1_frac_1, 4) << '\n';
    out << "eq1,2," << fixed(b.stats.eq1_frac_2, 4) << '\n';
    out << "eq1,>2," << fixed(b.stats.eq1_frac_gt2, 4) << '\n';
    return out.str();
}

std::string samples_csv(const BatchResult& b) {
    std::ostringstream out;
    out << "index,name,n,m,k_opt,L_at_kopt,L_eq1,retries,status\n";
    for (std::size_t i = 0; i < b.samples.size(); ++i) {
        const NetworkSummary& s = b.samples[i];
        out << i << ',' << s.name << ',' << s.n << ',' << s.m << ',';
        if (s.kopt) out << s.kopt->k_opt;
        out << ',';
        if (s.kopt) out << s.kopt->cardinality;
        out << ',';
        if (s.eq1) out << s.eq1->cardinality;
        out << ',' << b.retries[i] << ',';
        out << (s.skipped ? "failed" : (s.complete ? "ok" : "incomplete")) << '\n';
    }
    return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit(const RunConfig& cfg, const NetworkSummary& s) {
    if (cfg.out_path.empty()) throw std::invalid_argument("emit: no output path configured");
    if (s.n_input == 0) throw std::invalid_argument("emit: empty result");
    if (cfg.format == OutputFormat::json) {
        write_file(cfg.out_path, to_json(s).dump(2) + "\n");
        return;
    }
    std::string bytes = summary_csv(s);
    if (!s.sweep.empty()) bytes += "\n" + sweep_csv(s);
    write_file(cfg.out_path, bytes);
}

void emit(const RunConfig& cfg, const BatchResult& b) {
    if (cfg.out_path.empty()) throw std::invalid_argument("emit: no output path configured");
    if (b.samples.empty()) throw std::invalid_argument("emit: empty result");
    std::filesystem::create_directories(cfg.out_path);
    const std::filesystem::path dir(cfg.out_path);

    nlohmann::json manifest;
    manifest["config"] = to_json(b)["config"];
    manifest["requested"] = b.stats.requested;
    manifest["aggregated"] = b.stats.aggregated;
    manifest["failed"] = b.stats.failed;
    manifest["retries"] = b.retries;
    nlohmann::json failures = nlohmann::json::array();
    for (const NetworkSummary& s : b.samples)
        if (s.skipped || !s.complete) failures.push_back({{"name", s.name}, {"note", s.note}});
    manifest["failures"] = std::move(failures);
    write_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");

    if (cfg.format == OutputFormat::json) {
        write_file((dir / "batch.json").string(), to_json(b).dump(2) + "\n");
    } else {
        write_file((dir / "stats.csv").string(), batch_csv(b));
        write_file((dir / "samples.csv").string(), samples_csv(b));
    }
}

}  // namespace adim
