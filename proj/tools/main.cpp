// graphdisc command line tool: generators, exact discrepancy sweeps, the
// grid/cut constructions, the dense Hamilton search and the random-regular
// experiment, all emitting machine-readable JSON with a reproducibility
// header.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphdisc/constructions.hpp"
#include "graphdisc/discrepancy.hpp"
#include "graphdisc/errors.hpp"
#include "graphdisc/hamilton_search.hpp"
#include "graphdisc/oracles.hpp"
#include "graphdisc/random_regular.hpp"
#include "graphdisc/version.hpp"

namespace gd = graphdisc;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOptions {
    std::string gen_spec;
    std::string graph_file;
    std::string labeling_spec;
    std::uint64_t seed = 1;
    int threads = 0; // 0: environment or 1
    std::string out_file;
    bool timing = false;
    bool json = true;
    std::string format = "json";
};

int default_threads() {
    if (const char* env = std::getenv("GRAPHDISC_THREADS")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gd::Graph graph_from_spec(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "grid") {
        auto x = args.find('x');
        if (x == std::string::npos) throw CLI::ValidationError("--gen", "expected grid:KxL");
        return gd::make_grid(std::stoi(args.substr(0, x)), std::stoi(args.substr(x + 1)));
    }
    if (kind == "kn") return gd::make_complete(std::stoi(args));
    if (kind == "kn-minus") return gd::make_complete_minus_clique(std::stoi(args)).graph;
    if (kind == "rr") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--gen", "expected rr:N,D");
        return gd::random_regular(std::stoi(args.substr(0, comma)),
                                  std::stoi(args.substr(comma + 1)), seed)
            .graph;
    }
    throw CLI::ValidationError("--gen", "unknown generator '" + kind +
                                            "' (grid:KxL, kn:N, kn-minus:N, rr:N,D)");
}

gd::Graph load_graph(const CommonOptions& opt) {
    if (!opt.gen_spec.empty() && !opt.graph_file.empty())
        throw CLI::ValidationError("--graph", "give either --graph or --gen, not both");
    if (!opt.gen_spec.empty()) return graph_from_spec(opt.gen_spec, opt.seed);
    if (!opt.graph_file.empty()) {
        std::string text = read_file(opt.graph_file);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') return gd::graph_from_json(text);
        return gd::parse_graph(text);
    }
    throw CLI::ValidationError("--graph", "a graph source is required (--graph or --gen)");
}

gd::Labeling load_labeling(const std::string& spec, const gd::Graph& g, std::uint64_t seed) {
    if (spec.empty())
        throw CLI::ValidationError("--labeling", "a labeling source is required");
    if (spec == "all-pos") return gd::Labeling::all_positive(g.edge_count());
    if (spec == "all-neg") return gd::Labeling::all_negative(g.edge_count());
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        return gd::Labeling::random(g.edge_count(), rng);
    }
    std::string text = spec;
    if (spec.find_first_not_of("+-") != std::string::npos) text = read_file(spec);
    auto first = text.find_first_not_of(" \t\r\n");
    gd::Labeling f = (first != std::string::npos && text[first] == '[')
                         ? gd::Labeling::from_json(text)
                         : gd::Labeling::parse(text);
    if (f.size() != g.edge_count())
        throw CLI::ValidationError("--labeling", "labeling has " + std::to_string(f.size()) +
                                                     " entries for " +
                                                     std::to_string(g.edge_count()) + " edges");
    return f;
}

ordered_json witness_json(const gd::Witness& w) {
    return ordered_json{{"kind", gd::family_code(w.kind)}, {"edges", w.edges}, {"sum", w.sum}};
}

ordered_json graph_json(const gd::Graph& g) {
    return ordered_json::parse(gd::graph_to_json(g));
}

ordered_json report_shell(const std::string& subcommand, ordered_json config) {
    ordered_json report;
    report["schema"] = gd::report_schema;
    report["library"] = ordered_json{{"name", "graphdisc"}, {"version", gd::library_version}};
    config["subcommand"] = subcommand;
    report["config"] = std::move(config);
    return report;
}

ordered_json common_config(const CommonOptions& opt) {
    ordered_json config;
    if (!opt.gen_spec.empty()) config["gen"] = opt.gen_spec;
    if (!opt.graph_file.empty()) config["graph"] = opt.graph_file;
    if (!opt.labeling_spec.empty()) config["labeling"] = opt.labeling_spec;
    config["seed"] = opt.seed;
    config["threads"] = opt.threads;
    return config;
}

int emit(const ordered_json& report, const CommonOptions& opt, int exit_code) {
    std::string text = report.dump(2);
    if (!opt.out_file.empty()) {
        std::ofstream out(opt.out_file);
        out << text << '\n';
    } else {
        std::cout << text << '\n';
    }
    return exit_code;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool graph_source, bool labeling_source) {
    if (graph_source) {
        cmd->add_option("--gen", opt.gen_spec, "generator spec: grid:KxL | kn:N | kn-minus:N | rr:N,D");
        cmd->add_option("--graph", opt.graph_file, "graph file (edge-list text or JSON)");
    }
    if (labeling_source)
        cmd->add_option("--labeling", opt.labeling_spec,
                        "labeling source: file | random | all-pos | all-neg | '+-' string");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--threads", opt.threads, "worker threads (default: GRAPHDISC_THREADS or 1)");
    cmd->add_option("--out", opt.out_file, "write the report to a file instead of stdout");
    cmd->add_flag("--timing", opt.timing, "include wall-time fields in the report");
    cmd->add_flag("--json", opt.json, "JSON report output (the default)");
}

int run_gen(const CommonOptions& opt) {
    gd::Graph g = load_graph(opt);
    if (opt.format == "text") {
        if (!opt.out_file.empty()) {
            std::ofstream out(opt.out_file);
            out << gd::serialize_graph(g);
        } else {
            std::cout << gd::serialize_graph(g);
        }
        return 0;
    }
    ordered_json report = report_shell("gen", common_config(opt));
    report["graph"] = graph_json(g);
    report["vertices"] = g.vertex_count();
    report["edges"] = g.edge_count();
    return emit(report, opt, 0);
}

int run_exact(const CommonOptions& opt, const std::string& family, std::uint64_t budget) {
    gd::Graph g = load_graph(opt);
    gd::FamilyKind kind = gd::parse_family(family);
    int threads = opt.threads > 0 ? opt.threads : default_threads();
    auto r = gd::exact_discrepancy(g, kind, budget, threads);
    ordered_json config = common_config(opt);
    config["family"] = family;
    config["budget"] = budget;
    config["threads"] = threads;
    ordered_json report = report_shell("exact", std::move(config));
    report["family"] = gd::family_code(kind);
    report["exact"] = r.exact;
    report["value"] = r.value;
    report["lower_bound"] = r.lower_bound;
    report["argmin_labeling"] = r.argmin.to_string();
    report["witness"] = witness_json(r.witness);
    report["labelings_examined"] = r.labelings_examined;
    report["labelings_total"] = r.labelings_total;
    if (opt.timing) report["wall_ms"] = r.wall_ms;
    return emit(report, opt, r.exact ? 0 : 1);
}

int run_label(const CommonOptions& opt, const std::string& family, double nu, int tau) {
    gd::Graph g = load_graph(opt);
    gd::Labeling f = load_labeling(opt.labeling_spec, g, opt.seed);
    gd::FamilyKind kind = gd::parse_family(family);
    ordered_json config = common_config(opt);
    config["family"] = family;
    if (nu > 0) config["nu"] = nu;
    if (tau > 0) config["tau"] = tau;
    ordered_json report = report_shell("label", std::move(config));
    report["family"] = gd::family_code(kind);
    auto [value, witness] = gd::labeling_discrepancy(g, f, kind);
    report["value"] = value;
    report["witness"] = witness_json(witness);
    if (nu > 0) {
        auto balance = gd::classify_balance(g, f, nu);
        report["balance"] = ordered_json{{"nu", nu},
                                         {"threshold", balance.threshold},
                                         {"balanced", balance.balanced_count()}};
    }
    if (tau > 0) {
        auto colors = gd::color_vertices(g, f, tau);
        report["coloring"] = ordered_json{{"tau", tau},
                                          {"multi_colored", colors.multi_colored()},
                                          {"uncolored", colors.uncolored()}};
    }
    return emit(report, opt, 0);
}

int run_construct(const CommonOptions& opt, const std::string& what, int k) {
    ordered_json config = common_config(opt);
    config["what"] = what;
    if (k > 0) config["k"] = k;
    ordered_json report = report_shell("construct", std::move(config));

    if (what == "half-grid" || what == "p2-strip") {
        if (k <= 1) throw CLI::ValidationError("--k", "these constructions need --k >= 2");
        auto built = what == "half-grid" ? gd::half_grid_labeling(k) : gd::p2_strip_labeling(k);
        auto extremes = gd::spanning_tree_extremes(built.graph, built.labeling);
        int inner = std::max(extremes.max_tree.sum, -extremes.min_tree.sum);
        int claimed = what == "half-grid" ? k - 1 : 3;
        report["graph"] = graph_json(built.graph);
        report["labeling"] = built.labeling.to_string();
        report["claimed_bound"] = claimed;
        report["spanning_tree_inner_max"] = inner;
        report["pass"] = inner <= claimed;
        return emit(report, opt, inner <= claimed ? 0 : 1);
    }

    gd::Graph g = load_graph(opt);
    if (what == "cut") {
        auto cut = gd::find_separator(g);
        auto f = gd::cut_labeling(g, cut);
        auto extremes = gd::spanning_tree_extremes(g, f);
        int inner = std::max(extremes.max_tree.sum, -extremes.min_tree.sum);
        report["partition"] = ordered_json{{"a", cut.a}, {"b", cut.b}, {"c", cut.c}};
        report["bound"] = cut.bound();
        report["labeling"] = f.to_string();
        report["spanning_tree_inner_max"] = inner;
        report["pass"] = inner <= cut.bound();
        return emit(report, opt, inner <= cut.bound() ? 0 : 1);
    }

    gd::Labeling f = load_labeling(opt.labeling_spec, g, opt.seed);
    report["labeling"] = f.to_string();
    if (what == "parity-tree") {
        auto pair = gd::parity_tree_pair(g, f);
        if (!pair) {
            report["error"] = "no parity class holds a mixed vertex (t = 0)";
            return emit(report, opt, 1);
        }
        report["t"] = pair->mixed_count;
        report["parity_class"] = ordered_json{pair->parity_class.first, pair->parity_class.second};
        report["plus_tree"] = witness_json(pair->plus_tree);
        report["minus_tree"] = witness_json(pair->minus_tree);
        bool pass = std::abs(pair->plus_tree.sum - pair->minus_tree.sum) >= 2 * pair->mixed_count;
        report["pass"] = pass;
        return emit(report, opt, pass ? 0 : 1);
    }
    if (what == "stripe-paths") {
        auto sp = gd::stripe_paths(g, f);
        report["columns"] = sp.columns;
        report["x_count"] = sp.x_count;
        report["y_count"] = sp.y_count;
        report["swapped"] = sp.swapped;
        report["paths"] = ordered_json{{"x", witness_json(sp.x_path)},
                                       {"x_mirror", witness_json(sp.x_path_mirror)},
                                       {"y", witness_json(sp.y_path)},
                                       {"y_mirror", witness_json(sp.y_path_mirror)}};
        report["best"] = witness_json(sp.best());
        bool pass = 2 * std::abs(sp.best().sum) >= sp.columns;
        report["pass"] = pass;
        return emit(report, opt, pass ? 0 : 1);
    }
    if (what == "long-path") {
        auto w = gd::grid_long_path(g, f);
        const auto& spec = *g.grid();
        double bound = spec.rows * spec.cols / 8.0 -
                       std::max(spec.rows, spec.cols) / 8.0 - std::min(spec.rows, spec.cols);
        report["witness"] = witness_json(w);
        report["bound"] = bound;
        bool pass = std::abs(w.sum) > bound;
        report["pass"] = pass;
        return emit(report, opt, pass ? 0 : 1);
    }
    throw CLI::ValidationError("--what", "unknown construction '" + what + "'");
}

int run_search(const CommonOptions& opt, double c, int exact_cap) {
    gd::Graph g = load_graph(opt);
    gd::Labeling f = load_labeling(opt.labeling_spec, g, opt.seed);
    auto r = gd::search_dense(g, f, c, opt.seed, exact_cap);
    ordered_json config = common_config(opt);
    config["c"] = c;
    config["exact_cap"] = exact_cap;
    ordered_json report = report_shell("search", std::move(config));
    report["cycle"] = witness_json(r.cycle);
    report["achieved"] = r.achieved;
    report["trace"] = r.trace;
    report["used_exact_fallback"] = r.used_exact_fallback;
    report["tight_example"] = r.tight_example;
    return emit(report, opt, 0);
}

int run_rrstats(const CommonOptions& opt, int n, int d, std::uint64_t samples,
                const std::string& csv_file) {
    if (d != 3) throw CLI::ValidationError("--d", "the experiment pipeline is 3-regular");
    auto report_data = gd::section3_experiment(n, samples, opt.seed);
    ordered_json config = common_config(opt);
    config["n"] = n;
    config["d"] = d;
    config["samples"] = samples;
    ordered_json report = report_shell("rrstats", std::move(config));
    ordered_json rows = ordered_json::array();
    for (const auto& row : report_data.rows) {
        rows.push_back(ordered_json{{"sample", row.sample_index},
                                    {"seed", row.seed},
                                    {"labeling", row.labeling_kind},
                                    {"t", row.t},
                                    {"a1", row.a1},
                                    {"negative_edges", row.negative_edges},
                                    {"positive_edges", row.positive_edges},
                                    {"tree_negative_edges", row.tree_negative_edges},
                                    {"witness_bound_over_n", row.witness_bound_over_n},
                                    {"eq1_residual", row.eq1_residual}});
    }
    report["rows"] = std::move(rows);
    report["aggregates"] = ordered_json{
        {"mean_t_over_n", report_data.mean_t_over_n},
        {"max_t_over_n", report_data.max_t_over_n},
        {"mean_a1_over_n", report_data.mean_a1_over_n},
        {"mean_witness_bound_over_n", report_data.mean_witness_bound_over_n},
        {"max_eq1_residual", report_data.max_eq1_residual},
        {"disconnected_skipped", report_data.disconnected_skipped}};
    if (!csv_file.empty()) {
        std::ofstream csv(csv_file);
        csv << "sample,seed,labeling,t,a1,negative_edges,positive_edges,tree_negative_edges,"
               "witness_bound_over_n,eq1_residual\n";
        for (const auto& row : report_data.rows)
            csv << row.sample_index << ',' << row.seed << ',' << row.labeling_kind << ','
                << row.t << ',' << row.a1 << ',' << row.negative_edges << ','
                << row.positive_edges << ',' << row.tree_negative_edges << ','
                << row.witness_bound_over_n << ',' << row.eq1_residual << '\n';
    }
    return emit(report, opt, 0);
}

int run_oracle_check(const CommonOptions& opt, const std::string& family, int trials) {
    gd::Graph g = load_graph(opt);
    gd::FamilyKind kind = gd::parse_family(family);
    std::mt19937_64 rng(opt.seed);
    int mismatches = 0;
    std::uint64_t members = 0;
    for (int trial = 0; trial < trials; ++trial) {
        gd::Labeling f = gd::Labeling::random(g.edge_count(), rng);
        auto slow = gd::enumerated_extremes(g, f, kind);
        std::optional<std::pair<int, int>> fast;
        switch (kind) {
            case gd::FamilyKind::spanning_trees:
                fast = g.connected()
                           ? std::optional(gd::spanning_tree_extreme_values(g, f))
                           : std::nullopt;
                break;
            case gd::FamilyKind::hamilton_cycles: fast = gd::hamilton_extreme_values(g, f); break;
            case gd::FamilyKind::hamilton_paths:
                fast = gd::hamilton_path_extreme_values(g, f);
                break;
            case gd::FamilyKind::trees: {
                int hi = gd::tree_max_abs_value(g, f);
                // compare the magnitude only: the slow side reports signed extremes
                int slow_abs = slow ? std::max({std::abs(slow->first), std::abs(slow->second), 0})
                                    : 0;
                if (hi != slow_abs) ++mismatches;
                continue;
            }
            case gd::FamilyKind::paths: {
                int hi = gd::path_max_abs_value(g, f);
                int slow_abs = slow ? std::max({std::abs(slow->first), std::abs(slow->second), 0})
                                    : 0;
                if (hi != slow_abs) ++mismatches;
                continue;
            }
        }
        if (slow.has_value() != fast.has_value() || (slow && *slow != *fast)) ++mismatches;
        if (trial == 0 && slow) members = gd::count_family(g, kind);
    }
    ordered_json config = common_config(opt);
    config["family"] = family;
    config["trials"] = trials;
    ordered_json report = report_shell("oracle-check", std::move(config));
    report["trials"] = trials;
    report["mismatches"] = mismatches;
    report["family_members"] = members;
    report["pass"] = mismatches == 0;
    return emit(report, opt, mismatches == 0 ? 0 : 1);
}

int run_bench(const CommonOptions& opt, const std::string& family, int repeat) {
    gd::Graph g = load_graph(opt);
    gd::FamilyKind kind = gd::parse_family(family);
    std::mt19937_64 rng(opt.seed);
    auto start = std::chrono::steady_clock::now();
    long long checksum = 0;
    for (int r = 0; r < repeat; ++r) {
        gd::Labeling f = gd::Labeling::random(g.edge_count(), rng);
        checksum += gd::labeling_discrepancy_value(g, f, kind);
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    ordered_json config = common_config(opt);
    config["family"] = family;
    config["repeat"] = repeat;
    ordered_json report = report_shell("bench", std::move(config));
    report["repeat"] = repeat;
    report["checksum"] = checksum;
    report["total_ms"] = ms;
    report["per_eval_us"] = repeat > 0 ? ms * 1000.0 / repeat : 0.0;
    return emit(report, opt, 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-subgraph discrepancy toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CommonOptions opt;
    std::string family = "tn";
    std::uint64_t budget = std::uint64_t{1} << 26;
    std::string what;
    int k = 0;
    double c = 0.05;
    int exact_cap = 18;
    int n = 1000, d = 3;
    std::uint64_t samples = 10;
    std::string csv_file;
    int trials = 100;
    int repeat = 100;
    double nu = 0.0;
    int tau = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph");
    add_common(gen, opt, true, false);
    gen->add_option("--format", opt.format, "text | json");

    auto* exact = app.add_subcommand("exact", "exact discrepancy by labeling sweep");
    add_common(exact, opt, true, false);
    exact->add_option("--family", family, "tn | h | pn | t | p");
    exact->add_option("--budget", budget, "max labelings to examine");

    auto* label = app.add_subcommand("label", "evaluate one labeling");
    add_common(label, opt, true, true);
    label->add_option("--family", family, "tn | h | pn | t | p");
    label->add_option("--nu", nu, "also classify nu-balance");
    label->add_option("--tau", tau, "also color vertices at this triangle cutoff");

    auto* construct = app.add_subcommand("construct", "labelings and witness constructions with verified bounds");
    add_common(construct, opt, true, true);
    construct->add_option("--what", what,
                          "half-grid | p2-strip | cut | parity-tree | stripe-paths | long-path")
        ->required();
    construct->add_option("--k", k, "grid size for half-grid / p2-strip");

    auto* search = app.add_subcommand("search", "dense-graph Hamilton discrepancy search");
    add_common(search, opt, true, true);
    search->add_option("--c", c, "density margin in delta >= (3/4+c)n");
    search->add_option("--exact-cap", exact_cap, "exact fallback threshold");

    auto* rrstats = app.add_subcommand("rrstats", "random 3-regular spanning tree statistics");
    add_common(rrstats, opt, false, false);
    rrstats->add_option("--n", n, "vertices per sample");
    rrstats->add_option("--d", d, "regularity degree (3)");
    rrstats->add_option("--samples", samples, "number of sampled graphs");
    rrstats->add_option("--csv", csv_file, "also write per-sample rows as CSV");

    auto* oracle = app.add_subcommand("oracle-check", "fast extremes vs exhaustive enumeration");
    add_common(oracle, opt, true, false);
    oracle->add_option("--family", family, "tn | h | pn | t | p");
    oracle->add_option("--trials", trials, "random labelings to compare");

    auto* bench = app.add_subcommand("bench", "time the inner oracle on random labelings");
    add_common(bench, opt, true, false);
    bench->add_option("--family", family, "tn | h | pn | t | p");
    bench->add_option("--repeat", repeat, "evaluations to time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(opt);
        if (exact->parsed()) return run_exact(opt, family, budget);
        if (label->parsed()) return run_label(opt, family, nu, tau);
        if (construct->parsed()) return run_construct(opt, what, k);
        if (search->parsed()) return run_search(opt, c, exact_cap);
        if (rrstats->parsed()) return run_rrstats(opt, n, d, samples, csv_file);
        if (oracle->parsed()) return run_oracle_check(opt, family, trials);
        if (bench->parsed()) return run_bench(opt, family, repeat);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gd::empty_family_error& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 1;
    } catch (const gd::oracle_limit_error& e) {
        std::cerr << "over budget: " << e.what() << '\n';
        return 1;
    } catch (const gd::sampling_error& e) {
        std::cerr << "sampling failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
