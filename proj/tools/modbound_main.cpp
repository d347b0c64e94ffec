#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "modbound/bisection.hpp"
#include "modbound/bounds.hpp"
#include "modbound/generators.hpp"
#include "modbound/graph.hpp"
#include "modbound/io.hpp"
#include "modbound/modularity.hpp"
#include "modbound/pipeline.hpp"
#include "modbound/pk_distribution.hpp"
#include "modbound/rng.hpp"
#include "modbound/spectral.hpp"

using json = nlohmann::json;
using namespace modbound;

namespace {

constexpr const char* kVersion = "modbound 0.1.0";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

json provenance(const std::string& config_string, std::uint64_t seed) {
    json j;
    j["version"] = kVersion;
    j["config_hash"] = fnv1a(config_string);
    j["seed"] = seed;
    return j;
}

struct ModelSpec {
    std::string kind;  // gnp | chunglu | pam | kbipartite | regular | fixedseq
    int n = 0;
    double p = 0.0;
    int m = 1;
    double delta = 0.0;
    int a = 1, b = 1;
    int d = 3;
    double w_const = 0.0, w_min = 0.0, w_max = 0.0;
    std::string degrees_file;

    std::string describe() const {
        std::ostringstream os;
        os << kind << " n=" << n << " p=" << p << " m=" << m << " delta=" << delta << " a=" << a
           << " b=" << b << " d=" << d << " w=" << w_const << ":" << w_min << ".." << w_max;
        return os.str();
    }
};

Graph build_model(const ModelSpec& spec, std::uint64_t seed) {
    if (spec.kind == "gnp") return gen_gnp(spec.n, spec.p, seed);
    if (spec.kind == "chunglu") {
        ChungLuWeights w;
        w.w.reserve(static_cast<std::size_t>(spec.n));
        for (int i = 0; i < spec.n; ++i) {
            const double t = spec.n <= 1 ? 0.0 : static_cast<double>(i) / (spec.n - 1);
            w.w.push_back(spec.w_const > 0.0 ? spec.w_const : spec.w_min + t * (spec.w_max - spec.w_min));
        }
        return gen_chung_lu(w, seed);
    }
    if (spec.kind == "pam") {
        PamParams p{spec.m, spec.delta, spec.n};
        return gen_pam(p, seed);
    }
    if (spec.kind == "kbipartite") return gen_complete_bipartite(spec.a, spec.b);
    if (spec.kind == "regular") return gen_random_regular(spec.n, spec.d, seed);
    if (spec.kind == "fixedseq") {
        std::ifstream in(spec.degrees_file);
        if (!in) throw std::runtime_error("cannot open degree file: " + spec.degrees_file);
        std::vector<int> degrees;
        int d = 0;
        while (in >> d) degrees.push_back(d);
        return gen_fixed_degree_sequence(degrees, seed).graph;
    }
    throw std::invalid_argument("unknown model kind: " + spec.kind);
}

json pipeline_to_json(const PipelineResult& res) {
    json j;
    j["route"] = res.diagnostics.route;
    j["q_achieved"] = res.achieved.q;
    j["coverage"] = res.achieved.coverage;
    j["degree_tax"] = res.achieved.degree_tax;
    j["theoretical_bound"] = res.theoretical_bound;
    j["bound_vacuous"] = res.bound_vacuous;
    json d;
    d["C"] = res.diagnostics.C;
    d["gamma"] = res.diagnostics.gamma;
    d["theta"] = res.diagnostics.theta;
    d["cut"] = res.diagnostics.cut;
    d["cut_bound"] = res.diagnostics.cut_bound;
    d["vol_imbalance"] = res.diagnostics.vol_imbalance;
    d["retries"] = res.diagnostics.retries;
    d["outer_retries"] = res.diagnostics.outer_retries;
    d["bisection_achieved"] = res.diagnostics.bisection_achieved;
    d["sizes"] = {res.diagnostics.size_a, res.diagnostics.size_b, res.diagnostics.size_r};
    d["size_u"] = res.diagnostics.size_u;
    d["bandwidth"] = res.diagnostics.bandwidth;
    d["verify_ran"] = res.diagnostics.verify_ran;
    j["diagnostics"] = d;
    json b;
    b["cut"] = res.diagnostics.cut;
    b["bound"] = res.diagnostics.cut_bound;
    b["achieved"] = res.diagnostics.bisection_achieved;
    b["retries"] = res.diagnostics.retries;
    b["sizes"] = {res.diagnostics.size_a, res.diagnostics.size_b, res.diagnostics.size_r};
    b["imbalance"] = res.diagnostics.vol_imbalance;
    j["bisection"] = b;
    return j;
}

json bound_to_json(const BoundReport& rep) {
    json j;
    j["name"] = rep.name;
    j["value"] = rep.value;
    j["vacuous"] = rep.vacuous;
    json hyp;
    for (const auto& [k, v] : rep.hypotheses) hyp[k] = v;
    j["hypotheses_met"] = hyp;
    json in;
    in["n"] = rep.inputs.n;
    in["dbar"] = rep.inputs.dbar;
    in["Delta"] = rep.inputs.delta_max;
    auto put = [&](const char* key, double x) {
        if (!std::isnan(x)) in[key] = x;
    };
    put("C", rep.inputs.C);
    put("gamma", rep.inputs.gamma);
    put("theta", rep.inputs.theta);
    put("tau", rep.inputs.tau);
    put("A", rep.inputs.A);
    put("kappa", rep.inputs.kappa);
    put("B", rep.inputs.B);
    j["inputs_echo"] = in;
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << j.dump(2) << "\n";
}

PipelineResult run_route(const Graph& g, const std::string& route, double C, std::uint64_t seed,
                         const PipelineOptions& opts) {
    if (route == "no_cutoff") return partition_no_cutoff(g, seed, opts);
    if (route == "bulk_split") return partition_bulk_split(g, C, seed, opts);
    throw std::invalid_argument("unknown route: " + route);
}

int cmd_generate(const ModelSpec& spec, std::uint64_t seed, const std::string& out_path) {
    const Graph g = build_model(spec, seed);
    std::vector<std::string> comments;
    comments.push_back(std::string("model ") + spec.describe() + " seed=" + std::to_string(seed));
    comments.push_back("loops " + std::to_string(g.loop_count()));
    comments.push_back("multi_edges " + std::to_string(g.multi_edge_count()));
    write_edge_list(out_path, g, comments);
    std::cout << "wrote " << out_path << " n=" << g.n() << " m=" << g.m() << "\n";
    return 0;
}

int cmd_partition(const std::string& input, const std::string& route, std::vector<double> c_grid,
                  std::uint64_t seed, const PipelineOptions& opts, const std::string& json_out,
                  const std::string& partition_out, bool strict_exit) {
    const EdgeListData data = read_edge_list(input);
    Graph g = Graph::from_edges(data.edges, data.n, true);
    if (!g.is_simple()) g = simplify(g).graph;

    if (c_grid.empty()) c_grid.push_back(2.0);
    json sweep = json::array();
    PipelineResult best;
    bool have = false;
    double best_c = c_grid.front();
    for (double c : c_grid) {
        const PipelineResult res = run_route(g, route, c, seed, opts);
        json item = pipeline_to_json(res);
        item["C"] = c;
        sweep.push_back(item);
        if (!have || res.achieved.q > best.achieved.q) {
            best = res;
            best_c = c;
            have = true;
        }
        if (route == "no_cutoff") break;  // C plays no role on this route
    }

    json j = pipeline_to_json(best);
    j["best_C"] = best_c;
    j["sweep"] = sweep;
    j["provenance"] = provenance(input + route + std::to_string(seed), seed);
    if (!partition_out.empty()) {
        write_partition(partition_out, best.final_partition);
        j["partition_file"] = partition_out;
    }
    if (json_out.empty()) std::cout << j.dump(2) << "\n";
    else write_json(json_out, j);
    if (strict_exit && !best.diagnostics.bisection_achieved) return 3;
    return 0;
}

int cmd_score(const std::string& input, const std::string& partition_path, const std::string& json_out) {
    const EdgeListData data = read_edge_list(input);
    const Graph g = Graph::from_edges(data.edges, data.n);
    const Partition p = read_partition(partition_path, g.n());
    const ScoreBreakdown s = score(g, p);
    json j;
    j["q"] = s.q;
    j["coverage"] = s.coverage;
    j["degree_tax"] = s.degree_tax;
    json parts = json::array();
    for (const auto& agg : part_aggregates(g, p)) {
        json pj;
        pj["size"] = agg.size;
        pj["volume"] = agg.volume;
        pj["internal_edges"] = agg.internal_edges;
        parts.push_back(pj);
    }
    j["parts"] = parts;
    j["provenance"] = provenance(input + partition_path, 0);
    if (json_out.empty()) std::cout << j.dump(2) << "\n";
    else write_json(json_out, j);
    return 0;
}

int cmd_bound(const std::string& input, const std::string& which, double C, double gamma, double tau,
              double kappa, const std::string& json_out) {
    const EdgeListData data = read_edge_list(input);
    Graph g = Graph::from_edges(data.edges, data.n, true);
    if (!g.is_simple()) g = simplify(g).graph;
    const std::vector<int> degs = g.degrees();

    BoundReport rep;
    if (which == "main") {
        const BulkSplit bs = split_bulk(g, C);
        const double gm = std::isnan(gamma) ? bs.gamma : gamma;
        rep = bound_main(g.n(), g.avg_degree(), g.max_degree(), C, gm);
    } else if (which == "no_cutoff") {
        rep = bound_no_cutoff(degs);
    } else if (which == "powerlaw") {
        rep = bound_powerlaw(degs, tau);
    } else if (which == "moments") {
        rep = bound_moments(degs, kappa);
    } else if (which == "removed_statement") {
        rep = bound_removed_degrees(g, C, RemovedDegreesPrefactor::statement);
    } else if (which == "removed_proof") {
        rep = bound_removed_degrees(g, C, RemovedDegreesPrefactor::proof);
    } else {
        throw std::invalid_argument("unknown bound: " + which);
    }
    json j = bound_to_json(rep);
    j["provenance"] = provenance(input + which, 0);
    if (json_out.empty()) std::cout << j.dump(2) << "\n";
    else write_json(json_out, j);
    return 0;
}

int cmd_spectral(const std::string& input, const std::string& json_out) {
    const EdgeListData data = read_edge_list(input);
    const Graph g = Graph::from_edges(data.edges, data.n);
    const SpectralResult res = spectral_gap(g);
    json j;
    j["lambda_bar"] = res.lambda_bar;
    j["mu_min"] = res.eigenvalues.front();
    j["mu_max"] = res.eigenvalues.back();
    j["provenance"] = provenance(input, 0);
    if (json_out.empty()) std::cout << j.dump(2) << "\n";
    else write_json(json_out, j);
    return 0;
}

ModelSpec model_from_json(const json& j) {
    ModelSpec spec;
    spec.kind = j.at("kind").get<std::string>();
    spec.n = j.value("n", 0);
    spec.p = j.value("p", 0.0);
    spec.m = j.value("m", 1);
    spec.delta = j.value("delta", 0.0);
    spec.a = j.value("a", 1);
    spec.b = j.value("b", 1);
    spec.d = j.value("d", 3);
    spec.w_const = j.value("w_const", 0.0);
    spec.w_min = j.value("w_min", 0.0);
    spec.w_max = j.value("w_max", 0.0);
    return spec;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string config_string = buffer.str();
    const json config = json::parse(config_string);

    std::vector<std::uint64_t> seeds;
    for (const auto& s : config.at("seeds")) seeds.push_back(s.get<std::uint64_t>());
    if (seeds.empty()) throw std::invalid_argument("experiment config has no seeds");
    std::sort(seeds.begin(), seeds.end());

    std::filesystem::create_directories(out_dir);
    write_json(out_dir + "/config_echo.json", config);

    std::ostringstream table;
    table << "label,seed,n,m,route,q_achieved,theoretical_bound,bound_vacuous,cut,cut_bound,"
             "bisection_achieved,gamma,theta,retries\n";

    for (const auto& job : config.at("jobs")) {
        const std::string label = job.at("label").get<std::string>();
        const ModelSpec spec = model_from_json(job.at("model"));
        const json pj = job.value("partition", json::object());
        const std::string route = pj.value("route", "no_cutoff");
        const double C = pj.value("C", 2.0);
        PipelineOptions opts;
        opts.mode = pj.value("mode", std::string("strict")) == "permissive" ? MatchingMode::permissive
                                                                            : MatchingMode::strict;
        opts.bisection_retries = pj.value("retries", 500);
        opts.outer_retries = pj.value("outer_retries", 50);

        for (std::uint64_t seed : seeds) {
            const Graph raw = build_model(spec, mix_seed(seed, static_cast<std::uint64_t>(StreamTag::generation)));
            const Graph g = raw.is_simple() ? raw : simplify(raw).graph;
            const PipelineResult res = run_route(g, route, C, seed, opts);

            json out = pipeline_to_json(res);
            out["label"] = label;
            out["n"] = g.n();
            out["m"] = g.m();
            out["provenance"] = provenance(config_string, seed);
            write_json(out_dir + "/" + label + "_seed" + std::to_string(seed) + ".json", out);

            table << label << "," << seed << "," << g.n() << "," << g.m() << "," << route << ","
                  << res.achieved.q << "," << res.theoretical_bound << "," << res.bound_vacuous << ","
                  << res.diagnostics.cut << "," << res.diagnostics.cut_bound << ","
                  << res.diagnostics.bisection_achieved << "," << res.diagnostics.gamma << ","
                  << res.diagnostics.theta << "," << res.diagnostics.retries << "\n";
        }
    }

    std::ofstream agg(out_dir + "/aggregate.csv");
    if (!agg) throw std::runtime_error("cannot write aggregate table");
    agg << table.str();
    std::cout << "experiment written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) + " - matching-based modularity partitions and bounds"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "sample a graph model and write an edge list");
    ModelSpec spec;
    std::uint64_t seed = 1;
    std::string out_path = "graph.edges";
    gen->add_option("--model", spec.kind, "gnp|chunglu|pam|kbipartite|regular|fixedseq")->required();
    gen->add_option("--n", spec.n);
    gen->add_option("--p", spec.p);
    gen->add_option("--m", spec.m);
    gen->add_option("--delta", spec.delta);
    gen->add_option("--a", spec.a);
    gen->add_option("--b", spec.b);
    gen->add_option("--d", spec.d);
    gen->add_option("--w-const", spec.w_const);
    gen->add_option("--w-min", spec.w_min);
    gen->add_option("--w-max", spec.w_max);
    gen->add_option("--degrees-file", spec.degrees_file);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    // partition
    auto* part = app.add_subcommand("partition", "run a partition route and report the score");
    std::string input, route = "no_cutoff", json_out, partition_out, mode = "strict";
    std::vector<double> c_grid;
    PipelineOptions popts;
    bool strict_exit = false;
    part->add_option("--input", input)->required();
    part->add_option("--route", route, "no_cutoff|bulk_split");
    part->add_option("--C", c_grid, "C values to sweep (bulk route)");
    part->add_option("--seed", seed);
    part->add_option("--retries", popts.bisection_retries);
    part->add_option("--outer-retries", popts.outer_retries);
    part->add_option("--mode", mode, "strict|permissive");
    part->add_option("--json-out", json_out);
    part->add_option("--partition-out", partition_out);
    part->add_flag("--strict-exit", strict_exit, "nonzero exit when the bisection bound was not achieved");

    // score
    auto* sc = app.add_subcommand("score", "score a partition file against a graph");
    std::string partition_path;
    sc->add_option("--input", input)->required();
    sc->add_option("--partition", partition_path)->required();
    sc->add_option("--json-out", json_out);

    // bound
    auto* bd = app.add_subcommand("bound", "evaluate a closed-form bound on a graph");
    std::string which = "no_cutoff";
    double C = 2.0, gamma = std::numeric_limits<double>::quiet_NaN(), tau = 3.0, kappa = 1.0;
    bd->add_option("--input", input)->required();
    bd->add_option("--which", which, "main|no_cutoff|powerlaw|moments|removed_statement|removed_proof");
    bd->add_option("--C", C);
    bd->add_option("--gamma", gamma);
    bd->add_option("--tau", tau);
    bd->add_option("--kappa", kappa);
    bd->add_option("--json-out", json_out);

    // spectral
    auto* sp = app.add_subcommand("spectral", "normalized-Laplacian spectral gap");
    sp->add_option("--input", input)->required();
    sp->add_option("--json-out", json_out);

    // experiment
    auto* ex = app.add_subcommand("experiment", "run a seeded experiment config");
    std::string config_path, out_dir = "experiment_out";
    ex->add_option("--config", config_path)->required();
    ex->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(spec, seed, out_path);
        if (part->parsed()) {
            popts.mode = mode == "permissive" ? MatchingMode::permissive : MatchingMode::strict;
            return cmd_partition(input, route, c_grid, seed, popts, json_out, partition_out, strict_exit);
        }
        if (sc->parsed()) return cmd_score(input, partition_path, json_out);
        if (bd->parsed()) return cmd_bound(input, which, C, gamma, tau, kappa, json_out);
        if (sp->parsed()) return cmd_spectral(input, json_out);
        if (ex->parsed()) return cmd_experiment(config_path, out_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
