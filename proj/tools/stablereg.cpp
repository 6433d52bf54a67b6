#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stablereg/corpus.hpp"
#include "stablereg/generators.hpp"
#include "stablereg/graph.hpp"
#include "stablereg/partition.hpp"
#include "stablereg/rng.hpp"
#include "stablereg/verify.hpp"
#include "stablereg/witness.hpp"

using json = nlohmann::ordered_json;
using namespace stablereg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

double wall_ms_since(std::chrono::steady_clock::time_point start) {
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(d).count();
}

json rational_json(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}};
}

json set_json(const VertexSet& s) {
    return json(s.to_vector());
}

Rational parse_eps(const std::string& text) {
    Rational eps = parse_rational(text);
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw std::invalid_argument("epsilon must be in (0, 1/2)");
    return eps;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + text);
    return out;
}

Graph load_graph(const std::string& path) {
    return Graph::load_edge_list_file(path);
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text += '\n';
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

VertexSet set_from_ids(int n, const std::vector<int>& ids) {
    VertexSet s(n);
    for (int v : ids) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        s.set(v);
    }
    return s;
}

std::vector<VertexSet> load_partition_file(const std::string& path, int n) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open partition file: " + path);
    std::vector<VertexSet> pieces;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        VertexSet piece(n);
        int v;
        bool any = false;
        while (ss >> v) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
            piece.set(v);
            any = true;
        }
        if (any) pieces.push_back(std::move(piece));
    }
    if (pieces.empty()) throw std::invalid_argument("partition file has no pieces");
    return pieces;
}

json params_json(const PipelineParams& p) {
    json j;
    j["n"] = p.n;
    j["epsilon"] = rational_json(p.eps);
    j["t"] = p.t;
    j["alpha"] = rational_json(p.alpha);
    j["beta"] = rational_json(p.beta);
    j["q"] = p.q;
    j["c"] = p.c;
    j["sizes"] = p.sizes;
    j["seed"] = p.seed;
    j["max_retries"] = p.max_retries;
    return j;
}

json check_json(const PartitionCheck& check) {
    json j;
    j["pass"] = check.pass;
    j["disjoint"] = check.disjoint;
    j["covers"] = check.covers;
    j["equitable"] = check.equitable;
    j["bound_ok"] = check.bound_ok;
    j["pairs"] = check.pairs.size();
    j["failing_pairs"] = check.failing_pairs;
    json failures = json::array();
    for (const PairRecord& p : check.pairs) {
        if (p.uniform) continue;
        failures.push_back(json{{"i", p.i},
                                {"j", p.j},
                                {"density", rational_json(p.density)},
                                {"row_exceptions", p.row_exceptions}});
    }
    j["failures"] = failures;
    return j;
}

json tree_levels_json(const std::vector<SpecialTreeSearch>& levels) {
    json arr = json::array();
    for (std::size_t h = 0; h < levels.size(); ++h) {
        json level;
        level["height"] = h + 1;
        level["outcome"] = outcome_name(levels[h].outcome);
        level["nodes_explored"] = levels[h].nodes_explored;
        if (levels[h].witness) {
            level["witness"] = json{{"nodes", levels[h].witness->nodes},
                                    {"leaves", levels[h].witness->leaves}};
        }
        arr.push_back(std::move(level));
    }
    return arr;
}

struct GenOptions {
    std::string family;
    int k = 0;
    std::string sizes;
    int n = 0;
    std::string p = "1/2";
    std::uint64_t seed = 0;
    std::string base = "empty";
    std::string out;
};

int run_gen(const GenOptions& opt) {
    Graph g(1);
    if (opt.family == "half-graph") {
        g = half_graph(opt.k);
    } else if (opt.family == "cliques") {
        g = union_of_cliques(parse_int_list(opt.sizes));
    } else if (opt.family == "multipartite") {
        g = complete_multipartite(parse_int_list(opt.sizes));
    } else if (opt.family == "gnp") {
        g = erdos_renyi(opt.n, parse_rational(opt.p), opt.seed);
    } else if (opt.family == "special-tree") {
        g = special_tree_example();
    } else if (opt.family == "planted") {
        Graph base(1);
        if (opt.base == "empty") {
            if (opt.n <= 0) throw std::invalid_argument("planted over empty base needs --n");
            base = Graph(opt.n);
        } else if (opt.base == "gnp") {
            base = erdos_renyi(opt.n, parse_rational(opt.p), opt.seed);
        } else if (opt.base == "cliques") {
            base = union_of_cliques(parse_int_list(opt.sizes));
        } else {
            throw std::invalid_argument("unknown base family: " + opt.base);
        }
        g = planted_half_graph(base, opt.k, opt.seed).graph;
    } else {
        throw std::invalid_argument("unknown family: " + opt.family);
    }

    if (opt.out.empty()) {
        g.save_edge_list(std::cout);
    } else {
        std::ofstream f(opt.out);
        if (!f) throw std::invalid_argument("cannot open output file: " + opt.out);
        g.save_edge_list(f);
    }
    return kExitPass;
}

int run_stability(const std::string& input, int k, std::uint64_t budget, const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    HalfGraphSearch result = find_half_graph(g, k, budget);

    json verdict;
    verdict["op"] = "stability";
    verdict["input"] = input;
    verdict["n"] = g.vertex_count();
    verdict["k"] = k;
    verdict["budget"] = budget;
    verdict["outcome"] = outcome_name(result.outcome);
    verdict["nodes_explored"] = result.nodes_explored;
    if (result.witness)
        verdict["witness"] = json{{"a", result.witness->a}, {"b", result.witness->b}};

    json report;
    report["verdict"] = verdict;
    report["timing"] = json{{"wall_ms", wall_ms_since(start)}};
    emit(report, out);
    return result.outcome == Outcome::Inconclusive ? kExitBudget : kExitPass;
}

int run_treebound(const std::string& input, int max_height, std::uint64_t budget,
                  const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    TreeBoundResult result = empirical_tree_bound(g, max_height, budget);

    bool inconclusive = false;
    for (const auto& level : result.levels)
        if (level.outcome == Outcome::Inconclusive) inconclusive = true;

    json verdict;
    verdict["op"] = "treebound";
    verdict["input"] = input;
    verdict["n"] = g.vertex_count();
    verdict["max_height"] = max_height;
    verdict["budget"] = budget;
    verdict["certified"] = result.certified;
    verdict["t"] = result.t;
    if (result.certified) verdict["outcome"] = "CertifiedAbsent";
    else verdict["outcome"] = inconclusive ? "Inconclusive" : "Found";
    verdict["levels"] = tree_levels_json(result.levels);

    json report;
    report["verdict"] = verdict;
    report["timing"] = json{{"wall_ms", wall_ms_since(start)}};
    emit(report, out);
    return !result.certified && inconclusive ? kExitBudget : kExitPass;
}

struct PartitionOptions {
    std::string input;
    std::string epsilon;
    std::string tree_bound = "auto";
    std::uint64_t seed = 0;
    int max_retries = 16;
    std::uint64_t budget = kDefaultBudget;
    int samples = 0;
    int threads = 1;  // accepted for forward compatibility; the run is single-process
    std::string out;
    std::string pieces_out;
};

std::pair<TreeBoundMode, int> parse_tree_bound(const std::string& text) {
    if (text == "auto") return {TreeBoundMode::Auto, 0};
    if (text.rfind("from-k:", 0) == 0)
        return {TreeBoundMode::FromK, std::stoi(text.substr(7))};
    return {TreeBoundMode::Fixed, std::stoi(text)};
}

json pipeline_verdict(const std::string& op, const std::string& input, const Graph& g,
                      const Partition& partition, const PipelineReport& report) {
    json verdict;
    verdict["op"] = op;
    verdict["input"] = input;
    verdict["n"] = g.vertex_count();
    verdict["params"] = params_json(report.params);
    verdict["tree_bound_t"] = report.tree_bound_t;
    verdict["tree_levels"] = tree_levels_json(report.tree_levels);
    verdict["exact_bound"] = rational_json(report.exact_bound);
    verdict["nominal_bound"] = rational_json(report.nominal_bound);
    verdict["piece_count"] = report.piece_count;
    verdict["total_refine_attempts"] = report.total_refine_attempts;
    verdict["refine_escalations"] = report.refine_escalations;
    verdict["relaxed_zeta"] = rational_json(report.relaxed_zeta);
    verdict["remainder_size"] = report.remainder_size;
    verdict["check"] = check_json(report.check);
    verdict["provenance"] = partition.provenance;
    json pieces = json::array();
    for (const VertexSet& piece : partition.pieces) pieces.push_back(set_json(piece));
    verdict["pieces"] = pieces;
    return verdict;
}

int run_partition(const PartitionOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(opt.input);
    Rational eps = parse_eps(opt.epsilon);
    auto [mode, t_or_k] = parse_tree_bound(opt.tree_bound);

    PipelineConfig config;
    config.seed = opt.seed;
    config.max_retries = opt.max_retries;
    config.budget = opt.budget;
    config.samples_per_size = opt.samples;

    auto [partition, report] = stable_partition(g, eps, mode, t_or_k, config);

    if (!opt.pieces_out.empty()) {
        std::ofstream f(opt.pieces_out);
        if (!f) throw std::invalid_argument("cannot open output file: " + opt.pieces_out);
        for (const VertexSet& piece : partition.pieces) {
            bool first = true;
            piece.for_each([&](int v) {
                if (!first) f << ' ';
                f << v;
                first = false;
            });
            f << '\n';
        }
    }

    json j;
    j["verdict"] = pipeline_verdict("partition", opt.input, g, partition, report);
    j["timing"] = json{{"wall_ms", wall_ms_since(start)}};
    emit(j, opt.out);
    return report.check.pass ? kExitPass : kExitFail;
}

int run_verify(const std::string& input, const std::string& partition_path,
               const std::string& epsilon, const std::string& bound, const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    Rational eps = parse_eps(epsilon);
    std::vector<VertexSet> pieces = load_partition_file(partition_path, g.vertex_count());
    std::optional<Rational> piece_bound;
    if (!bound.empty()) piece_bound = parse_rational(bound);

    PartitionCheck check = verify_partition(g, pieces, eps, piece_bound);

    json verdict;
    verdict["op"] = "verify";
    verdict["input"] = input;
    verdict["partition"] = partition_path;
    verdict["n"] = g.vertex_count();
    verdict["epsilon"] = rational_json(eps);
    verdict["piece_count"] = pieces.size();
    if (piece_bound) verdict["piece_bound"] = rational_json(*piece_bound);
    verdict["check"] = check_json(check);

    json report;
    report["verdict"] = verdict;
    report["timing"] = json{{"wall_ms", wall_ms_since(start)}};
    emit(report, out);
    return check.pass ? kExitPass : kExitFail;
}

int run_oracle(const std::string& input, const std::string& op, const std::string& set_text,
               const std::string& epsilon, const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    Rational eps = parse_eps(epsilon);
    VertexSet s = set_from_ids(g.vertex_count(), parse_int_list(set_text));

    json verdict;
    verdict["op"] = "oracle-" + op;
    verdict["input"] = input;
    verdict["n"] = g.vertex_count();
    verdict["set"] = set_json(s);
    verdict["epsilon"] = rational_json(eps);

    bool pass;
    if (op == "good") {
        GoodnessResult r = is_good(g, s, eps);
        verdict["good"] = r.good;
        if (!r.good) {
            verdict["witness"] = r.witness;
            verdict["minority"] = r.minority;
        }
        pass = r.good;
    } else if (op == "excellent") {
        ExcellenceVerdict v = brute_force_excellent(g, s, eps);
        bool excellent = v.kind == ExcellenceKind::ExcellentExact;
        verdict["excellent"] = excellent;
        if (!excellent) {
            verdict["witness"] = set_json(*v.witness);
            verdict["class1"] = v.class1;
            verdict["class0"] = v.class0;
        }
        pass = excellent;
    } else {
        throw std::invalid_argument("unknown oracle op: " + op);
    }

    json report;
    report["verdict"] = verdict;
    report["timing"] = json{{"wall_ms", wall_ms_since(start)}};
    emit(report, out);
    return pass ? kExitPass : kExitFail;
}

Graph bench_cliques_graph(std::uint64_t seed) {
    std::vector<int> sizes;
    int rem = 30000;
    Rng r(seed);
    while (rem > 3000) {
        int s = 1500 + static_cast<int>(r.below(1500));
        sizes.push_back(s);
        rem -= s;
    }
    sizes.push_back(rem);
    return union_of_cliques(sizes);
}

int run_bench(const std::string& suite, std::uint64_t seed, const std::string& out) {
    std::ostringstream csv;
    csv << "scenario,n,epsilon,t,pieces,pairs_failed,wall_ms\n";
    bool pass = true;

    if (suite == "cliques-30k") {
        auto start = std::chrono::steady_clock::now();
        Graph g = bench_cliques_graph(seed);
        PipelineConfig config;
        config.seed = seed;
        auto [partition, report] = stable_partition(g, Rational(1, 5), TreeBoundMode::Auto, 0,
                                                    config);
        csv << "cliques-30k," << g.vertex_count() << ",1/5," << report.tree_bound_t << ","
            << report.piece_count << "," << report.check.failing_pairs << ","
            << static_cast<long long>(wall_ms_since(start)) << "\n";
        pass = report.check.pass;
    } else if (suite == "oracle-corpus") {
        Rational eps(1, 5);
        for (const CorpusEntry& entry : small_corpus()) {
            auto start = std::chrono::steady_clock::now();
            Graph g = entry.graph;
            TreeBoundResult tb = empirical_tree_bound(g, 3);
            ExcellenceVerdict v = brute_force_excellent(g, full_set(g.vertex_count()), eps);
            int excellent = v.kind == ExcellenceKind::ExcellentExact ? 1 : 0;
            csv << entry.name << "," << g.vertex_count() << ",1/5,"
                << (tb.certified ? tb.t : 0) << "," << excellent << ",0,"
                << static_cast<long long>(wall_ms_since(start)) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot open output file: " + out);
        f << csv.str();
    }
    return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable regularity toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph edge list");
    gen_cmd->add_option("--family", gen.family,
                        "half-graph | cliques | multipartite | gnp | special-tree | planted")
        ->required();
    gen_cmd->add_option("--k", gen.k, "half-graph length");
    gen_cmd->add_option("--sizes", gen.sizes, "comma-separated part sizes");
    gen_cmd->add_option("--n", gen.n, "vertex count (gnp, planted base)");
    gen_cmd->add_option("--p", gen.p, "edge probability as a rational");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--base", gen.base, "planted base: empty | gnp | cliques");
    gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

    std::string st_input, st_out;
    int st_k = 0;
    std::uint64_t st_budget = kDefaultBudget;
    auto* st_cmd = app.add_subcommand("stability", "search for a half-graph of length k");
    st_cmd->add_option("--input", st_input, "edge list path")->required();
    st_cmd->add_option("--k", st_k, "half-graph length")->required();
    st_cmd->add_option("--budget", st_budget, "search budget");
    st_cmd->add_option("--out", st_out, "report path (default stdout)");

    std::string tb_input, tb_out;
    int tb_max = 6;
    std::uint64_t tb_budget = kDefaultBudget;
    auto* tb_cmd = app.add_subcommand("treebound", "smallest height with no full special tree");
    tb_cmd->add_option("--input", tb_input, "edge list path")->required();
    tb_cmd->add_option("--max-height", tb_max, "largest height probed");
    tb_cmd->add_option("--budget", tb_budget, "search budget");
    tb_cmd->add_option("--out", tb_out, "report path (default stdout)");

    PartitionOptions part;
    auto* part_cmd = app.add_subcommand("partition", "build and certify a stable partition");
    part_cmd->add_option("--input", part.input, "edge list path")->required();
    part_cmd->add_option("--epsilon", part.epsilon, "rational in (0, 1/2)")->required();
    part_cmd->add_option("--tree-bound", part.tree_bound, "auto | <height> | from-k:<k>");
    part_cmd->add_option("--seed", part.seed, "random seed");
    part_cmd->add_option("--max-retries", part.max_retries, "refinement retry cap");
    part_cmd->add_option("--budget", part.budget, "witness search budget");
    part_cmd->add_option("--samples", part.samples, "sampled split candidates per size");
    part_cmd->add_option("--threads", part.threads, "worker cap");
    part_cmd->add_option("--out", part.out, "report path (default stdout)");
    part_cmd->add_option("--pieces-out", part.pieces_out, "partition file, one piece per line");

    std::string vf_input, vf_partition, vf_epsilon, vf_bound, vf_out;
    auto* vf_cmd = app.add_subcommand("verify", "certify an existing partition");
    vf_cmd->add_option("--input", vf_input, "edge list path")->required();
    vf_cmd->add_option("--partition", vf_partition, "partition file, one piece per line")
        ->required();
    vf_cmd->add_option("--epsilon", vf_epsilon, "rational in (0, 1/2)")->required();
    vf_cmd->add_option("--bound", vf_bound, "maximum admissible piece count");
    vf_cmd->add_option("--out", vf_out, "report path (default stdout)");

    std::string or_input, or_op, or_set, or_epsilon, or_out;
    auto* or_cmd = app.add_subcommand("oracle", "exact goodness/excellence checks");
    or_cmd->add_option("--input", or_input, "edge list path")->required();
    or_cmd->add_option("--op", or_op, "good | excellent")->required();
    or_cmd->add_option("--set", or_set, "comma-separated vertex ids")->required();
    or_cmd->add_option("--epsilon", or_epsilon, "rational in (0, 1/2)")->required();
    or_cmd->add_option("--out", or_out, "report path (default stdout)");

    std::string bn_suite, bn_out;
    std::uint64_t bn_seed = 11;
    auto* bn_cmd = app.add_subcommand("bench", "benchmark suites, CSV output");
    bn_cmd->add_option("--suite", bn_suite, "cliques-30k | oracle-corpus")->required();
    bn_cmd->add_option("--seed", bn_seed, "random seed");
    bn_cmd->add_option("--out", bn_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (st_cmd->parsed()) return run_stability(st_input, st_k, st_budget, st_out);
        if (tb_cmd->parsed()) return run_treebound(tb_input, tb_max, tb_budget, tb_out);
        if (part_cmd->parsed()) return run_partition(part);
        if (vf_cmd->parsed())
            return run_verify(vf_input, vf_partition, vf_epsilon, vf_bound, vf_out);
        if (or_cmd->parsed()) return run_oracle(or_input, or_op, or_set, or_epsilon, or_out);
        if (bn_cmd->parsed()) return run_bench(bn_suite, bn_seed, bn_out);
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NoAdmissibleTreeBound& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const RefineError& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
