#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bn/batch.hpp"
#include "bn/broadcast.hpp"
#include "bn/constructions.hpp"
#include "bn/corpus.hpp"
#include "bn/errors.hpp"
#include "bn/graph.hpp"
#include "bn/solvers.hpp"
#include "bn/tree_analysis.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw bn::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// "auto" resolves from the file extension; stdin defaults to the edge-list
// format unless forced.
bn::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    bool graph6 = format == "graph6";
    if (format == "auto" && path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        graph6 = true;
    }
    if (!graph6) return bn::parse_edge_list(text);
    for (const auto& line : split_lines(text)) {
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        return bn::parse_graph6(line.substr(begin));
    }
    throw bn::ParseError("no graph6 line in '" + path + "'");
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : doc.items()) {
        std::cout << key << " = ";
        if (value.is_string()) {
            std::cout << value.get<std::string>();
        } else if (value.is_boolean()) {
            std::cout << yesno(value.get<bool>());
        } else {
            std::cout << value.dump();
        }
        std::cout << "\n";
    }
}

int run_solve(const std::string& path, const std::string& informat, const std::string& param,
              const std::string& format) {
    bn::Graph g = load_graph(path, informat);
    json doc;
    doc["param"] = param;
    if (param == "alpha") {
        auto r = bn::solve_alpha(g);
        doc["value"] = r.value;
        doc["witness"] = r.witness.to_vector();
        doc["nodes"] = r.stats.nodes;
    } else {
        auto r = param == "hearing" ? bn::solve_alpha_h(g) : bn::solve_alpha_bn(g);
        doc["value"] = r.value;
        doc["witness"] = r.witness;
        doc["nodes"] = r.stats.nodes;
    }
    emit(doc, format);
    return 0;
}

int run_verify(const std::string& path, const std::string& informat,
               const std::string& broadcast_path, const std::string& format) {
    bn::Graph g = load_graph(path, informat);
    bn::Broadcast f = bn::broadcast_from_json(g, read_input(broadcast_path));
    auto analysis = bn::analyze(f);

    json over = json::array();
    for (int u = 0; u < g.order(); ++u) {
        for (auto [v, slack] : bn::overdomination(f, u)) {
            if (v == u) continue;
            over.push_back(json{{"by", v}, {"slack", slack}, {"vertex", u}});
        }
    }
    json uncovered = json::array();
    for (auto [u, v] : analysis.uncovered_edges) uncovered.push_back(json::array({u, v}));

    json doc{{"boundary_independent_definitional", bn::is_boundary_independent_definitional(f)},
             {"boundary_independent_pairwise", bn::is_boundary_independent_pairwise(f)},
             {"broadcasters", f.broadcasters()},
             {"cost", f.cost()},
             {"dominating", bn::is_dominating(f)},
             {"hearing_independent", bn::is_hearing_independent(f)},
             {"overdominated", over},
             {"uncovered_edges", uncovered},
             {"undominated", analysis.undominated.to_vector()}};
    emit(doc, format);
    return 0;
}

int run_reduce(const std::string& path, const std::string& informat, int k,
               const std::string& format) {
    bn::Graph g = load_graph(path, informat);
    auto r = bn::reduce_is_decision(g, k);
    std::vector<int> leaf_of(g.order());
    for (int v = 0; v < g.order(); ++v) leaf_of[v] = r.corona.leaf_of(v);
    json doc{{"corona_graph6", bn::emit_graph6(r.corona.corona)},
             {"corona_order", r.corona.corona.order()},
             {"leaf_of", leaf_of},
             {"threshold", r.threshold}};
    emit(doc, format);
    return 0;
}

int run_tree(const std::string& path, const std::string& informat, const std::string& show,
             const std::string& format) {
    bn::Graph g = load_graph(path, informat);
    json doc;
    if (show == "partition" || show == "all") {
        auto part = bn::classify(g);
        doc["partition"] = json{{"branches", part.branches.to_vector()},
                                {"eligible_branches", part.eligible_branches.to_vector()},
                                {"leaves", part.leaves.to_vector()},
                                {"trunks", part.trunks.to_vector()}};
    }
    if (show == "reduction" || show == "all") {
        auto bl = bn::branch_leaf_representation(g);
        doc["reduction"] = json{{"graph6", bn::emit_graph6(bl.reduced)},
                                {"kept", bl.to_original},
                                {"order", bl.reduced.order()}};
    }
    if (show == "bounds" || show == "all") {
        json bounds;
        auto part = bn::classify(g);
        if (!part.branches.empty()) bounds["branch_bound"] = bn::neilson_tree_bound(g);
        if (bn::is_caterpillar(g)) bounds["caterpillar_bound"] = bn::caterpillar_bound(g);
        doc["bounds"] = bounds;
    }
    if (show == "caterpillar" || show == "all") {
        auto shape = bn::is_caterpillar(g);
        if (shape) {
            doc["caterpillar"] = json{{"inner_leaves", shape->inner_leaves},
                                      {"leaf_order", shape->leaf_order},
                                      {"spine", shape->spine}};
            auto c55 = bn::corollary_55(g);
            if (c55.status != bn::Cor55Status::not_applicable) {
                json cf{{"family", c55.which == bn::Cor55Case::trunkless ? "trunkless"
                                                                         : "isolated_trunks"},
                        {"value", c55.value},
                        {"witness_verified", c55.status == bn::Cor55Status::ok}};
                if (c55.status == bn::Cor55Status::ok) cf["witness"] = c55.witness;
                doc["closed_form"] = cf;
            }
        } else if (show == "caterpillar") {
            doc["caterpillar"] = nullptr;
        }
    }

    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& [section, body] : doc.items()) {
            std::cout << section << ":";
            if (body.is_null()) {
                std::cout << " none";
            } else {
                for (const auto& [key, value] : body.items()) {
                    std::cout << " " << key << "=" << value.dump();
                }
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_convert(const std::string& path, const std::string& informat, const std::string& to) {
    bn::Graph g = load_graph(path, informat);
    if (to == "g6") {
        std::cout << bn::emit_graph6(g) << "\n";
    } else if (to == "edges") {
        std::cout << bn::emit_edge_list(g);
    } else {
        std::cout << bn::to_dot(g);
    }
    return 0;
}

int run_batch(const std::string& path, const std::string& suite, int jobs) {
    auto lines = split_lines(read_input(path));
    bn::BatchOptions opts;
    opts.suite = bn::suite_from_string(suite);
    opts.jobs = jobs;
    auto result = bn::run_batch(lines, opts);
    std::cout << result.jsonl();
    if (result.failed > 0) return 4;
    if (result.parse_errors > 0) return 2;
    return 0;
}

int run_gen(const std::string& family, int n, int count, unsigned long long seed) {
    std::vector<bn::Graph> graphs;
    if (family == "connected") {
        graphs = bn::enumerate_connected_graphs(n);
    } else if (family == "trees") {
        graphs = bn::enumerate_trees(n);
    } else if (family == "caterpillars") {
        graphs = bn::enumerate_caterpillars(n);
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            graphs.push_back(family == "random-connected" ? bn::random_connected_graph(n, rng)
                                                          : bn::random_caterpillar(n, rng));
        }
    }
    for (const auto& g : graphs) std::cout << bn::emit_graph6(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and verification for boundary-independent broadcasts"};
    app.require_subcommand(1);

    std::string path;
    std::string informat = "auto";
    std::string format = "text";
    std::string param = "bn";
    std::string broadcast_path;
    std::string show = "all";
    std::string to = "g6";
    std::string suite = "chain";
    std::string family;
    int k = 0;
    int jobs = 1;
    int gen_n = 0;
    int count = 20;
    unsigned long long seed = 1;
    int rc = 0;

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("graph", path, "graph file, or '-' for stdin")->required();
        cmd->add_option("--input-format", informat, "edges|graph6|auto (default: by extension)")
            ->check(CLI::IsMember({"edges", "graph6", "auto"}));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* solve = app.add_subcommand("solve", "maximum broadcast or independence number");
    add_graph_arg(solve);
    add_format(solve);
    solve->add_option("--param", param, "alpha|bn|hearing")
        ->check(CLI::IsMember({"alpha", "bn", "hearing"}));
    solve->callback([&] { rc = run_solve(path, informat, param, format); });

    auto* verify = app.add_subcommand("verify", "check a broadcast against a graph");
    add_graph_arg(verify);
    add_format(verify);
    verify->add_option("broadcast", broadcast_path, "broadcast JSON file, or '-' for stdin")
        ->required();
    verify->callback([&] { rc = run_verify(path, informat, broadcast_path, format); });

    auto* reduce = app.add_subcommand(
        "reduce", "independent-set decision instance as a corona broadcast threshold");
    add_graph_arg(reduce);
    add_format(reduce);
    reduce->add_option("--k", k, "independent-set size to decide")->required();
    reduce->callback([&] { rc = run_reduce(path, informat, k, format); });

    auto* tree = app.add_subcommand("tree", "structure of a tree instance");
    add_graph_arg(tree);
    add_format(tree);
    tree->add_option("--show", show, "partition|reduction|bounds|caterpillar|all")
        ->check(CLI::IsMember({"partition", "reduction", "bounds", "caterpillar", "all"}));
    tree->callback([&] { rc = run_tree(path, informat, show, format); });

    auto* convert = app.add_subcommand("convert", "rewrite a graph in another format");
    add_graph_arg(convert);
    convert->add_option("--to", to, "g6|edges|dot")->check(CLI::IsMember({"g6", "edges", "dot"}));
    convert->callback([&] { rc = run_convert(path, informat, to); });

    auto* batch = app.add_subcommand("batch", "run a check suite over a graph6 corpus");
    batch->add_option("corpus", path, "graph6 lines, or '-' for stdin")->required();
    batch->add_option("--suite", suite, "chain|corona|trees|caterpillars|q61|all")
        ->check(CLI::IsMember({"chain", "corona", "trees", "caterpillars", "q61", "all"}));
    batch->add_option("--jobs", jobs, "worker threads (output is order-stable)")
        ->check(CLI::Range(1, 64));
    batch->callback([&] { rc = run_batch(path, suite, jobs); });

    auto* gen = app.add_subcommand("gen", "emit a graph corpus as graph6 lines");
    gen->add_option("--family", family,
                    "connected|trees|caterpillars|random-connected|random-caterpillars")
        ->required()
        ->check(CLI::IsMember(
            {"connected", "trees", "caterpillars", "random-connected", "random-caterpillars"}));
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--count", count, "instances for the random families");
    gen->add_option("--seed", seed, "seed for the random families");
    gen->callback([&] { rc = run_gen(family, gen_n, count, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bn::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const bn::CheckError& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
