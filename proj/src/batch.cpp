#include "bn/batch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

#include "bn/broadcast.hpp"
#include "bn/constructions.hpp"
#include "bn/errors.hpp"
#include "bn/graph.hpp"
#include "bn/solvers.hpp"
#include "bn/tree_analysis.hpp"

namespace bn {

namespace {

using nlohmann::json;

// Exact solves stay cheap well past these sizes, but batch inputs are
// arbitrary, so cap where the search is still guaranteed interactive.
constexpr int kSolveCap = 12;
constexpr int kCoronaBaseCap = 6;

enum class Outcome { pass, fail, finding, skip, parse_error };

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::finding: return "finding";
        case Outcome::skip: return "skip";
        case Outcome::parse_error: return "parse_error";
    }
    return "fail";
}

Outcome outcome_from(const json& section) {
    const std::string& s = section.at("outcome").get_ref<const std::string&>();
    if (s == "pass") return Outcome::pass;
    if (s == "finding") return Outcome::finding;
    if (s == "skip") return Outcome::skip;
    return Outcome::fail;
}

json skip_section(const std::string& reason) {
    return json{{"outcome", "skip"}, {"reason", reason}};
}

json chain_section(const Graph& g) {
    if (!g.connected()) return skip_section("disconnected");
    if (g.order() < 2) return skip_section("broadcasts need at least two vertices");
    if (g.order() > kSolveCap) return skip_section("above exact-solve size cap");
    auto a = solve_alpha(g);
    auto b = solve_alpha_bn(g);
    auto h = solve_alpha_h(g);
    json checks{
        {"alpha_le_alpha_bn", a.value <= b.value},
        {"alpha_bn_le_alpha_h", b.value <= h.value},
        {"alpha_h_lt_twice_alpha_bn", h.value < 2 * b.value},
        {"alpha_bn_lt_twice_alpha", b.value < 2 * a.value},
        {"alpha_h_lt_four_alpha", h.value < 4 * a.value},
        {"alpha_bn_le_n_minus_min_degree", b.value <= g.order() - g.min_degree()},
    };
    bool ok = true;
    for (const auto& [key, held] : checks.items()) ok = ok && held.get<bool>();
    return json{{"alpha", a.value},
                {"alpha_bn", b.value},
                {"alpha_h", h.value},
                {"checks", checks},
                {"outcome", ok ? "pass" : "fail"}};
}

json corona_section(const Graph& g) {
    if (!g.connected()) return skip_section("disconnected");
    if (g.order() < 2) return skip_section("corona identity needs base order >= 2");
    if (g.order() > kCoronaBaseCap) return skip_section("corona above exact-solve size cap");
    auto a = solve_alpha(g);
    auto c = corona_k1(g);
    auto b = solve_alpha_bn(c.corona);
    bool identity = b.value == g.order() + a.value;
    Broadcast witness = corona_witness_broadcast(c, a.witness);
    bool witness_cost_ok = witness.cost() == g.order() + a.value;

    Broadcast optimum(c.corona, b.witness);
    json extraction;
    bool extraction_ok = true;
    try {
        auto ex = extract_is_from_corona_broadcast(c, optimum);
        extraction = json{{"size", ex.base_set.count()},
                          {"meets_guarantee", ex.base_set.count() >= b.value - g.order()}};
        extraction_ok = ex.base_set.count() >= b.value - g.order();
    } catch (const CheckError& e) {
        extraction = json{{"error", e.what()}};
        extraction_ok = false;
    }
    bool ok = identity && witness_cost_ok && extraction_ok;
    return json{{"alpha_base", a.value},
                {"alpha_bn_corona", b.value},
                {"corona_order", c.corona.order()},
                {"extraction", extraction},
                {"identity_holds", identity},
                {"outcome", ok ? "pass" : "fail"},
                {"witness_cost", witness.cost()},
                {"witness_cost_matches", witness_cost_ok}};
}

json trees_section(const Graph& g) {
    if (!g.is_tree()) return skip_section("not a tree");
    if (g.order() < 2) return skip_section("broadcasts need at least two vertices");
    if (g.order() > kSolveCap) return skip_section("above exact-solve size cap");
    auto part = classify(g);
    bool partition_ok =
        part.branches.count() + part.leaves.count() + part.trunks.count() == g.order();
    auto b = solve_alpha_bn(g);

    json out{{"alpha_bn", b.value},
             {"branches", part.branches.count()},
             {"eligible_branches", part.eligible_branches.count()},
             {"leaves", part.leaves.count()},
             {"trunks", part.trunks.count()}};
    bool ok = partition_ok;
    if (!part.branches.empty()) {
        int bound = neilson_tree_bound(g);
        bool respected = b.value <= bound;
        out["branch_bound"] = bound;
        out["branch_bound_respected"] = respected;
        ok = ok && respected;
    }
    bool path = g.max_degree() <= 2;
    bool spider = is_generalized_spider(g);
    bool extremal = b.value == g.order() - 1;
    bool characterization = extremal == (path || spider);
    out["extremal"] = extremal;
    out["extremal_iff_path_or_spider"] = characterization;
    ok = ok && characterization;
    out["outcome"] = ok ? "pass" : "fail";
    return out;
}

json caterpillars_section(const Graph& g) {
    if (!g.is_tree()) return skip_section("not a tree");
    if (g.order() < 2) return skip_section("broadcasts need at least two vertices");
    if (!is_caterpillar(g)) return skip_section("no dominating diametrical path");
    if (g.order() > kSolveCap) return skip_section("above exact-solve size cap");
    auto part = classify(g);
    int bound = caterpillar_bound(g);
    auto b = solve_alpha_bn(g);
    auto c55 = corollary_55(g);

    bool respected = b.value <= bound;
    bool ok = respected;
    bool closed_form_agrees = true;
    json closed_form{{"applicable", c55.status != Cor55Status::not_applicable}};
    if (c55.status != Cor55Status::not_applicable) {
        closed_form["family"] =
            c55.which == Cor55Case::trunkless ? "trunkless" : "isolated_trunks";
        closed_form["value"] = c55.value;
        closed_form["witness_verified"] = c55.status == Cor55Status::ok;
        if (c55.status == Cor55Status::ok) {
            closed_form_agrees = c55.value == b.value;
            ok = ok && closed_form_agrees;
            closed_form["matches_optimum"] = closed_form_agrees;
        }
    }
    Outcome outcome = ok ? Outcome::pass : Outcome::fail;
    if (ok && c55.status == Cor55Status::witness_rejected) outcome = Outcome::finding;
    return json{{"alpha_bn", b.value},
                {"bound", bound},
                {"bound_respected", respected},
                {"branches", part.branches.count()},
                {"closed_form", closed_form},
                {"outcome", outcome_name(outcome)}};
}

json q61_section(const Graph& g) {
    auto records = search_question_61({g});
    const auto& r = records.front();
    if (r.skipped) return skip_section(r.skip_reason);
    return json{{"alpha_bn", r.alpha_bn},
                {"bound", r.bound},
                {"branches", r.branch_count},
                {"eligible_branches", r.eligible_count},
                {"outcome", r.violation ? "finding" : "pass"},
                {"violation", r.violation}};
}

json guarded(json (*section)(const Graph&), const Graph& g) {
    try {
        return section(g);
    } catch (const PreconditionError& e) {
        return skip_section(e.what());
    } catch (const std::exception& e) {
        return json{{"error", e.what()}, {"outcome", "fail"}};
    }
}

json all_sections(const Graph& g) {
    json sections{{"chain", guarded(chain_section, g)},
                  {"corona", guarded(corona_section, g)},
                  {"trees", guarded(trees_section, g)},
                  {"caterpillars", guarded(caterpillars_section, g)},
                  {"q61", guarded(q61_section, g)}};
    Outcome worst = Outcome::skip;
    for (const auto& [name, section] : sections.items()) {
        Outcome o = outcome_from(section);
        if (o == Outcome::fail) worst = Outcome::fail;
        if (o == Outcome::finding && worst != Outcome::fail) worst = Outcome::finding;
        if (o == Outcome::pass && (worst == Outcome::skip)) worst = Outcome::pass;
    }
    return json{{"outcome", outcome_name(worst)}, {"sections", sections}};
}

std::string trimmed(const std::string& line) {
    auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

}  // namespace

Suite suite_from_string(const std::string& name) {
    if (name == "chain") return Suite::chain;
    if (name == "corona") return Suite::corona;
    if (name == "trees") return Suite::trees;
    if (name == "caterpillars") return Suite::caterpillars;
    if (name == "q61") return Suite::q61;
    if (name == "all") return Suite::all;
    throw PreconditionError("unknown suite '" + name +
                            "' (chain, corona, trees, caterpillars, q61, all)");
}

std::string to_string(Suite suite) {
    switch (suite) {
        case Suite::chain: return "chain";
        case Suite::corona: return "corona";
        case Suite::trees: return "trees";
        case Suite::caterpillars: return "caterpillars";
        case Suite::q61: return "q61";
        case Suite::all: return "all";
    }
    return "chain";
}

std::string BatchResult::jsonl() const {
    std::string out;
    for (const auto& r : records) {
        out += r;
        out += '\n';
    }
    out += summary;
    out += '\n';
    return out;
}

BatchResult run_batch(const std::vector<std::string>& lines, const BatchOptions& options) {
    std::vector<std::string> items;
    for (const auto& line : lines) {
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        items.push_back(std::move(t));
    }

    std::vector<std::string> rendered(items.size());
    std::vector<Outcome> outcomes(items.size(), Outcome::skip);

    auto process = [&](size_t i) {
        json rec{{"index", static_cast<int>(i)},
                 {"input", items[i]},
                 {"suite", to_string(options.suite)}};
        try {
            Graph g = parse_graph6(items[i]);
            json section;
            switch (options.suite) {
                case Suite::chain: section = guarded(chain_section, g); break;
                case Suite::corona: section = guarded(corona_section, g); break;
                case Suite::trees: section = guarded(trees_section, g); break;
                case Suite::caterpillars: section = guarded(caterpillars_section, g); break;
                case Suite::q61: section = guarded(q61_section, g); break;
                case Suite::all: section = all_sections(g); break;
            }
            rec["n"] = g.order();
            rec.update(section);
            outcomes[i] = outcome_from(section);
        } catch (const ParseError& e) {
            rec["error"] = e.what();
            rec["outcome"] = "parse_error";
            outcomes[i] = Outcome::parse_error;
        }
        rendered[i] = rec.dump();
    };

    int jobs = std::clamp(options.jobs, 1, 64);
    if (jobs == 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) process(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
                process(i);
            }
        };
        std::vector<std::thread> pool;
        int spawn = std::min<int>(jobs, static_cast<int>(items.size()));
        pool.reserve(spawn);
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    BatchResult result;
    result.records = std::move(rendered);
    for (Outcome o : outcomes) {
        switch (o) {
            case Outcome::pass: ++result.passed; break;
            case Outcome::fail: ++result.failed; break;
            case Outcome::finding: ++result.findings; break;
            case Outcome::skip: ++result.skipped; break;
            case Outcome::parse_error: ++result.parse_errors; break;
        }
    }
    json summary{{"failed", result.failed},
                 {"findings", result.findings},
                 {"parse_errors", result.parse_errors},
                 {"passed", result.passed},
                 {"records", static_cast<int>(items.size())},
                 {"skipped", result.skipped},
                 {"suite", to_string(options.suite)}};
    result.summary = summary.dump();
    return result;
}

}  // namespace bn
