#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "bn/batch.hpp"
#include "bn/corpus.hpp"
#include "bn/graph.hpp"
#include "test_util.hpp"

using bn::BatchOptions;
using bn::Suite;
using nlohmann::json;

namespace {

std::vector<std::string> fixture_lines(const std::string& name) {
    std::istringstream in(testutil::fixture(name));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("suite names round trip") {
    for (Suite s : {Suite::chain, Suite::corona, Suite::trees, Suite::caterpillars, Suite::q61,
                    Suite::all}) {
        CHECK(bn::suite_from_string(bn::to_string(s)) == s);
    }
    CHECK_THROWS_AS(bn::suite_from_string("bogus"), bn::PreconditionError);
}

TEST_CASE("chain suite over a small corpus") {
    std::vector<std::string> lines;
    for (const auto& g : bn::enumerate_connected_graphs(4)) lines.push_back(bn::emit_graph6(g));
    lines.push_back("");
    lines.push_back("# a comment");
    lines.push_back("not-graph6!!");

    auto result = bn::run_batch(lines, BatchOptions{Suite::chain, 1});
    CHECK(result.passed == 6);
    CHECK(result.failed == 0);
    CHECK(result.parse_errors == 1);
    CHECK(result.records.size() == 7);

    auto first = json::parse(result.records.front());
    CHECK(first["suite"] == "chain");
    CHECK(first["n"] == 4);
    CHECK(first["outcome"] == "pass");
    CHECK(first["alpha_bn"].is_number_integer());

    auto last = json::parse(result.records.back());
    CHECK(last["outcome"] == "parse_error");

    auto summary = json::parse(result.summary);
    CHECK(summary["passed"] == 6);
    CHECK(summary["parse_errors"] == 1);
    CHECK(summary["records"] == 7);
}

TEST_CASE("chain suite reports the computed values") {
    auto result = bn::run_batch({bn::emit_graph6(testutil::path(4))}, BatchOptions{});
    auto rec = json::parse(result.records.at(0));
    CHECK(rec["alpha"] == 2);
    CHECK(rec["alpha_bn"] == 3);
    CHECK(rec["alpha_h"] == 4);
    for (const auto& [name, held] : rec["checks"].items()) {
        CAPTURE(name);
        CHECK(held == true);
    }
}

TEST_CASE("suites skip what they cannot judge") {
    std::string k1 = "@";
    std::string p12 = bn::emit_graph6(testutil::path(12));
    std::string c4 = bn::emit_graph6(testutil::cycle(4));

    auto corona = bn::run_batch({k1}, BatchOptions{Suite::corona, 1});
    CHECK(corona.skipped == 1);

    auto trees = bn::run_batch({c4}, BatchOptions{Suite::trees, 1});
    CHECK(trees.skipped == 1);
    CHECK(json::parse(trees.records[0])["reason"] == "not a tree");

    auto q61 = bn::run_batch({p12}, BatchOptions{Suite::q61, 1});
    CHECK(q61.skipped == 1);
}

TEST_CASE("caterpillar suite flags the rejected closed-form witness as a finding") {
    auto result =
        bn::run_batch({bn::emit_graph6(testutil::path(3))}, BatchOptions{Suite::caterpillars, 1});
    CHECK(result.findings == 1);
    CHECK(result.failed == 0);
    auto rec = json::parse(result.records[0]);
    CHECK(rec["outcome"] == "finding");
    CHECK(rec["closed_form"]["witness_verified"] == false);
}

TEST_CASE("tree suites pass over the bundled tree corpus") {
    auto result = bn::run_batch(fixture_lines("trees_upto9.g6"), BatchOptions{Suite::trees, 4});
    CHECK(result.failed == 0);
    CHECK(result.parse_errors == 0);
    CHECK(result.passed == 94);
}

TEST_CASE("the full suite composes section outcomes") {
    auto result =
        bn::run_batch({bn::emit_graph6(testutil::double_star_22())}, BatchOptions{Suite::all, 1});
    auto rec = json::parse(result.records[0]);
    CHECK(rec["outcome"] == "pass");
    CHECK(rec["sections"]["chain"]["outcome"] == "pass");
    CHECK(rec["sections"]["corona"]["outcome"] == "pass");
    CHECK(rec["sections"]["trees"]["outcome"] == "pass");
    CHECK(rec["sections"]["caterpillars"]["outcome"] == "pass");
    CHECK(rec["sections"]["q61"]["outcome"] == "pass");
}

TEST_CASE("worker count never changes the bytes") {
    auto lines = fixture_lines("connected_upto6.g6");
    auto serial = bn::run_batch(lines, BatchOptions{Suite::chain, 1});
    auto threaded = bn::run_batch(lines, BatchOptions{Suite::chain, 4});
    CHECK(serial.jsonl() == threaded.jsonl());

    auto all_serial = bn::run_batch(fixture_lines("trees_upto9.g6"), BatchOptions{Suite::all, 1});
    auto all_threaded = bn::run_batch(fixture_lines("trees_upto9.g6"), BatchOptions{Suite::all, 8});
    CHECK(all_serial.jsonl() == all_threaded.jsonl());
}
