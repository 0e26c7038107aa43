#include "doctest.h"

#include "bn/broadcast.hpp"
#include "bn/constructions.hpp"
#include "bn/corpus.hpp"
#include "bn/errors.hpp"
#include "bn/solvers.hpp"
#include "test_util.hpp"

using bn::Broadcast;
using bn::Graph;
using bn::VertexSet;

TEST_CASE("corona structure") {
    auto g = testutil::path(3);
    auto c = bn::corona_k1(g);
    CHECK(c.base_n == 3);
    CHECK(c.corona.order() == 6);
    CHECK(c.corona.size() == 5);
    CHECK(c.leaf_of(0) == 3);
    CHECK(c.is_leaf(4));
    CHECK_FALSE(c.is_leaf(2));
    CHECK(c.base_of_leaf(5) == 2);
    for (int v = 0; v < 3; ++v) {
        CHECK(c.corona.adjacent(v, c.leaf_of(v)));
        CHECK(c.corona.degree(c.leaf_of(v)) == 1);
    }
}

TEST_CASE("corona optimum equals base order plus independence number") {
    for (const Graph& g : {testutil::complete(4), testutil::path(3), testutil::cycle(5),
                           testutil::star(3), testutil::double_star_22()}) {
        auto c = bn::corona_k1(g);
        int alpha = bn::solve_alpha(g).value;
        CHECK(bn::solve_alpha_bn(c.corona).value == g.order() + alpha);
    }
}

TEST_CASE("witness broadcast attains the corona bound") {
    auto g = testutil::cycle(5);
    auto c = bn::corona_k1(g);
    auto alpha = bn::solve_alpha(g);
    Broadcast f = bn::corona_witness_broadcast(c, alpha.witness);
    CHECK(f.cost() == g.order() + alpha.value);
    CHECK(bn::is_boundary_independent_definitional(f));
    for (int v : alpha.witness.to_vector()) CHECK(f.strength(c.leaf_of(v)) == 2);

    CHECK_THROWS_AS(bn::corona_witness_broadcast(c, VertexSet::of(5, {0, 1})),
                    bn::PreconditionError);  // adjacent in the base
}

TEST_CASE("extraction reads an independent set back off a corona optimum") {
    for (const Graph& g : {testutil::complete(4), testutil::path(4), testutil::cycle(5)}) {
        auto c = bn::corona_k1(g);
        auto best = bn::solve_alpha_bn(c.corona);
        auto ex = bn::extract_is_from_corona_broadcast(c, Broadcast(c.corona, best.witness));
        CHECK(ex.base_set.count() >= best.value - g.order());
        CHECK(ex.base_set.count() == bn::solve_alpha(g).value);
    }
}

TEST_CASE("extraction normalizes base broadcasters onto their leaves") {
    auto g = testutil::path(3);
    auto c = bn::corona_k1(g);
    Broadcast f(c.corona, {3, 0, 0, 0, 0, 0});
    auto ex = bn::extract_is_from_corona_broadcast(c, f);
    CHECK(ex.normalized[0] == 0);
    CHECK(ex.normalized[c.leaf_of(0)] == 2);
    CHECK(ex.base_set.contains(0));

    auto k1_corona = bn::corona_k1(Graph(1, {}));
    Broadcast on_p2(k1_corona.corona, {1, 0});
    CHECK_THROWS_AS(bn::extract_is_from_corona_broadcast(k1_corona, on_p2),
                    bn::PreconditionError);
}

TEST_CASE("decision reduction transports thresholds both ways") {
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : bn::enumerate_connected_graphs(n)) {
            CAPTURE(bn::emit_graph6(g));
            int alpha = bn::solve_alpha(g).value;
            int corona_opt = -1;
            for (int k = 0; k <= n; ++k) {
                auto r = bn::reduce_is_decision(g, k);
                CHECK(r.threshold == n + k);
                if (corona_opt < 0) corona_opt = bn::solve_alpha_bn(r.corona.corona).value;
                CHECK((alpha >= k) == (corona_opt >= r.threshold));
            }
        }
    }
    CHECK_THROWS_AS(bn::reduce_is_decision(testutil::path(3), 4), bn::PreconditionError);
    CHECK_THROWS_AS(bn::reduce_is_decision(testutil::path(3), -1), bn::PreconditionError);
}

TEST_CASE("generalized spiders have exactly one branch vertex") {
    CHECK(bn::is_generalized_spider(testutil::star(3)));
    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(bn::is_generalized_spider(spider));
    CHECK_FALSE(bn::is_generalized_spider(testutil::path(5)));
    CHECK_FALSE(bn::is_generalized_spider(testutil::double_star_22()));
    CHECK_FALSE(bn::is_generalized_spider(testutil::cycle(4)));
    CHECK_FALSE(bn::is_generalized_spider(testutil::working_example()));
}
