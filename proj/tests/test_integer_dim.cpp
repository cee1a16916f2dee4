#include <catch2/catch_amalgamated.hpp>

#include "mdim/families.hpp"
#include "mdim/frac_dim.hpp"
#include "mdim/integer_dim.hpp"
#include "support/oracles.hpp"

using namespace mdim;

namespace {

Graph fam(const std::string& s) { return generate(FamilySpec::parse(s)); }

} // namespace

TEST_CASE("paper values for the branch-and-bound solver") {
    CHECK(k_metric_dimension(fam("grid:3x4"), 3).value == 6); // 2k on grids
    CHECK(k_metric_dimension(fam("path:9"), 1).value == 1);
    CHECK(k_metric_dimension(fam("multipartite:1,1,1,1,1"), 1).value == 4); // K_5
    CHECK(metric_dimension(fam("multipartite:1,1,1,1")).value == 3);        // K_4
    CHECK(metric_dimension(fam("path:2")).value == 1);
    CHECK(metric_dimension(fam("cycle:6")).value == 2);
}

TEST_CASE("remark construction: odd k pays the extra n/2") {
    const PairSystem ps = pair_system(fam("remark:path:2,s=2"));
    CHECK(k_metric_dimension(ps, 2).value == 6);  // 3kn/2, even
    CHECK(k_metric_dimension(ps, 4).value == 12); // 3kn/2, even
    CHECK(k_metric_dimension(ps, 3).value == 10); // (3k+1)n/2, odd
    CHECK(fractional_k_dimension(ps, Rational(3)).value == Rational(9)); // gap of n/2
}

TEST_CASE("witnesses are genuine k-resolving sets of the stated size") {
    for (const char* name : {"petersen", "grid:2x4", "wheel:6", "cycle:7"}) {
        const Graph g = fam(name);
        const PairSystem ps = pair_system(g);
        for (int k = 1; k <= ps.kappa; ++k) {
            const auto res = k_metric_dimension(ps, k);
            CHECK(res.witness.count() == static_cast<std::size_t>(res.value));
            CHECK(is_k_resolving_set(ps, res.witness, k));
        }
    }
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_k_metric_dimension(fam("cycle:3"), 2).value == 3);  // K_3, all vertices
    CHECK(brute_force_k_metric_dimension(fam("path:4"), 1).value == 1);
    CHECK(brute_force_k_metric_dimension(fam("cycle:5"), 4).value == 5);  // every rset has size 4

    const auto res = brute_force_k_metric_dimension(fam("cycle:5"), 4);
    CHECK(res.witness.count() == 5);
}

TEST_CASE("enumeration guard refuses oversized graphs explicitly") {
    CHECK_THROWS_WITH(brute_force_k_metric_dimension(fam("path:18"), 1),
                      Catch::Matchers::ContainsSubstring("guard"));
    CHECK_THROWS_AS(brute_force_k_metric_dimension(fam("grid:5x5"), 1, 16), domain_error);
    CHECK_NOTHROW(brute_force_k_metric_dimension(fam("path:18"), 1, 18));
}

TEST_CASE("k range validation") {
    const Graph g = fam("cycle:6");
    CHECK_THROWS_AS(k_metric_dimension(g, 0), domain_error);
    CHECK_THROWS_WITH(k_metric_dimension(g, 5), Catch::Matchers::ContainsSubstring("kappa=4"));
    CHECK_THROWS_AS(brute_force_k_metric_dimension(g, 5), domain_error);
}

TEST_CASE("branch-and-bound equals brute force on families and random graphs") {
    std::vector<Graph> corpus;
    for (const char* name : {"path:6", "cycle:5", "cycle:8", "wheel:6", "bouquet:3,4",
                             "multipartite:1,2,2", "grid:2x4", "spider:1,2,3"})
        corpus.push_back(fam(name));
    mdim::testing::Rng rng(606);
    for (int i = 0; i < 10; ++i)
        corpus.push_back(mdim::testing::random_connected_graph(rng, 4 + rng.below(5)));

    for (const Graph& g : corpus) {
        const PairSystem ps = pair_system(g);
        for (int k = 1; k <= ps.kappa; ++k) {
            const auto fast = k_metric_dimension(ps, k);
            const auto slow = brute_force_k_metric_dimension(g, k);
            CHECK(fast.value == slow.value);
        }
    }
}

TEST_CASE("fractional value never exceeds the integer value") {
    for (const char* name : {"petersen", "cycle:9", "wheel:7", "grid:3x3", "spider:1,2,2"}) {
        const Graph g = fam(name);
        const PairSystem ps = pair_system(g);
        for (int k = 1; k <= ps.kappa; ++k) {
            const Rational frac = fractional_k_dimension(ps, Rational(k)).value;
            const int integral = k_metric_dimension(ps, k).value;
            CHECK(frac <= Rational(integral));
        }
    }
}

TEST_CASE("metric dimension chain dim_f <= dim <= dim^k") {
    for (const char* name : {"petersen", "cycle:6", "grid:2x3", "multipartite:2,3"}) {
        const Graph g = fam(name);
        const PairSystem ps = pair_system(g);
        const Rational dim_f = fractional_dimension(ps).value;
        const int dim = k_metric_dimension(ps, 1).value;
        CHECK(dim_f <= Rational(dim));
        for (int k = 2; k <= ps.kappa; ++k)
            CHECK(dim <= k_metric_dimension(ps, k).value);
    }
}

TEST_CASE("deterministic results across repeated solves") {
    const PairSystem ps = pair_system(fam("grid:3x3"));
    const auto a = k_metric_dimension(ps, 3);
    const auto b = k_metric_dimension(ps, 3);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
}
