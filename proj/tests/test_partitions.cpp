#include <catch2/catch_amalgamated.hpp>

#include "dt4/partitions.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dt4;

TEST_CASE("plane partition counts match the DFS oracle") {
    const int expected[] = {1, 1, 3, 6, 13, 24, 48};
    for (int n = 0; n <= 6; ++n) {
        const auto list = enumerate_plane(n);
        CHECK(list.size() == static_cast<std::size_t>(expected[n]));
        const auto oracle = oracle::dfs_plane(n);
        CHECK(oracle.size() == list.size());
        // same underlying sets, not just the same cardinality
        std::set<std::vector<int>> keys;
        for (const auto& p : list) keys.insert(p.canonical_key(std::max(n, 1)));
        CHECK(keys == oracle);
    }
}

TEST_CASE("solid partition counts match the DFS oracle") {
    const int expected[] = {1, 1, 4, 10, 26, 59, 140, 307};
    for (int n = 0; n <= 7; ++n) {
        const auto list = enumerate_solid(n);
        CHECK(list.size() == static_cast<std::size_t>(expected[n]));
        if (n <= 6) {
            const auto oracle = oracle::dfs_solid(n);
            REQUIRE(oracle.size() == list.size());
            std::set<std::vector<int>> keys;
            for (const auto& p : list) keys.insert(p.canonical_key(std::max(n, 1)));
            CHECK(keys == oracle);
        }
    }
}

TEST_CASE("every emitted solid partition is three-directionally monotone") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : enumerate_solid(n)) {
            CHECK(p.valid());
            CHECK(p.size() == n);
        }
}

TEST_CASE("enumeration order is canonical and deterministic") {
    for (int n : {3, 5}) {
        const auto a = enumerate_solid(n);
        const auto b = enumerate_solid(n);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        for (std::size_t i = 1; i < a.size(); ++i)
            CHECK(a[i - 1].canonical_key(n) < a[i].canonical_key(n));
    }
}

TEST_CASE("divisor support") {
    SECTION("single box") {
        const SolidPartition pi = testutil::sp({{{1}}});
        const auto lam = divisor_support(pi);
        REQUIRE(lam.has_value());
        CHECK(lam->rows() == std::vector<std::vector<int>>{{1}});
    }
    SECTION("height two is not supported") {
        const SolidPartition pi = testutil::sp({{{2}}});
        CHECK_FALSE(divisor_support(pi).has_value());
    }
    SECTION("three flat boxes transcribe") {
        // pi_{111} = pi_{121} = pi_{112} = 1
        const SolidPartition pi = testutil::sp({{{1, 1}, {1}}});
        const auto lam = divisor_support(pi);
        REQUIRE(lam.has_value());
        CHECK(lam->rows() == std::vector<std::vector<int>>{{2, 1}});
        CHECK(lam->valid());
        CHECK(lam->size() == pi.size());
    }
}

TEST_CASE("divisor support is a size-preserving bijection onto plane partitions") {
    for (int n = 1; n <= 5; ++n) {
        const auto planes = enumerate_plane(n);
        std::vector<PlanePartition> images;
        for (const auto& pi : enumerate_solid(n)) {
            if (auto lam = divisor_support(pi)) {
                CHECK(lam->size() == pi.size());
                images.push_back(*lam);
            }
        }
        REQUIRE(images.size() == planes.size());
        // injectivity + surjectivity by double counting
        for (const auto& lam : planes) {
            int hits = 0;
            for (const auto& img : images)
                if (img == lam) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("boxes carry the l coordinate") {
    const SolidPartition pi = testutil::sp({{{2}}});
    const auto bx = pi.boxes();
    REQUIRE(bx.size() == 2);
    CHECK(bx[0].l == 1);
    CHECK(bx[1].l == 2);
    CHECK(bx[1].i == 1);
}

TEST_CASE("invalid arrays are rejected") {
    CHECK_THROWS_AS(testutil::sp({{{1, 2}}}), std::invalid_argument); // grows along k
    CHECK_THROWS_AS(testutil::sp({{{1}}, {{2}}}), std::invalid_argument); // grows along i
    CHECK_THROWS_AS(testutil::pp({{1, 2}}), std::invalid_argument);
}
