#include <doctest.h>

#include <random>
#include <set>

#include "chevalgebra/rootsys.hpp"

using namespace chevalgebra;

static void check_invariants(const RootSystem& rs) {
    std::set<LatVec> all(rs.roots.begin(), rs.roots.end());
    CHECK(all.size() == rs.roots.size());
    for (int i = 0; i < rs.size(); ++i) {
        CHECK(kappa(rs.roots[i], rs.roots[i]) == 2);
        CHECK(all.count(lat_neg(rs.roots[i])) == 1);
        CHECK(rs.neg[rs.neg[i]] == i);
        for (int j = 0; j < rs.size(); ++j) {
            int k = rs.kappa_rr(i, j);
            CHECK(k >= -2);
            CHECK(k <= 2);
            // closure: kappa = -1 iff the sum is a root
            CHECK((k == -1) == (rs.sum_index[i][j] >= 0));
        }
    }
    // positives come first and are the lex-sorted negation half
    for (int i = 0; i < rs.num_positive; ++i) CHECK(rs.neg[i] >= rs.num_positive);
}

TEST_CASE("root counts per type") {
    CHECK(RootSystem::build('A', 3).size() == 12);
    CHECK(RootSystem::build('A', 3).num_positive == 6);
    CHECK(RootSystem::build('A', 4).size() == 20);
    CHECK(RootSystem::build('D', 4).size() == 24);
    CHECK(RootSystem::build('D', 5).size() == 40);
    CHECK(RootSystem::build('E', 6).size() == 72);
    CHECK(RootSystem::build('E', 7).size() == 126);
    CHECK(RootSystem::build('E', 8).size() == 240);
}

TEST_CASE("invalid ranks are rejected with the admitted ranges") {
    CHECK_THROWS_WITH_AS(RootSystem::build('A', 2), doctest::Contains("admitted ranges"),
                         std::invalid_argument);
    CHECK_THROWS(RootSystem::build('D', 3));
    CHECK_THROWS(RootSystem::build('E', 5));
    CHECK_THROWS(RootSystem::build('E', 9));
    CHECK_THROWS(RootSystem::build('F', 4));
}

TEST_CASE("structural invariants for all tested types") {
    for (auto [t, n] : {std::pair{'A', 3}, {'A', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}}) {
        CAPTURE(t); CAPTURE(n);
        check_invariants(RootSystem::build(t, n));
    }
}

TEST_CASE("pairing examples") {
    auto rs = RootSystem::build('A', 3);
    // b_0 - b_1 and b_2 - b_3 have disjoint support
    LatVec u = {2, -2, 0, 0}, v = {0, 0, 2, -2};
    CHECK(kappa(u, v) == 0);
    CHECK(kappa(u, u) == 2);
    CHECK(kappa(u, lat_neg(u)) == -2);
}

TEST_CASE("simple roots match the published bases") {
    auto e8 = RootSystem::build('E', 8);
    CHECK(e8.simple_roots[0] == LatVec{-1, -1, -1, -1, -1, 1, 1, 1});
    CHECK(e8.simple_roots[1] == LatVec{0, 0, 0, 0, 2, 2, 0, 0});
    CHECK(e8.simple_roots[7] == LatVec{-2, 0, 0, 0, 0, 0, 0, -2});
    auto e6 = RootSystem::build('E', 6);
    CHECK(e6.simple_roots[1] == LatVec{-1, -1, -1, 1, 1, 1, 1, 1});
    // Cartan pairing: diagonal 2, off-diagonal in {0, -1}
    for (auto [t, n] : {std::pair{'A', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}}) {
        auto rs = RootSystem::build(t, n);
        int edges = 0;
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) {
                if (i == j) CHECK(rs.cartan(i, j) == 2);
                else {
                    CHECK((rs.cartan(i, j) == 0 || rs.cartan(i, j) == -1));
                    if (rs.cartan(i, j) == -1) ++edges;
                }
            }
        CHECK(edges == 2 * (rs.rank - 1));  // tree with rank-1 edges
    }
}

TEST_CASE("highest roots") {
    CHECK(highest_root(RootSystem::build('A', 3)) == LatVec{2, 0, 0, -2});
    CHECK(highest_root(RootSystem::build('D', 4)) == LatVec{2, 2, 0, 0});
    CHECK(highest_root(RootSystem::build('E', 6)) == LatVec{0, 0, 0, 0, 0, 0, 2, 2});
    CHECK(highest_root(RootSystem::build('E', 7)) == LatVec{0, 0, 0, 0, 0, 0, 2, 2});
    CHECK(highest_root(RootSystem::build('E', 8)) == LatVec{0, 0, 0, 0, 0, 0, 2, -2});
}

TEST_CASE("reflections") {
    auto rs = RootSystem::build('D', 4);
    for (int i = 0; i < rs.size(); ++i) {
        const auto& a = rs.roots[i];
        CHECK(reflect(a, a) == lat_neg(a));
        for (int j = 0; j < rs.size(); ++j) {
            const auto& v = rs.roots[j];
            if (rs.kappa_rr(i, j) == 0) CHECK(reflect(a, v) == v);
            CHECK(reflect(a, reflect(a, v)) == v);           // involution
            CHECK(kappa(reflect(a, v), reflect(a, a)) == kappa(v, a));  // kappa preserved
            CHECK(rs.index_of(reflect(a, v)) >= 0);          // Phi stable
        }
    }
    // Weyl orbit of the highest root is the whole root system.
    std::set<LatVec> orbit = {highest_root(rs)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<LatVec> cur(orbit.begin(), orbit.end());
        for (const auto& v : cur)
            for (const auto& s : rs.simple_roots)
                if (orbit.insert(reflect(s, v)).second) grew = true;
    }
    CHECK(int(orbit.size()) == rs.size());
}

TEST_CASE("weight sets") {
    for (auto [t, n] : {std::pair{'A', 3}, {'D', 4}, {'E', 6}}) {
        CAPTURE(t); CAPTURE(n);
        auto rs = RootSystem::build(t, n);
        auto ws = WeightSets::build(rs);
        // Lambda_{-2} = {0}, Lambda_{-1} = Phi
        REQUIRE(ws.lambda[0].size() == 1);
        CHECK(lat_is_zero(ws.lambda[0][0]));
        CHECK(int(ws.lambda[1].size()) == rs.size());
        // disjoint classes with kappa(lambda,lambda) = 4 + 2i
        for (int i = -2; i <= 2; ++i)
            for (const auto& w : ws.lambda[i + 2]) CHECK(kappa(w, w) == 4 + 2 * i);
        // n-values
        CHECK(ws.n_of(ws.lambda[0][0]) == rs.size() / 2);
        for (const auto& w : ws.lambda[3]) CHECK(ws.n_of(w) == 1);
        for (const auto& w : ws.lambda[4]) CHECK(ws.n_of(w) == 1);
        for (const auto& w : ws.lambda[2]) CHECK(ws.n_of(w) > 1);
    }
}

TEST_CASE("A3 n_0 = 6 and E8 Lambda_0 count matches the algebra dimension") {
    auto a3 = RootSystem::build('A', 3);
    auto wa = WeightSets::build(a3);
    CHECK(wa.n_of(LatVec{0, 0, 0, 0}) == 6);

    auto e8 = RootSystem::build('E', 8);
    auto we = WeightSets::build(e8);
    CHECK(we.lambda0().size() == 2160);
    int n = e8.rank;
    CHECK(n * (n + 1) / 2 + e8.size() * (n - 1) + int(we.lambda0().size()) == 3876);
}

TEST_CASE("lambda - alpha is a root iff kappa(alpha, lambda) = 2 + i") {
    for (auto [t, n] : {std::pair{'A', 3}, {'D', 4}}) {
        auto rs = RootSystem::build(t, n);
        auto ws = WeightSets::build(rs);
        for (int i = -2; i <= 2; ++i)
            for (const auto& w : ws.lambda[i + 2])
                for (int a = 0; a < rs.size(); ++a) {
                    bool diff_root = rs.index_of(lat_sub(w, rs.roots[a])) >= 0;
                    CHECK(diff_root == (kappa(rs.roots[a], w) == 2 + i));
                }
    }
}

TEST_CASE("orthogonal pair count identity") {
    // For orthogonal roots a, b the number of positive roots g with
    // kappa(a,g) = -kappa(b,g) = +-1 equals 2(n_{a+b} - 1).
    for (auto [t, n] : {std::pair{'A', 3}, {'D', 4}}) {
        auto rs = RootSystem::build(t, n);
        auto ws = WeightSets::build(rs);
        for (int a = 0; a < rs.size(); ++a)
            for (int b = 0; b < rs.size(); ++b) {
                if (rs.kappa_rr(a, b) != 0) continue;
                int count = 0;
                for (int g = 0; g < rs.num_positive; ++g) {
                    int ka = rs.kappa_rr(a, g), kb = rs.kappa_rr(b, g);
                    if ((ka == 1 && kb == -1) || (ka == -1 && kb == 1)) ++count;
                }
                CHECK(count == 2 * (ws.n_of(lat_add(rs.roots[a], rs.roots[b])) - 1));
            }
    }
}

TEST_CASE("reflections preserve the weight classes and multiplicities") {
    auto rs = RootSystem::build('D', 4);
    auto ws = WeightSets::build(rs);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        const auto& a = rs.roots[rng() % rs.size()];
        for (int i = -2; i <= 2; ++i) {
            const auto& cls = ws.lambda[i + 2];
            const auto& w = cls[rng() % cls.size()];
            LatVec img = reflect(a, w);
            CHECK(std::binary_search(cls.begin(), cls.end(), img));
            CHECK(ws.n_of(img) == ws.n_of(w));
        }
    }
}
