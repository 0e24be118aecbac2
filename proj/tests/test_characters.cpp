#include <doctest.h>

#include "chevalgebra/characters.hpp"

using namespace chevalgebra;

TEST_CASE("character of the symmetric square") {
    auto rs = RootSystem::build('A', 3);
    auto ws = WeightSets::build(rs);
    auto ch = char_S2(rs, ws);
    // zero-weight multiplicity n(n+1)/2 + n_0 = 6 + 6
    CHECK(ch.terms.at(LatVec(4, 0)) == 12);
    // multiplicity 1 at twice the highest root
    LatVec omega = highest_root(rs);
    CHECK(ch.terms.at(lat_add(omega, omega)) == 1);
    // total dimension = dim S^2(L) with dim L = 15
    CHECK(ch.total_dimension() == 15 * 16 / 2);
}

TEST_CASE("closed characters are consistent: S2 - V = A") {
    for (auto [t, n] : {std::pair{'A', 3}, {'A', 4}, {'D', 4}, {'E', 6}}) {
        CAPTURE(t); CAPTURE(n);
        auto rs = RootSystem::build(t, n);
        auto ws = WeightSets::build(rs);
        CHECK(char_S2(rs, ws) - char_V_closed(rs, ws) == char_A(rs, ws));
        // each root carries multiplicity n_lambda + 1 in V
        auto chv = char_V_closed(rs, ws);
        for (int a = 0; a < rs.size(); ++a)
            CHECK(chv.terms.at(rs.roots[a]) == ws.n_of(rs.roots[a]) + 1);
    }
}

TEST_CASE("Freudenthal recursion reproduces the closed character of V") {
    for (auto [t, n] : {std::pair{'A', 3}, {'D', 4}}) {
        CAPTURE(t); CAPTURE(n);
        auto rs = RootSystem::build(t, n);
        auto ws = WeightSets::build(rs);
        auto fr = freudenthal_char(rs);
        auto closed = char_V_closed(rs, ws);
        CHECK(fr == closed);
        // spot values: m_{2 omega} = 1, m_0 = n_0
        LatVec omega = highest_root(rs);
        CHECK(fr.terms.at(lat_add(omega, omega)) == 1);
        CHECK(fr.terms.at(LatVec(rs.ambient, 0)) == rs.size() / 2);
    }
}

TEST_CASE("character bookkeeping matches the algebra dimension") {
    for (auto [t, n] : {std::pair{'A', 3}, {'D', 4}, {'E', 6}}) {
        auto rs = RootSystem::build(t, n);
        auto ws = WeightSets::build(rs);
        Int dim = char_A(rs, ws).total_dimension();
        int expect = rs.rank * (rs.rank + 1) / 2 + rs.size() * (rs.rank - 1) +
                     int(ws.lambda0().size());
        CHECK(dim == expect);
    }
}

TEST_CASE("characters are W-invariant") {
    auto rs = RootSystem::build('D', 4);
    auto ws = WeightSets::build(rs);
    auto ch = char_V_closed(rs, ws);
    for (int s : rs.simple_indices)
        for (const auto& [w, m] : ch.terms)
            CHECK(ch.terms.at(reflect(rs.roots[s], w)) == m);
}

TEST_CASE("freudenthal rejects non-dominant highest weights") {
    auto rs = RootSystem::build('A', 3);
    CHECK_THROWS_AS(FreudenthalChar::compute(rs, rs.roots[rs.neg[rs.highest]]),
                    std::invalid_argument);
}
