#include <doctest.h>

#include <random>

#include "chevalgebra/linalg.hpp"

using namespace chevalgebra;

TEST_CASE("rational helpers") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(1, -2).get_den() == 2);  // canonical denominators are positive
    CHECK(rat_from_string("-7/3").value() == rat(-7, 3));
    CHECK(rat_from_string("5").value() == rat(5));
    CHECK(!rat_from_string("1/0").has_value());
    CHECK(!rat_from_string("x").has_value());
    CHECK(rat_to_string(rat(-7, 3)) == "-7/3");
    CHECK(rat_sqrt(rat(4, 9)).value() == rat(2, 3));
    CHECK(!rat_sqrt(rat(2)).has_value());
    CHECK(!rat_sqrt(rat(-1)).has_value());
}

TEST_CASE("solve: identity system returns rhs") {
    RatMatrix a = RatMatrix::identity(3);
    RatVec b = {rat(1), rat(-2, 3), rat(7)};
    auto res = solve(a, b);
    REQUIRE(res.consistent);
    CHECK(res.particular == b);
    CHECK(res.kernel.empty());
}

TEST_CASE("solve: singular consistent 2x2 has 1-dim kernel") {
    RatMatrix a(2, 2);
    a(0, 0) = 1; a(0, 1) = 2;
    a(1, 0) = 2; a(1, 1) = 4;
    auto res = solve(a, {rat(3), rat(6)});
    REQUIRE(res.consistent);
    REQUIRE(res.kernel.size() == 1);
    // particular solves, kernel annihilates
    CHECK(a.apply(res.particular) == RatVec{rat(3), rat(6)});
    CHECK(a.apply(res.kernel[0]) == RatVec{rat(0), rat(0)});
}

TEST_CASE("solve: inconsistency certificate") {
    RatMatrix a(2, 2);
    a(0, 0) = 1; a(0, 1) = 2;
    a(1, 0) = 2; a(1, 1) = 4;
    auto res = solve(a, {rat(3), rat(7)});
    CHECK(!res.consistent);
    CHECK(res.inconsistent_row >= 0);
}

TEST_CASE("solve round-trips on random rational systems") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<int> d(-6, 6), dd(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 5);
        RatMatrix a(n, n);
        RatVec x(n);
        for (int i = 0; i < n; ++i) {
            x[i] = rat(d(rng), dd(rng));
            for (int j = 0; j < n; ++j) a(i, j) = rat(d(rng), dd(rng));
        }
        RatVec b = a.apply(x);
        auto res = solve(a, b);
        REQUIRE(res.consistent);
        CHECK(a.apply(res.particular) == b);
        if (res.kernel.empty()) CHECK(res.particular == x);
    }
}

TEST_CASE("inverse") {
    RatMatrix a(2, 2);
    a(0, 0) = 1; a(0, 1) = 2;
    a(1, 0) = 3; a(1, 1) = 4;
    CHECK(inverse(a) * a == RatMatrix::identity(2));
    RatMatrix s(2, 2);
    s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
    CHECK_THROWS(inverse(s));
}

static BilinearForm diag_form(std::vector<Rat> d) {
    RatMatrix g(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) g(int(i), int(i)) = d[i];
    return BilinearForm(g);
}

TEST_CASE("project_orthogonal basics") {
    auto form = diag_form({rat(1), rat(2), rat(3)});
    RatMatrix sub(1, 3);
    sub(0, 0) = 1; sub(0, 1) = 1; sub(0, 2) = 0;

    SUBCASE("vector inside the subspace maps to zero") {
        RatVec v = {rat(2), rat(2), rat(0)};
        auto out = project_orthogonal(form, sub, v);
        for (auto& c : out) CHECK(is_zero(c));
    }
    SUBCASE("vector orthogonal to the subspace is fixed") {
        RatVec v = {rat(2), rat(-1), rat(5)};  // <v, (1,1,0)> = 2*1 - 1*2 = 0
        CHECK(project_orthogonal(form, sub, v) == v);
    }
    SUBCASE("result pairs to zero with the subspace; idempotent; self-adjoint") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> d(-5, 5);
        RatVec srow = {rat(1), rat(1), rat(0)};
        for (int t = 0; t < 20; ++t) {
            RatVec v = {rat(d(rng)), rat(d(rng)), rat(d(rng))};
            RatVec w = {rat(d(rng)), rat(d(rng)), rat(d(rng))};
            auto pv = project_orthogonal(form, sub, v);
            CHECK(is_zero(form.eval(pv, srow)));
            CHECK(project_orthogonal(form, sub, pv) == pv);
            auto pw = project_orthogonal(form, sub, w);
            CHECK(form.eval(pv, w) == form.eval(v, pw));
        }
    }
}

TEST_CASE("project_orthogonal rejects degenerate restrictions naming the radical") {
    auto form = diag_form({rat(1), rat(-1), rat(1)});
    RatMatrix sub(2, 3);
    sub(0, 0) = 1; sub(0, 1) = 1;  // isotropic vector
    sub(1, 2) = 1;
    try {
        project_orthogonal(form, sub, {rat(1), rat(0), rat(0)});
        FAIL("expected DegenerateRestriction");
    } catch (const DegenerateRestriction& e) {
        CHECK(e.radical_dim == 1);
    }
}

TEST_CASE("echelon membership and rank") {
    Echelon e(3);
    CHECK(e.insert({rat(1), rat(2), rat(0)}));
    CHECK(e.insert({rat(0), rat(1), rat(1)}));
    CHECK(!e.insert({rat(1), rat(3), rat(1)}));
    CHECK(e.rank() == 2);
    CHECK(e.contains({rat(2), rat(5), rat(1)}));
    CHECK(!e.contains({rat(0), rat(0), rat(1)}));
}
