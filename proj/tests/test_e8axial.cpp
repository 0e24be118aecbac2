#include <doctest.h>

#include "chevalgebra/e8axial.hpp"

using namespace chevalgebra;

namespace {
const E8Axial& e8() {
    static E8Axial ax = E8Axial::build(Algebra::make('E', 8));
    return ax;
}
}  // namespace

TEST_CASE("E8 context: measured constants") {
    const auto& ax = e8();
    CHECK(ax.one_norm == Rat(248));
    CHECK(ax.a_norm == rat(1, 2));
    CHECK(ax.k0 == rat(1, 496));
    CHECK(ax.q == rat(9, 98));
    CHECK(is_zero(ax.alg().form(ax.a, ax.one)));
    // zero-weight constants feeding the projection (independent hand solve)
    auto md = ax.alg().zs.mu_system_solve();
    REQUIRE(md.orbits == 3);
    for (int i = 0; i < 3; ++i) {
        if (md.b[i] == Rat(4)) CHECK(md.mu[i] == rat(8, 31));
        else if (md.b[i] == Rat(1)) CHECK(md.mu[i] == rat(19, 434));
        else CHECK(md.mu[i] == rat(-6, 217));
    }
}

TEST_CASE("E8 rejects non-E8 contexts") {
    CHECK_THROWS_AS(E8Axial::build(Algebra::make('A', 3)), std::invalid_argument);
}

TEST_CASE("parameter map: s = 2/9 plus branch gives c1 = 1, p = -1/248") {
    const auto& ax = e8();
    auto ctx = ax.context_from_s(rat(2, 9), true);
    CHECK(ctx.c1 == Rat(1));
    CHECK(ctx.c2 == rat(-98, 9));
    CHECK(ctx.p == rat(-1, 248));
    auto ctx0 = ax.context_from_s(rat(2, 9), false);
    CHECK(ctx0.c1 == Rat(0));
    CHECK(ctx0.c2 == rat(98, 9));
    CHECK(ctx0.p == rat(-1, 248));
    CHECK(ctx.c1 + ctx0.c1 == Rat(1));
    CHECK(ctx.form_degenerate);  // p = -1/248 = -1/dim(L)
    CHECK(!ax.context_from_s(rat(1, 9), true).form_degenerate);
    CHECK_THROWS_AS(ax.context_from_s(Rat(0), true), std::invalid_argument);
}

TEST_CASE("p = 0 recovers the undeformed product") {
    const auto& ax = e8();
    E8Axial::ParamContext ctx;
    ctx.p = 0;
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
        AlgElem x = ax.alg().random_elem(rng, 3), y = ax.alg().random_elem(rng, 3);
        CHECK(ax.mul_p(ctx, x, y) == ax.alg().mul(x, y));
        CHECK(ax.form_p(ctx, x, y) == ax.alg().form(x, y));
    }
}

TEST_CASE("the deformed product is Frobenius and unital for sampled p") {
    const auto& ax = e8();
    // a parameter where the deformed form stays non-degenerate
    auto ctx = ax.context_from_s(rat(1, 9), true);
    REQUIRE(!ctx.form_degenerate);
    std::mt19937_64 rng(123);
    for (int t = 0; t < 8; ++t) {
        AlgElem x = ax.alg().random_elem(rng, 3), y = ax.alg().random_elem(rng, 3),
                z = ax.alg().random_elem(rng, 3);
        CHECK(ax.mul_p(ctx, ax.one, x) == x);
        CHECK(ax.mul_p(ctx, x, y) == ax.mul_p(ctx, y, x));
        CHECK(ax.form_p(ctx, ax.mul_p(ctx, x, y), z) == ax.form_p(ctx, x, ax.mul_p(ctx, y, z)));
    }
}

TEST_CASE("spectrum at s = 2/9: idempotents, scalars, evaluation map") {
    const auto& ax = e8();
    auto ctx = ax.context_from_s(rat(2, 9), true);
    auto rep = ax.spectrum_check(ctx);
    CHECK(rep.idempotent);
    CHECK(rep.complement_idem);
    CHECK(rep.orthogonal);
    CHECK(rep.branch_pairing);
    REQUIRE(rep.scalars.size() == 4);
    for (const auto& s : rep.scalars) {
        CAPTURE(s.part);
        CHECK(s.ok);
    }
    // evaluation values at c1 = 1: 7/6, 1/2, 1/2, 1
    CHECK(rep.scalars[0].got_eval == rat(7, 6));
    CHECK(rep.scalars[1].got_eval == rat(1, 2));
    CHECK(rep.scalars[2].got_eval == rat(1, 2));
    CHECK(rep.scalars[3].got_eval == Rat(1));
    // a . a 1-coefficient is k0 + p/2 (vanishes at p = -1/248)
    CHECK(is_zero(ax.k0 + ctx.p * ax.a_norm));
}

TEST_CASE("degenerate parameter yields the nilpotent element") {
    const auto& ax = e8();
    Rat p = rat(-614, 74431);
    auto ctx = ax.context_from_p(p);
    REQUIRE(ctx.has_value());
    CHECK(ctx->degenerate);
    CHECK_THROWS(ax.axis(*ctx));
    AlgElem x = ax.nilpotent_element();
    CHECK(x == ax.one - ax.a * rat(196, 9));
    CHECK(ax.mul_p(*ctx, x, x).is_zero());
}

TEST_CASE("c1 = 0 probe: derived parameter wins over the printed closed form") {
    const auto& ax = e8();
    auto probe = ax.c1_zero_probe();
    CHECK(probe.p_derived == rat(-1, 248));
    CHECK(probe.p_closed_form == rat(-1, 62));
    CHECK(probe.derived_has_idempotent);
    CHECK(!probe.closed_form_has_idempotent);
    // context_from_p at the derived value recovers rational idempotents
    auto ctx = ax.context_from_p(rat(-1, 248));
    REQUIRE(ctx.has_value());
    CHECK(!ctx->degenerate);
    CHECK(ctx->c1 == Rat(1));
}
