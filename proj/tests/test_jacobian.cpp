#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/jacobian.hpp"
#include "syzcurve/linalg.hpp"
#include "syzcurve/parse.hpp"

using namespace syzcurve;

namespace {

JacobianGraded engine(const char* text, RankMode mode = RankMode::MultiModular) {
    return JacobianGraded(make_context(parse_poly(text)), EngineOptions{mode, 0});
}

// Random product of elementary shears: unimodular by construction.
std::array<std::array<long, 3>, 3> random_unimodular(std::mt19937_64& rng) {
    std::array<std::array<long, 3>, 3> a = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int step = 0; step < 6; ++step) {
        int i = int(rng() % 3), j = int(rng() % 3);
        if (i == j) continue;
        long s = (rng() % 2) ? 1 : -1;
        for (int c = 0; c < 3; ++c) a[i][c] += s * a[j][c];
    }
    return a;
}

}  // namespace

TEST_SUITE("jacobian") {

TEST_CASE("ar_dim matches hand values and the oracle") {
    auto cusp = engine("y^2*z - x^3");
    CHECK(cusp.ar_dim(0) == 0);
    CHECK(cusp.ar_dim(1) == 1);
    CHECK(cusp.ar_dim(-2) == 0);

    auto triangle = engine("x*y*z");
    CHECK(triangle.ar_dim(1) == 2);

    for (const char* text : {"y^2*z - x^3", "x*y*z", "x^4 + y^4 + z^4"}) {
        auto jac = engine(text);
        CurveContext ctx = make_context(parse_poly(text));
        for (int q = 0; q <= ctx.d; ++q) CHECK(jac.ar_dim(q) == oracle::naive_ar_dim(ctx, q));
    }
}

TEST_CASE("ar_basis returns verified canonical syzygies") {
    auto cusp = engine("y^2*z - x^3");
    auto basis = cusp.ar_basis(1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].a.is_zero());
    CHECK(basis[0].b == parse_poly("y"));
    CHECK(basis[0].c == parse_poly("-2*z"));

    CHECK(engine("x*y*z").ar_basis(0).empty());
}

TEST_CASE("Koszul triples lie in the span of ar_basis at q = d-1") {
    for (const char* text : {"y^2*z - x^3", "x*y*z", "x^2 + y^2 + z^2"}) {
        CurveContext ctx = make_context(parse_poly(text));
        JacobianGraded jac(ctx);
        const int q = ctx.d - 1;
        auto basis = jac.ar_basis(q);
        REQUIRE(!basis.empty());
        const long nsrc = dim_S(q);
        QMatrix span(static_cast<std::size_t>(3 * nsrc), basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const HomPoly* parts[3] = {&basis[col].a, &basis[col].b, &basis[col].c};
            for (int block = 0; block < 3; ++block)
                for (const auto& [m, c] : parts[block]->terms())
                    span.at(static_cast<std::size_t>(block * nsrc + m.index()), col) = c;
        }
        const HomPoly zero(q);
        const HomPoly koszul[3][3] = {
            {zero, ctx.fz, ctx.fy.scaled(-1)},
            {ctx.fz.scaled(-1), zero, ctx.fx},
            {ctx.fy, ctx.fx.scaled(-1), zero},
        };
        for (const auto& triple : koszul) {
            std::vector<Rat> target(static_cast<std::size_t>(3 * nsrc), Rat(0));
            for (int block = 0; block < 3; ++block)
                for (const auto& [m, c] : triple[block].terms())
                    target[static_cast<std::size_t>(block * nsrc + m.index())] = c;
            CHECK(member(span, target));
        }
    }
}

TEST_CASE("mdr on reference curves") {
    CHECK(engine("y^2*z - x^3").mdr() == 1);
    CHECK(engine("x^2 + y^2 + z^2").mdr() == 1);
    CHECK(engine("x^4 + y^4 + z^4").mdr() == 3);
    CHECK(engine("x*y").mdr() == 0);
}

TEST_CASE("ar_dim is 0 below mdr and positive at mdr") {
    for (const char* text : {"y^2*z - x^3", "x*y*z", "x^4 + y^4 + z^4", "x^5 + y^4*z"}) {
        auto jac = engine(text);
        const int r = jac.mdr();
        for (int q = 0; q < r; ++q) CHECK(jac.ar_dim(q) == 0);
        CHECK(jac.ar_dim(r) > 0);
    }
}

TEST_CASE("milnor_dim basics and tables") {
    auto conic = engine("x^2 + y^2 + z^2");
    CHECK(conic.milnor_dim(0) == 1);
    CHECK(conic.milnor_dim(1) == 0);

    auto quartic = engine("x^4 + y^4 + z^4");
    GradedDims milnor = quartic.milnor_table(0, 7);
    const long expect[8] = {1, 3, 6, 7, 6, 3, 1, 0};
    for (int k = 0; k <= 7; ++k) CHECK(milnor.at(k) == expect[k]);
    CHECK_THROWS_AS(milnor.at(8), RangeError);
    CHECK_THROWS_AS(milnor.at(-1), RangeError);

    CurveContext qctx = make_context(parse_poly("x^4 + y^4 + z^4"));
    for (int k = 0; k <= 7; ++k) CHECK(milnor.at(k) == oracle::naive_milnor_dim(qctx, k));
}

TEST_CASE("milnor_dim equals dim_S below the ideal (k <= d-2)") {
    for (const char* text : {"y^2*z - x^3", "x^5 + y^4*z", "x^4 + y^4 + z^4"}) {
        auto jac = engine(text);
        const int d = jac.context().d;
        for (int k = 0; k <= d - 2; ++k) CHECK(jac.milnor_dim(k) == dim_S(k));
    }
}

TEST_CASE("tjurina on reference curves, against the oracle") {
    CHECK(engine("x^2 + y^2 + z^2").tjurina() == 0);
    CHECK(engine("y^2*z - x^3").tjurina() == 2);
    CHECK(engine("x*y*z").tjurina() == 3);
    for (const char* text : {"y^2*z - x^3", "x*y*z", "x^2 + y^2 + z^2", "x^4 + y^3*z"}) {
        CurveContext ctx = make_context(parse_poly(text));
        JacobianGraded jac(ctx);
        CHECK(jac.tjurina() == oracle::naive_tjurina(ctx));
    }
}

TEST_CASE("tjurina flags non-reduced input") {
    CHECK_THROWS_AS(engine("x^2*y").tjurina(), NonReducedInput);
    CHECK_THROWS_AS(engine("(x + y)^2").tjurina(), NonReducedInput);
}

TEST_CASE("tjurina is invariant under unimodular coordinate changes") {
    std::mt19937_64 rng(424242);
    for (const char* text : {"y^2*z - x^3", "x*y*z", "x^4 + y^3*z"}) {
        HomPoly f = parse_poly(text);
        const long tau = JacobianGraded(make_context(f)).tjurina();
        for (int rep = 0; rep < 3; ++rep) {
            HomPoly g = apply_linear(f, random_unimodular(rng));
            CHECK(JacobianGraded(make_context(g)).tjurina() == tau);
        }
    }
}

TEST_CASE("unique-low-relation dimension identity at degree d-r-2") {
    // With r = mdr(f) and 2r <= d, every syzygy below degree d-r-1 is a
    // multiple of the minimal one, so dim AR(f)_{d-r-2} = C(d-2r, 2).
    for (const char* text : {"y^2*z - x^3", "x^5 + y^4*z", "x^6 + y^5*z", "x^7 + y^6*z"}) {
        auto jac = engine(text);
        const int d = jac.context().d;
        const int r = jac.mdr();
        REQUIRE(2 * r <= d);
        const long expect = (d - 2 * r) * (d - 2 * r - 1) / 2;
        CHECK(jac.ar_dim(d - r - 2) == expect);
    }
}

TEST_CASE("certified mode matches the multi-modular pipeline") {
    for (const char* text : {"y^2*z - x^3", "x*y*z", "x^4 + y^4 + z^4"}) {
        auto fast = engine(text, RankMode::MultiModular);
        auto slow = engine(text, RankMode::Certified);
        CHECK(fast.mdr() == slow.mdr());
        CHECK(fast.tjurina() == slow.tjurina());
        for (int q = 0; q <= 4; ++q) CHECK(fast.ar_dim(q) == slow.ar_dim(q));
    }
}

}  // TEST_SUITE
