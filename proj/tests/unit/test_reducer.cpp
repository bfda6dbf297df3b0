#include "zetaforge/numeric.hpp"
#include "zetaforge/reducer.hpp"
#include "zetaforge/series.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <doctest.h>

using namespace zetaforge;

namespace {

ZetaForm lin(const BigRational& q0, std::initializer_list<std::pair<unsigned, BigRational>> zs)
{
    ZetaForm f = ZetaForm::rational(q0);
    for (const auto& [a, q] : zs)
        f += ZetaForm::zeta(a, q);
    return f;
}

BigRational Q(long n, long d = 1) { return make_rational(n, d); }

HPReal eval_upoly(const UPoly& p, const HPReal& u)
{
    HPReal v = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        v = v * u + to_hp(p.coeffs()[i]);
    return v;
}

}  // namespace

TEST_CASE("inner profile closed forms")
{
    const InnerProfile j0 = inner_profile(0);
    CHECK(j0.P.is_zero());
    CHECK(j0.Q == UPoly::constant(1));

    const InnerProfile j1 = inner_profile(1);
    CHECK(j1.P == UPoly({0, -2}));
    CHECK(j1.Q == UPoly({2, -1}));

    const InnerProfile j2 = inner_profile(2);
    CHECK(j2.P == UPoly({0, -6, 3}));
    CHECK(j2.Q == UPoly({6, -6, 1}));
}

TEST_CASE("inner profile against numeric integration")
{
    using Fixed = boost::multiprecision::mpfr_float_50;
    PrecisionScope scope(50);
    boost::math::quadrature::tanh_sinh<Fixed> ts(15, Fixed(1e-60));
    const Fixed tol = pow(Fixed(10), -35);
    for (unsigned n = 0; n <= 6; ++n) {
        const InnerProfile prof = inner_profile(n);
        for (int i = 1; i <= 20; ++i) {
            const Fixed u = Fixed(i) / 21;
            auto f = [&](const Fixed& z) -> Fixed { return pow(z * (1 - z), n) / pow(1 - u * z, n + 1); };
            const Fixed numeric = ts.integrate(f, Fixed(0), Fixed(1), tol);
            const HPReal uh = HPReal(i) / 21;
            const HPReal closed = (eval_upoly(prof.P, uh) - eval_upoly(prof.Q, uh) * log(1 - uh)) / pow(uh, 2 * n + 1);
            REQUIRE(abs(numeric - Fixed(closed)) < Fixed(1e-20));
        }
    }
}

TEST_CASE("inner profile at u -> 0")
{
    // P + Q L with L = sum u^k / k must vanish to order 2n and leave (n!)^2/(2n+1)! at u^(2n+1)
    for (unsigned n = 0; n <= 6; ++n) {
        const InnerProfile prof = inner_profile(n);
        const unsigned order = 3 * n + 2;
        std::vector<BigRational> L(order + 1);
        for (unsigned k = 1; k <= order; ++k)
            L[k] = make_rational(1, k);
        const UPoly series = prof.P + prof.Q * UPoly(L);
        for (unsigned k = 0; k < 2 * n + 1; ++k)
            REQUIRE(series[k] == 0);
        const BigInt nf = factorial(n);
        REQUIRE(series[2 * n + 1] == make_rational(nf * nf, factorial(2 * n + 1)));
    }
}

TEST_CASE("assemble_pieces shapes")
{
    const auto p0 = assemble_pieces({Family::zeta4, 0});
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].t == 1);
    CHECK(p0[0].k == 2);
    CHECK(p0[0].numerator == PolyQ::constant(xy_variables(), 1));

    const auto p1 = assemble_pieces({Family::zeta4, 1});
    REQUIRE(p1.size() == 3);
    CHECK(p1[0].k == 0);
    CHECK(p1[0].t == 1);
    CHECK(p1[1].k == 1);
    CHECK(p1[2].k == 2);
    CHECK(p1[2].t == 3);

    const auto p2 = assemble_pieces({Family::zeta4, 2});
    REQUIRE(p2.size() == 3);
    const PolyQ x = PolyQ::variable(xy_variables(), "x"), y = PolyQ::variable(xy_variables(), "y");
    const PolyQ one = PolyQ::constant(xy_variables(), 1);
    const PolyQ b = x * (one - x) * y * (one - y);
    const PolyQ s = one - x * x * y * y;
    // the k = 0 piece, brought to t = 5: b^2 * 9 (1 - x^2 y^2)^2 / (1 - xy)^5
    PolyQ num = p2[0].numerator;
    for (unsigned t = p2[0].t; t < 5; ++t)
        num = num * (one - x * y);
    CHECK(num == b * b * s * s * BigRational(9));

    const auto z2 = assemble_pieces({Family::zeta2, 0});
    REQUIRE(z2.size() == 1);
    CHECK(z2[0].t == 1);
    CHECK(z2[0].k == 0);
    CHECK(z2[0].numerator == one);
}

TEST_CASE("golden zeta4 forms")
{
    CHECK(compute_form({Family::zeta4, 0}).form == ZetaForm::zeta(4, 6));
    CHECK(compute_form({Family::zeta4, 1}).form == lin(Q(-935, 8), {{4, 108}}));
    CHECK(compute_form({Family::zeta4, 2}).form == lin(Q(-39185573, 3456), {{4, 10476}}));
}

TEST_CASE("n = 1 and n = 2 pieces")
{
    const auto p1 = assemble_pieces({Family::zeta4, 1});
    CHECK(integrate_piece(p1[0]) == lin(-13, {{2, 8}}));
    // quadrature-confirmed signs of the zeta(3) terms
    CHECK(integrate_piece(p1[1]) == lin(-51, {{2, -16}, {3, 64}}));
    CHECK(integrate_piece(p1[2]) == lin(Q(-423, 8), {{2, 8}, {3, -64}, {4, 108}}));

    const auto p2 = assemble_pieces({Family::zeta4, 2});
    CHECK(integrate_piece(p2[0]) == lin(Q(21 * -1737, 16), {{2, Q(21 * 1056, 16)}}));
    CHECK(integrate_piece(p2[1]) + integrate_piece(p2[2]) == lin(Q(-31306541, 3456), {{2, -1386}, {4, 10476}}));
}

TEST_CASE("zeta2 and zeta3 families")
{
    CHECK(compute_form({Family::zeta2, 0}).form == ZetaForm::zeta(2));
    CHECK(compute_form({Family::zeta3, 0}).form == ZetaForm::zeta(3, 2));
    CHECK(compute_form({Family::zeta2, 1}).form == lin(5, {{2, -3}}));
    CHECK(compute_form({Family::zeta3, 1}).form == lin(-12, {{3, 10}}));
    for (unsigned n = 0; n <= 5; ++n) {
        const ComputedForm z2 = compute_form({Family::zeta2, n});
        const ComputedForm z3 = compute_form({Family::zeta3, n});
        CHECK(z2.report.target_only);
        CHECK(z3.report.target_only);
        CHECK(z3.form.zeta_coeff(2) == 0);
    }
}

TEST_CASE("structural report")
{
    const StructuralReport r = structural_report(Family::zeta4, lin(1, {{2, 1}, {4, 3}}));
    CHECK(r.nonzero_zeta == std::vector<unsigned>{2, 4});
    CHECK_FALSE(r.target_only);
    CHECK(parse_family("zeta3") == Family::zeta3);
    CHECK_THROWS_AS(parse_family("zeta5"), std::invalid_argument);
    CHECK(family_weight(Family::zeta2) == 2);
}
