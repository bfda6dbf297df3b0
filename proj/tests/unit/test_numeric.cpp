#include "zetaforge/numeric.hpp"
#include "zetaforge/reducer.hpp"
#include "zetaforge/series.hpp"

#include <doctest.h>

#include <random>

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

bool close(const HPReal& a, double b, double tol) { return abs(a - HPReal(b)) < HPReal(tol); }

}  // namespace

TEST_CASE("zeta values")
{
    CHECK(close(zeta_value(2, 12), 1.64493406685, 1e-11));
    CHECK(close(zeta_value(4, 12), 1.08232323371, 1e-11));
    CHECK(close(zeta_value(3, 12), 1.20205690316, 1e-11));
    CHECK_THROWS(zeta_value(1, 20));

    for (unsigned digits : {30u, 50u, 90u}) {
        PrecisionScope scope(digits + guard_digits);
        const HPReal pi = pi_value(digits);
        const HPReal tol = pow(HPReal(10), -static_cast<int>(digits));
        CHECK(abs(zeta_value(2, digits) - pi * pi / 6) < tol);
        CHECK(abs(zeta_value(4, digits) - pow(pi, 4) / 90) < tol);
    }
    PrecisionScope scope(60);
    CHECK(abs(pi_value(50) - boost::math::constants::pi<HPReal>()) < HPReal(1e-50));
}

TEST_CASE("eval_form")
{
    CHECK(close(eval_form(lin(Q(-935, 8), {{4, 108}}), 50), 0.0159092408029246837, 1e-18));
    CHECK(close(eval_form(ZetaForm::zeta(4, 6), 50), 6.49393940226682914909, 1e-15));
    CHECK(eval_form(ZetaForm(), 50) == 0);
    ZetaForm divergent;
    divergent.add_divergent_harmonic(1);
    CHECK_THROWS_AS(eval_form(divergent, 30), DivergentForm);
}

TEST_CASE("sum_terms_numeric examples")
{
    const std::vector<PFTerm> six{{4, 0, 6}};
    const SeriesEnclosure e = sum_terms_numeric(six, 100000, 40);
    CHECK(e.contains(eval_form(ZetaForm::zeta(4, 6), 40)));

    const std::vector<PFTerm> tele{{1, 1, 1}, {1, 2, -1}};
    const SeriesEnclosure t = sum_terms_numeric(tele, 1000, 40);
    PrecisionScope scope(50);
    CHECK(t.contains(HPReal(1) / 2));
    CHECK(t.width() < HPReal(1e-30));

    const std::vector<PFTerm> list{
        {3, 1, -3}, {2, 1, 5},   {1, 1, -2}, {4, 2, 18}, {3, 2, -31}, {2, 2, 15}, {1, 2, -2}, {4, 3, 54},
        {3, 3, -33}, {2, 3, -1}, {1, 3, 2},  {4, 4, 36}, {3, 4, 3},   {2, 4, -11}, {1, 4, 2},
    };
    const SeriesEnclosure c = sum_terms_numeric(list, 100000, 40);
    CHECK(c.contains(eval_form(lin(Q(-423, 8), {{2, 8}, {3, -64}, {4, 108}}), 40)));
    CHECK_FALSE(c.contains(eval_form(lin(Q(-423, 8), {{2, 8}, {3, 64}, {4, 108}}), 40)));
    CHECK_FALSE(c.contains(eval_form(lin(Q(-423, 8), {{2, 8}, {3, -64}, {4, 72}}), 40)));

    const std::vector<PFTerm> harm{{1, 0, 1}};
    CHECK_THROWS_AS(sum_terms_numeric(harm, 1000, 30), DivergentInput);
}

TEST_CASE("sum_terms_numeric encloses reduced forms of random convergent multisets")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<unsigned> count(1, 8), pw(1, 5), sh(0, 8);
    std::uniform_int_distribution<long> cc(-20, 20);
    for (int i = 0; i < 100; ++i) {
        std::vector<PFTerm> terms;
        for (unsigned k = count(rng); k > 0; --k) {
            long c = cc(rng);
            terms.push_back({pw(rng), sh(rng), make_rational(c == 0 ? 1 : c, 1 + sh(rng))});
        }
        // cancel the harmonic-level coefficients so the series converges
        BigRational residue = 0;
        for (const auto& t : terms)
            if (t.a == 1)
                residue += t.c;
        if (residue != 0)
            terms.push_back({1, sh(rng), -residue});
        const ZetaForm f = reduce_terms(terms);
        REQUIRE(f.is_finite());
        const SeriesEnclosure e = sum_terms_numeric(terms, 20000, 30);
        REQUIRE(e.contains(eval_form(f, 30)));
    }
}

TEST_CASE("direct monomial summation")
{
    // sum 3m/(m+1)^3 = 3 zeta(2) - 3 zeta(3)
    const DirectSum d = sum_monomial_direct(1, 1, 3, 2, 1000000);
    const ZetaForm f = monomial_form(1, 1, 3, 2);
    CHECK(f == lin(0, {{2, 3}, {3, -3}}));
    CHECK(std::abs(static_cast<double>(eval_form(f, 30)) - static_cast<double>(d.value)) < 1e-12);
    CHECK(d.error_bound < 1e-12);
    CHECK_THROWS_AS(sum_monomial_direct(1, 0, 2, 0, 1000), DivergentInput);
}

TEST_CASE("quadrature examples")
{
    const PolyQ one = PolyQ::constant(xy_variables(), 1);
    // absolute error target 10^-(digits/2)
    const QuadratureResult q0 = quad_piece({one, 1, 2}, 20);
    CHECK(close(q0.value, 6.49393940226682914909, 1e-10));
    const QuadratureResult q1 = quad_piece({one, 1, 0}, 20);
    CHECK(close(q1.value, 1.64493406684822643647, 1e-10));

    const auto p1 = assemble_pieces({Family::zeta4, 1});
    CHECK(abs(quad_piece(p1[0], 20).value - eval_form(lin(-13, {{2, 8}}), 30)) < HPReal(1e-10));
    CHECK(close(quad_piece(p1[0], 20).value, 0.1594725, 1e-6));
}

TEST_CASE("oracle triangle: quadrature against exact pieces")
{
    for (Family f : {Family::zeta2, Family::zeta3, Family::zeta4})
        for (unsigned n = 0; n <= 4; ++n)
            for (const auto& piece : assemble_pieces({f, n})) {
                const HPReal exact = eval_form(integrate_piece(piece), 30);
                const QuadratureResult q = quad_piece(piece, 20);
                REQUIRE(abs(q.value - exact) < HPReal(1e-8));
            }
}

TEST_CASE("Monte Carlo is reproducible and thread-count independent")
{
    const FamilySpec spec{Family::zeta4, 1};
    const McEstimate a = mc_integral(spec, 300000, 42);
    const McEstimate b = mc_integral(spec, 300000, 42);
    const McEstimate c = mc_integral(spec, 300000, 42, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean == c.mean);
    CHECK(a.std_error == c.std_error);
    CHECK(mc_integral(spec, 300000, 43).mean != a.mean);
}

TEST_CASE("Monte Carlo covers the exact values")
{
    for (Family f : {Family::zeta2, Family::zeta3, Family::zeta4})
        for (unsigned n = 0; n <= 3; ++n) {
            const double exact = static_cast<double>(eval_form(compute_form({f, n}).form, 30));
            const McEstimate e = mc_integral({f, n}, 1000000, 2024 + n);
            INFO(family_name(f), " n=", n, " mean=", e.mean, " se=", e.std_error, " exact=", exact);
            REQUIRE(e.covers(exact));
        }
}

TEST_CASE("unreduced integrand vanishes on the boundary")
{
    CHECK(unreduced_integrand({Family::zeta4, 1}, {0.0, 0.5, 0.5, 0.5}) == 0.0);
    CHECK(unreduced_integrand({Family::zeta4, 0}, {0.5, 0.5, 0.5, 0.5}) > 0.0);
}
