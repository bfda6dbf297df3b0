#include "zetaforge/harmonic.hpp"
#include "zetaforge/poly.hpp"
#include "zetaforge/rational.hpp"
#include "zetaforge/upoly.hpp"

#include <doctest.h>

#include <random>

using namespace zetaforge;

TEST_CASE("rational canonical form and text round trip")
{
    const BigRational q = make_rational(-1870, 16);
    CHECK(q == make_rational(-935, 8));
    CHECK(to_string(q) == "-935/8");
    CHECK(to_string(BigRational(108)) == "108");
    CHECK(to_string(BigRational(0)) == "0");
    CHECK(parse_rational("-935/8") == q);
    CHECK(parse_rational("+6") == 6);
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    for (const char* bad : {"", "1/", "/3", "1/0", "1.5", "x", "1/2/3", "--1"})
        CHECK_THROWS(parse_rational(bad));
}

TEST_CASE("rational addition commutes and stays reduced")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 400);
    for (int i = 0; i < 500; ++i) {
        const BigRational r = make_rational(num(rng), den(rng));
        const BigRational s = make_rational(num(rng), den(rng));
        const BigRational a = r + s, b = s + r;
        CHECK(a == b);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        CHECK(g == 1);
        CHECK(a.get_den() > 0);
    }
}

TEST_CASE("integer helpers")
{
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(6) == 720);
    CHECK(ipow(BigInt(3), 4) == 81);
    CHECK(ipow(make_rational(2, 3), 3) == make_rational(8, 27));
}

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic(3, 1) == make_rational(11, 6));
    CHECK(harmonic(2, 4) == make_rational(17, 16));
    CHECK(harmonic(0, 3) == 0);
    for (unsigned a = 1; a <= 6; ++a)
        for (unsigned j = 1; j <= 200; ++j)
            REQUIRE(harmonic(j, a) - harmonic(j - 1, a) == make_rational(1, ipow(BigInt(j), a)));
}

TEST_CASE("lcm_upto")
{
    CHECK(lcm_upto(10) == 2520);
    CHECK(lcm_upto(1) == 1);
    CHECK(lcm_upto(6) == 60);
    CHECK_THROWS(lcm_upto(0));

    BigInt prev = lcm_upto(1);
    for (unsigned n = 1; n < 2000; ++n) {
        const BigInt next = lcm_upto(n + 1);
        REQUIRE(mpz_divisible_p(next.get_mpz_t(), prev.get_mpz_t()));
        const BigInt ratio = next / prev;
        if (ratio != 1) {
            // a prime power: divide out its smallest prime factor completely
            BigInt p = 2, r = ratio;
            while (!mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()))
                ++p;
            while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()))
                r /= p;
            REQUIRE(r == 1);
            REQUIRE(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
        }
        prev = next;
    }
}

namespace {

const std::vector<std::string> xy = {"x", "y"};

PolyQ random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<unsigned> e(0, 3), count(0, 4);
    std::uniform_int_distribution<long> c(-5, 5);
    PolyQ p(xy);
    for (unsigned i = count(rng); i > 0; --i)
        p.add_term({e(rng), e(rng)}, make_rational(c(rng), 1 + e(rng)));
    return p;
}

}  // namespace

TEST_CASE("poly_pow_expand examples")
{
    const std::vector<std::string> zv = {"z"};
    const PolyQ z = PolyQ::variable(zv, "z");
    const PolyQ one = PolyQ::constant(zv, 1);
    const PolyQ zz = z - z * z;
    const PolyQ expected = z * z - z * z * z * BigRational(2) + z * z * z * z;
    CHECK(poly_pow_expand(zz, 2) == expected);
    CHECK(poly_pow_expand(zz, 0) == one);

    const PolyQ x = PolyQ::variable(xy, "x"), y = PolyQ::variable(xy, "y");
    const PolyQ c1 = PolyQ::constant(xy, 1);
    const PolyQ b = x * (c1 - x) * y * (c1 - y);
    PolyQ want(xy);
    want.add_term({1, 1}, 1);
    want.add_term({2, 1}, -1);
    want.add_term({1, 2}, -1);
    want.add_term({2, 2}, 1);
    CHECK(poly_pow_expand(b, 1) == want);
    CHECK(b.to_string().size() > 0);
}

TEST_CASE("PolyQ ring laws on random polynomials")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const PolyQ a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("PolyQ compose, degrees and division by a power")
{
    const PolyQ x = PolyQ::variable(xy, "x"), y = PolyQ::variable(xy, "y");
    const std::vector<std::string> uv = {"u"};
    const PolyQ u = PolyQ::variable(uv, "u");
    // u -> 1 - xy
    const PolyQ sub = PolyQ::constant(xy, 1) - x * y;
    const PolyQ p = u * u + u * BigRational(3);
    const PolyQ q = p.compose({sub});
    CHECK(q == sub * sub + sub * BigRational(3));

    const PolyQ m = x * x * y + x * x * x;
    CHECK(m.degree(0) == 3);
    CHECK(m.min_degree(0) == 2);
    CHECK(m.divide_by_power(0, 2) == y + x);
    CHECK_THROWS(m.divide_by_power(1, 1));
    CHECK_THROWS(x + u);
}

TEST_CASE("UPoly arithmetic")
{
    const UPoly m = UPoly::linear(0);
    const UPoly p = (m + UPoly::constant(1)) * (m + UPoly::constant(2));
    CHECK(p == UPoly({2, 3, 1}));
    CHECK(p.eval(3) == 20);
    CHECK(p.taylor_shift(-1) == UPoly({0, 1, 1}));
    const auto [quo, rem] = p.divmod(UPoly::linear(1));
    CHECK(quo == UPoly::linear(2));
    CHECK(rem.is_zero());
    CHECK(UPoly::linear(1).pow(3) == UPoly({1, 3, 3, 1}));
    CHECK(UPoly({0, 0}).is_zero());
    CHECK(UPoly().degree() == -1);
}
