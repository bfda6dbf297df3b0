#include "zetaforge/series.hpp"

#include <algorithm>
#include <utility>

namespace zetaforge {

const std::vector<std::string>& xy_variables()
{
    static const std::vector<std::string> vars{"x", "y"};
    return vars;
}

UPoly RationalFunctionOfM::expanded_denominator() const
{
    UPoly d = UPoly::constant(BigRational(1));
    for (const auto& [j, e] : denominator)
        d = d * UPoly::linear(BigRational(j)).pow(e);
    return d;
}

BigRational RationalFunctionOfM::eval(const BigRational& m) const
{
    BigRational den(1);
    for (const auto& [j, e] : denominator)
        den *= ipow(m + BigRational(j), e);
    return numerator.eval(m) / den;
}

RationalFunctionOfM& RationalFunctionOfM::operator*=(const RationalFunctionOfM& other)
{
    numerator = numerator * other.numerator;
    for (const auto& [j, e] : other.denominator)
        denominator[j] += e;
    return *this;
}

RationalFunctionOfM weight(unsigned t)
{
    if (t == 0)
        throw std::invalid_argument("weight needs t >= 1");
    UPoly p = UPoly::constant(BigRational(1));
    for (unsigned i = 0; i + 2 <= t; ++i)
        p = p * UPoly::linear(BigRational(i));
    p *= BigRational(1) / BigRational(factorial(t - 1));
    return {p, {}};
}

RationalFunctionOfM dk_kernel(unsigned k, unsigned r, unsigned s)
{
    const BigRational R(r), S(s);
    RationalFunctionOfM f;
    switch (k) {
    case 0:
        f.numerator = UPoly::constant(BigRational(1));
        break;
    case 1:
        f.numerator = UPoly({-(R + S), BigRational(-2)});
        break;
    case 2:
        f.numerator = UPoly({2 * (R * R + R * S + S * S), 6 * (R + S), BigRational(6)});
        break;
    default:
        throw std::invalid_argument("Log power k must be 0, 1 or 2");
    }
    f.denominator[r] += k + 1;
    f.denominator[s] += k + 1;
    return f;
}

MonomialSeries partial_fractions(const RationalFunctionOfM& f)
{
    MonomialSeries out;
    out.polynomial_part = f.numerator.divmod(f.expanded_denominator()).quotient;

    for (const auto& [j, e] : f.denominator) {
        if (e == 0)
            continue;
        // Taylor expansion at m = -j of numerator / (other factors), to order e-1,
        // in y = m + j.
        std::vector<BigRational> series(e);
        UPoly shifted = f.numerator.taylor_shift(-BigRational(j));
        for (unsigned i = 0; i < e; ++i)
            series[i] = shifted[i];

        for (const auto& [j2, e2] : f.denominator) {
            if (j2 == j || e2 == 0)
                continue;
            // (y + d)^-e2 = sum_i (-1)^i binom(e2+i-1, i) d^(-e2-i) y^i
            const BigRational d = BigRational(j2) - BigRational(j);
            std::vector<BigRational> factor(e);
            BigRational dpow = BigRational(1) / ipow(d, e2);
            for (unsigned i = 0; i < e; ++i) {
                BigRational c = BigRational(binomial(e2 + i - 1, i)) * dpow;
                factor[i] = (i % 2 == 0) ? c : BigRational(-c);
                dpow /= d;
            }
            std::vector<BigRational> product(e);
            for (unsigned a = 0; a < e; ++a) {
                if (series[a] == 0)
                    continue;
                for (unsigned b = 0; a + b < e; ++b)
                    product[a + b] += series[a] * factor[b];
            }
            series = std::move(product);
        }

        for (unsigned i = 0; i < e; ++i)
            if (series[i] != 0)
                out.terms.push_back(PFTerm{e - i, j, series[i]});
    }
    return out;
}

MonomialSeries monomial_terms(unsigned r, unsigned s, unsigned t, unsigned k)
{
    RationalFunctionOfM f = weight(t);
    f *= dk_kernel(k, r, s);
    return partial_fractions(f);
}

ZetaForm monomial_form(unsigned r, unsigned s, unsigned t, unsigned k)
{
    MonomialSeries series = monomial_terms(r, s, t, k);
    ZetaForm form = reduce_terms(series.terms);
    form.add_divergent_poly(series.polynomial_part);
    return form;
}

NonCancellingDivergence::NonCancellingDivergence(ZetaForm residual)
    : std::runtime_error("divergent monomial contributions do not cancel: " + residual.to_string()),
      residual_(std::move(residual))
{
}

ZetaForm integrate_piece(const IntegrandPiece& piece)
{
    if (piece.numerator.variables() != xy_variables())
        throw std::invalid_argument("piece numerator must be a polynomial in x, y");
    if (piece.t == 0 || piece.k > 2)
        throw std::invalid_argument("piece needs t >= 1 and k in {0, 1, 2}");

    // The integral is symmetric in r <-> s, so each unordered pair is reduced once.
    std::map<std::pair<unsigned, unsigned>, ZetaForm> memo;
    ZetaForm total;
    for (const auto& [exps, c] : piece.numerator.terms()) {
        const std::pair<unsigned, unsigned> key{std::min(exps[0], exps[1]), std::max(exps[0], exps[1])};
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, monomial_form(key.first, key.second, piece.t, piece.k)).first;
        total += it->second * c;
    }
    if (!total.is_finite())
        throw NonCancellingDivergence(total);
    return total;
}

}  // namespace zetaforge
