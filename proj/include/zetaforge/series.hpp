#pragma once

#include "zetaforge/poly.hpp"
#include "zetaforge/upoly.hpp"
#include "zetaforge/zeta_form.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace zetaforge {

/// numerator(x, y) * Log^k(xy) / (1 - xy)^t, integrated over the unit square.
struct IntegrandPiece {
    PolyQ numerator;  ///< variables {x, y}
    unsigned t = 1;   ///< >= 1
    unsigned k = 0;   ///< 0, 1 or 2
};

/// Variable list every piece numerator uses.
const std::vector<std::string>& xy_variables();

/// numerator(m) / prod_j (m + j)^{e_j}
struct RationalFunctionOfM {
    UPoly numerator;
    std::map<unsigned, unsigned> denominator;  ///< shift j -> exponent e_j

    UPoly expanded_denominator() const;
    BigRational eval(const BigRational& m) const;
    RationalFunctionOfM& operator*=(const RationalFunctionOfM& other);
};

/// binom(m + t - 2, t - 1): the coefficient of (xy)^(m-1) in (1 - xy)^-t.
RationalFunctionOfM weight(unsigned t);

/// k-th derivative in sigma of 1/((m+r+sigma)(m+s+sigma)) at sigma = 0,
/// i.e. the per-m factor that Log^k(xy) attaches to x^r y^s.
RationalFunctionOfM dk_kernel(unsigned k, unsigned r, unsigned s);

/// Partial-fraction expansion of one monomial's general term.
struct MonomialSeries {
    std::vector<PFTerm> terms;  ///< shifts are r or s only
    UPoly polynomial_part;      ///< non-decaying remainder, summand in m
};

/// Decomposes weight(t) * dk_kernel(k, r, s) into shifted power terms plus a
/// polynomial part. Handles r == s through repeated roots.
MonomialSeries monomial_terms(unsigned r, unsigned s, unsigned t, unsigned k);

/// Generic expansion of any rational function in m with shifted-power
/// denominator.
MonomialSeries partial_fractions(const RationalFunctionOfM& f);

/// The monomial integral as a (possibly divergent) form.
ZetaForm monomial_form(unsigned r, unsigned s, unsigned t, unsigned k);

/// Thrown when the divergent parts of a piece's monomials fail to cancel.
class NonCancellingDivergence : public std::runtime_error {
public:
    explicit NonCancellingDivergence(ZetaForm residual);
    const ZetaForm& residual() const { return residual_; }

private:
    ZetaForm residual_;
};

/// Sums the monomial forms of the numerator; throws NonCancellingDivergence
/// unless the result is finite.
ZetaForm integrate_piece(const IntegrandPiece& piece);

}  // namespace zetaforge
