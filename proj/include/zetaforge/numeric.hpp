#pragma once

#include "zetaforge/reducer.hpp"
#include "zetaforge/series.hpp"
#include "zetaforge/zeta_form.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace zetaforge {

/// Arbitrary-precision binary float; precision is fixed at construction
/// from the current default (see PrecisionScope).
using HPReal = boost::multiprecision::mpfr_float;

/// Sets the default HPReal precision in decimal digits for the lifetime of
/// the scope and restores the previous one afterwards.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// Guard digits added on top of every requested precision.
inline constexpr unsigned guard_digits = 10;

HPReal to_hp(const BigRational& q);
HPReal to_hp(const BigInt& z);

/// Scientific decimal string with `digits` significant digits.
std::string to_decimal(const HPReal& x, unsigned digits);

/// pi by Machin's arctangent formula.
HPReal pi_value(unsigned digits);

/// zeta(a), a >= 2, by direct summation plus an Euler-Maclaurin tail.
/// Accurate to `digits` decimal digits (digits <= 100).
HPReal zeta_value(unsigned a, unsigned digits);

class DivergentForm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// rational part + sum_a q_a zeta(a), evaluated with guard digits.
HPReal eval_form(const ZetaForm& form, unsigned digits);

class DivergentInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Enclosure of sum_{m>=1} sum_terms c/(m+j)^a.
struct SeriesEnclosure {
    HPReal partial_sum;  ///< sum over m <= m_cut
    HPReal lower;
    HPReal upper;

    bool contains(const HPReal& x) const { return lower <= x && x <= upper; }
    HPReal midpoint() const { return (lower + upper) / 2; }
    HPReal width() const { return upper - lower; }
};

/// Direct partial sum to m_cut plus an integral-test tail interval. The a = 1
/// tail is summed exactly (it telescopes); throws DivergentInput if the a = 1
/// coefficients do not cancel.
SeriesEnclosure sum_terms_numeric(std::span<const PFTerm> terms, unsigned long m_cut, unsigned digits);

struct DirectSum {
    long double value = 0;
    long double error_bound = 0;
};

/// sum_{m>=1} weight(t)(m) * dk_kernel(k, r, s)(m), evaluating the general
/// term as a product (no partial fractions) up to m_cut, with the tail taken
/// from the expansion of the term in powers of 1/m. Throws DivergentInput if
/// the general term decays slower than 1/m^2.
DirectSum sum_monomial_direct(unsigned r, unsigned s, unsigned t, unsigned k, unsigned long m_cut);

class NonConvergent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    HPReal value;
    HPReal error_estimate;  ///< difference of the last two refinement levels
    unsigned levels = 0;
    std::size_t evaluations = 0;
};

/// Two-dimensional quadrature of a piece over the unit square.
///
/// The square is split along the diagonal near the (1,1) corner and each
/// triangle is mapped with a Duffy transform, which removes the (1-xy)^-t
/// corner behaviour; both remaining axes use tanh-sinh, which absorbs the
/// Log(xy) endpoint singularities. Step halving stops once two successive
/// levels agree to 10^(-digits/2); NonConvergent otherwise.
QuadratureResult quad_piece(const IntegrandPiece& piece, unsigned digits);

struct McEstimate {
    double mean = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    bool covers(double x, double sigmas = 3.0) const { return std::abs(x - mean) <= sigmas * std_error; }
};

/// The original (unreduced) family integrand at a point of the unit cube;
/// zeta2 uses p[0..1], zeta3 p[0..2], zeta4 all four.
double unreduced_integrand(FamilySpec spec, const std::array<double, 4>& p);

/// Plain Monte Carlo on the unreduced integrand. Samples are drawn in fixed
/// batches whose seeds derive from (seed, batch index), so the estimate does
/// not depend on the thread count.
McEstimate mc_integral(FamilySpec spec, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

}  // namespace zetaforge
