#pragma once

#include "zetaforge/numeric.hpp"
#include "zetaforge/reducer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetaforge {

/// Maximum of the per-n integrand ratio of a family, numerically and in
/// closed form, and the resulting decay product e^(exponent) * sup.
struct BoundCertificate {
    Family family = Family::zeta4;
    std::string closed_form_description;
    HPReal closed_form_value;
    HPReal numeric_sup;
    std::vector<HPReal> argmax;
    HPReal gradient_norm;          ///< |grad ratio| at argmax
    double fd_discrepancy = 0;     ///< max |finite difference - analytic partial|
    double grid_max = 0;           ///< largest ratio seen on the scan grid
    unsigned grid_resolution = 0;
    std::string decay_exponent;    ///< "2.01", "3.01", "4.01"
    HPReal decay_product;          ///< e^(exponent) * closed form
    HPReal alternative_product;    ///< e^(2 exponent) * closed form, for T_n = lcm(1..2n)^k
    bool sup_matches = false;
    bool satisfied = false;        ///< decay_product < 1 and sup_matches
};

class NoInteriorMaximum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The family's ratio function at a point (double precision, used by the grid).
double ratio_function(Family family, const std::vector<double>& p);

/// Grid scan (z = w symmetry for zeta4) followed by damped Newton ascent on
/// log ratio in high precision, compared against the closed-form constant.
BoundCertificate sup_ratio(Family family, unsigned digits = 40, unsigned grid = 64);

/// sup_ratio plus e^(2.01 | 3.01 | 4.01) * sup; satisfied iff below 1.
BoundCertificate decay_certificate(Family family, unsigned digits = 40);

/// The closed-form constant alone.
HPReal closed_form_sup(Family family, unsigned digits);

struct LcmGrowthRow {
    unsigned n = 0;
    HPReal psi;
    double ratio = 0;  ///< psi(n) / n
};

struct LcmGrowthReport {
    unsigned n_max = 0;
    unsigned exact_upto = 0;
    std::vector<LcmGrowthRow> rows;  ///< sampled n, always including n_max
    double max_ratio = 0;            ///< over 10 <= n <= n_max
    unsigned max_ratio_at = 0;
    /// Smallest n0 with psi(n)/n <= 1.0025 for every n0 <= n <= n_max.
    std::optional<unsigned> threshold_10025;
    /// prod of p over prime powers p^k <= n equals lcm(1..n) for every n <= exact_upto.
    bool exact_match = false;
    std::vector<unsigned> exact_mismatches;
    HPReal max_log_discrepancy;      ///< max |log lcm(1..n) - psi(n)| over the exact range
};

/// Chebyshev psi by a prime sieve with high-precision log accumulation.
LcmGrowthReport lcm_growth(unsigned n_max, unsigned exact_upto, unsigned digits = 40);

struct DenominatorRow {
    unsigned n = 0;
    BigInt den_rational;
    BigInt den_zeta;
    unsigned power = 0;         ///< family weight k in lcm(...)^k
    BigInt lcm_n_pow;           ///< lcm(1..n)^k
    bool divides_lcm_n = false;
    BigInt lcm_2n_pow;          ///< lcm(1..2n)^k
    bool divides_lcm_2n = false;
};

/// Divisibility of the computed denominators by lcm(1..n)^k and lcm(1..2n)^k.
/// Pure fact-finding; nothing is asserted about the expected outcome.
std::vector<DenominatorRow> denominator_report(Family family, const std::vector<ComputedForm>& forms);

struct DecayRow {
    unsigned n = 0;
    HPReal value;        ///< |form|
    BigInt T;            ///< lcm of the coefficient denominators
    HPReal scaled;       ///< T * |form|
    HPReal bound;        ///< |I_0| * C^n
    bool positive = false;
    bool within_bound = false;
};

/// |form| in high precision for each n, scaled residuals, and the check
/// 0 < |I_n| <= |I_0| C^n (for zeta4, |I_0| = 6 zeta(4)).
std::vector<DecayRow> decay_table(Family family, const std::vector<ComputedForm>& forms, unsigned digits);

}  // namespace zetaforge
