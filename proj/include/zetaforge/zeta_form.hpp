#pragma once

#include "zetaforge/rational.hpp"
#include "zetaforge/upoly.hpp"

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace zetaforge {

/// One summand c/(m+j)^a of an infinite sum over m >= 1.
struct PFTerm {
    unsigned a = 1;  ///< power, >= 1
    unsigned j = 0;  ///< shift
    BigRational c;   ///< nonzero coefficient

    friend bool operator==(const PFTerm&, const PFTerm&) = default;
};

/// Exact linear form q0 + sum_a q_a zeta(a), plus a divergence ledger.
///
/// The ledger keeps a formal coefficient of sum_m 1/m (divergent_harmonic)
/// and a polynomial summand in m (divergent_poly) for series that do not
/// decay. Individual monomials of an integrand legitimately diverge; only
/// assembled integrands must come out finite.
class ZetaForm {
public:
    ZetaForm() = default;
    static ZetaForm rational(const BigRational& q);
    static ZetaForm zeta(unsigned a, const BigRational& q = BigRational(1));

    const BigRational& rational_part() const { return rational_; }
    const std::map<unsigned, BigRational>& zeta_coeffs() const { return zeta_; }
    BigRational zeta_coeff(unsigned a) const;
    const BigRational& divergent_harmonic() const { return div_harmonic_; }
    const UPoly& divergent_poly() const { return div_poly_; }

    bool is_finite() const { return div_harmonic_ == 0 && div_poly_.is_zero(); }
    bool is_zero() const { return is_finite() && rational_ == 0 && zeta_.empty(); }

    /// Indices a with a nonzero zeta(a) coefficient, ascending.
    std::vector<unsigned> support() const;

    void add_rational(const BigRational& q) { rational_ += q; }
    void add_zeta(unsigned a, const BigRational& q);
    void add_divergent_harmonic(const BigRational& q) { div_harmonic_ += q; }
    void add_divergent_poly(const UPoly& p) { div_poly_ += p; }

    ZetaForm& operator+=(const ZetaForm& other);
    ZetaForm& operator*=(const BigRational& s);
    friend ZetaForm operator+(ZetaForm a, const ZetaForm& b) { return a += b; }
    friend ZetaForm operator*(ZetaForm a, const BigRational& s) { return a *= s; }
    friend bool operator==(const ZetaForm& a, const ZetaForm& b);

    /// "108·ζ(4) - 935/8"; divergent parts render as "+ c·Σ1/m" and "+ Σ(poly)".
    std::string to_string() const;

private:
    BigRational rational_;
    std::map<unsigned, BigRational> zeta_;
    BigRational div_harmonic_;
    UPoly div_poly_;
};

/// Sums a multiset of shifted partial-fraction terms over m >= 1.
///
/// c/(m+j)^a with a >= 2 contributes c*(zeta(a) - H_j^(a)). For a = 1 the
/// coefficient goes to divergent_harmonic and -c*H_j^(1) to the rational
/// part, so whenever the a = 1 coefficients sum to zero the telescoped value
/// is exact and the form is finite. The result does not depend on order.
ZetaForm reduce_terms(std::span<const PFTerm> terms);

/// f + s*g, componentwise including the divergence ledger.
ZetaForm form_combine(const ZetaForm& f, const ZetaForm& g, const BigRational& s);

struct IntegerForm {
    BigInt R;  ///< T * rational part
    BigInt S;  ///< T * zeta coefficient
};

struct IntegerizeFailure {
    std::string reason;
    std::vector<BigInt> offending_denominators;
};

/// (T*q0, T*q_a) when the form lives on {1, zeta(a)} and both products are
/// integers; a structured failure otherwise.
std::variant<IntegerForm, IntegerizeFailure> integerize(const ZetaForm& f, const BigInt& T, unsigned zeta_index = 4);

}  // namespace zetaforge
