#pragma once

#include "zetaforge/rational.hpp"

#include <string>
#include <vector>

namespace zetaforge {

/// Dense univariate polynomial over the rationals, coefficient i multiplies
/// X^i. The coefficient vector never has trailing zeros; the zero polynomial
/// is the empty vector.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<BigRational> coeffs);
    static UPoly constant(const BigRational& c);
    /// X + shift
    static UPoly linear(const BigRational& shift);

    const std::vector<BigRational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigRational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

    BigRational eval(const BigRational& x) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const BigRational& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const BigRational& s) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly pow(unsigned e) const;

    /// p(X + h): re-expansion around -h, exact.
    UPoly taylor_shift(const BigRational& h) const;

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    struct DivMod;
    DivMod divmod(const UPoly& divisor) const;

    std::string to_string(const std::string& var = "m") const;

private:
    void trim();
    std::vector<BigRational> c_;
};

struct UPoly::DivMod {
    UPoly quotient;
    UPoly remainder;
};

}  // namespace zetaforge
