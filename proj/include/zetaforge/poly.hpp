#pragma once

#include "zetaforge/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace zetaforge {

/// Sparse multivariate polynomial over the rationals.
///
/// Variables are named and ordered; an exponent vector holds one entry per
/// variable in that order. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal. Binary operations
/// require identical variable lists.
class PolyQ {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, BigRational>;

    PolyQ() = default;
    explicit PolyQ(std::vector<std::string> variables);

    static PolyQ constant(std::vector<std::string> variables, const BigRational& c);
    static PolyQ variable(std::vector<std::string> variables, const std::string& name);
    static PolyQ monomial(std::vector<std::string> variables, Exponents exps, const BigRational& c);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t variable_index(const std::string& name) const;
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    BigRational coefficient(const Exponents& exps) const;
    void add_term(const Exponents& exps, const BigRational& c);

    /// Highest / lowest exponent of one variable over all terms (0 for the zero polynomial).
    unsigned degree(std::size_t var) const;
    unsigned min_degree(std::size_t var) const;

    PolyQ& operator+=(const PolyQ& other);
    PolyQ& operator-=(const PolyQ& other);
    PolyQ& operator*=(const PolyQ& other);
    PolyQ& operator*=(const BigRational& c);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(PolyQ a, const BigRational& c) { return a *= c; }
    friend PolyQ operator-(PolyQ a) { return a *= BigRational(-1); }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    /// Substitutes images[i] for variable i. All images share one target
    /// variable list, which becomes the result's.
    PolyQ compose(const std::vector<PolyQ>& images) const;

    /// Divides every term by var^e; each term must carry at least that power.
    PolyQ divide_by_power(std::size_t var, unsigned e) const;

    std::string to_string() const;

private:
    void check_compatible(const PolyQ& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact p^e by repeated squaring; p^0 is the constant 1.
PolyQ poly_pow_expand(const PolyQ& p, unsigned e);

}  // namespace zetaforge
