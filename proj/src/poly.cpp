#include "zetaforge/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zetaforge {

PolyQ::PolyQ(std::vector<std::string> variables) : vars_(std::move(variables)) {}

PolyQ PolyQ::constant(std::vector<std::string> variables, const BigRational& c)
{
    PolyQ p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

PolyQ PolyQ::variable(std::vector<std::string> variables, const std::string& name)
{
    PolyQ p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e[p.variable_index(name)] = 1;
    p.add_term(e, BigRational(1));
    return p;
}

PolyQ PolyQ::monomial(std::vector<std::string> variables, Exponents exps, const BigRational& c)
{
    PolyQ p(std::move(variables));
    if (exps.size() != p.vars_.size())
        throw std::invalid_argument("exponent vector length does not match variable count");
    p.add_term(exps, c);
    return p;
}

std::size_t PolyQ::variable_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw std::invalid_argument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

BigRational PolyQ::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void PolyQ::add_term(const Exponents& exps, const BigRational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

unsigned PolyQ::degree(std::size_t var) const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.at(var));
    return d;
}

unsigned PolyQ::min_degree(std::size_t var) const
{
    if (terms_.empty())
        return 0;
    unsigned d = terms_.begin()->first.at(var);
    for (const auto& [e, c] : terms_)
        d = std::min(d, e[var]);
    return d;
}

void PolyQ::check_compatible(const PolyQ& other) const
{
    if (vars_ != other.vars_)
        throw std::invalid_argument("polynomials over different variable lists");
}

PolyQ& PolyQ::operator+=(const PolyQ& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& other)
{
    check_compatible(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b)
{
    a.check_compatible(b);
    PolyQ out(a.vars_);
    PolyQ::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

PolyQ& PolyQ::operator*=(const PolyQ& other)
{
    *this = *this * other;
    return *this;
}

PolyQ& PolyQ::operator*=(const BigRational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

PolyQ PolyQ::compose(const std::vector<PolyQ>& images) const
{
    if (images.size() != vars_.size())
        throw std::invalid_argument("compose needs one image per variable");
    if (images.empty())
        return *this;
    const auto& target = images.front().variables();
    for (const auto& img : images)
        if (img.variables() != target)
            throw std::invalid_argument("compose images over different variable lists");

    // powers[i][k] = images[i]^k, grown on demand
    std::vector<std::vector<PolyQ>> powers(images.size());
    auto power = [&](std::size_t i, unsigned k) -> const PolyQ& {
        auto& table = powers[i];
        if (table.empty())
            table.push_back(PolyQ::constant(target, BigRational(1)));
        while (table.size() <= k)
            table.push_back(table.back() * images[i]);
        return table[k];
    };

    PolyQ out(target);
    for (const auto& [e, c] : terms_) {
        PolyQ term = PolyQ::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term *= power(i, e[i]);
        out += term;
    }
    return out;
}

PolyQ PolyQ::divide_by_power(std::size_t var, unsigned e) const
{
    PolyQ out(vars_);
    for (const auto& [exps, c] : terms_) {
        if (exps.at(var) < e)
            throw std::domain_error("polynomial not divisible by requested power");
        Exponents lowered = exps;
        lowered[var] -= e;
        out.terms_.emplace(std::move(lowered), c);
    }
    return out;
}

std::string PolyQ::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (mag != 1 || !has_var)
            os << zetaforge::to_string(mag);
        bool need_sep = mag != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (need_sep)
                os << '*';
            os << vars_[i];
            if (e[i] > 1)
                os << '^' << e[i];
            need_sep = true;
        }
        first = false;
    }
    return os.str();
}

PolyQ poly_pow_expand(const PolyQ& p, unsigned e)
{
    PolyQ result = PolyQ::constant(p.variables(), BigRational(1));
    PolyQ base = p;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

}  // namespace zetaforge
