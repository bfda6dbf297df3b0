#include "zetaforge/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaforge {

UPoly::UPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const BigRational& c) { return UPoly({c}); }

UPoly UPoly::linear(const BigRational& shift) { return UPoly({shift, BigRational(1)}); }

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigRational UPoly::eval(const BigRational& x) const
{
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const BigRational& s)
{
    for (auto& c : c_)
        c *= s;
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::pow(unsigned e) const
{
    UPoly result = constant(BigRational(1));
    UPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

UPoly UPoly::taylor_shift(const BigRational& h) const
{
    // Horner in the shifted variable: acc = acc*(X + h) + c_i
    std::vector<BigRational> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc.emplace_back(0);
        for (std::size_t i = acc.size() - 1; i > 0; --i)
            acc[i] = acc[i - 1] + acc[i] * h;
        acc[0] = acc[0] * h + *it;
    }
    return UPoly(std::move(acc));
}

UPoly::DivMod UPoly::divmod(const UPoly& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<BigRational> rem = c_;
    const int dd = divisor.degree();
    const BigRational& lead = divisor.c_.back();
    if (degree() < dd)
        return {UPoly{}, *this};
    std::vector<BigRational> quot(static_cast<std::size_t>(degree() - dd + 1));
    for (int i = degree(); i >= dd; --i) {
        BigRational q = rem[static_cast<std::size_t>(i)] / lead;
        if (q == 0)
            continue;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::to_string(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        BigRational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || i == 0)
            os << zetaforge::to_string(mag) << (i > 0 ? "*" : "");
        if (i > 0)
            os << var << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

}  // namespace zetaforge
