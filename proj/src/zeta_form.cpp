#include "zetaforge/zeta_form.hpp"

#include "zetaforge/harmonic.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaforge {

ZetaForm ZetaForm::rational(const BigRational& q)
{
    ZetaForm f;
    f.rational_ = q;
    return f;
}

ZetaForm ZetaForm::zeta(unsigned a, const BigRational& q)
{
    ZetaForm f;
    f.add_zeta(a, q);
    return f;
}

BigRational ZetaForm::zeta_coeff(unsigned a) const
{
    auto it = zeta_.find(a);
    return it == zeta_.end() ? BigRational(0) : it->second;
}

std::vector<unsigned> ZetaForm::support() const
{
    std::vector<unsigned> out;
    for (const auto& [a, q] : zeta_)
        out.push_back(a);
    return out;
}

void ZetaForm::add_zeta(unsigned a, const BigRational& q)
{
    if (a < 2)
        throw std::invalid_argument("zeta(a) needs a >= 2");
    if (q == 0)
        return;
    auto [it, inserted] = zeta_.try_emplace(a, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0)
            zeta_.erase(it);
    }
}

ZetaForm& ZetaForm::operator+=(const ZetaForm& other)
{
    rational_ += other.rational_;
    for (const auto& [a, q] : other.zeta_)
        add_zeta(a, q);
    div_harmonic_ += other.div_harmonic_;
    div_poly_ += other.div_poly_;
    return *this;
}

ZetaForm& ZetaForm::operator*=(const BigRational& s)
{
    if (s == 0) {
        *this = ZetaForm{};
        return *this;
    }
    rational_ *= s;
    for (auto& [a, q] : zeta_)
        q *= s;
    div_harmonic_ *= s;
    div_poly_ *= s;
    return *this;
}

bool operator==(const ZetaForm& a, const ZetaForm& b)
{
    return a.rational_ == b.rational_ && a.zeta_ == b.zeta_ && a.div_harmonic_ == b.div_harmonic_
        && a.div_poly_ == b.div_poly_;
}

std::string ZetaForm::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const BigRational& q, const std::string& symbol) {
        BigRational mag = abs(q);
        os << (q < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (symbol.empty())
            os << zetaforge::to_string(mag);
        else if (mag == 1)
            os << symbol;
        else
            os << zetaforge::to_string(mag) << "·" << symbol;
        first = false;
    };
    for (auto it = zeta_.rbegin(); it != zeta_.rend(); ++it)
        emit(it->second, "ζ(" + std::to_string(it->first) + ")");
    if (rational_ != 0)
        emit(rational_, "");
    if (div_harmonic_ != 0)
        emit(div_harmonic_, "Σ1/m");
    if (!div_poly_.is_zero()) {
        os << (first ? "" : " + ") << "Σ(" << div_poly_.to_string("m") << ")";
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

ZetaForm reduce_terms(std::span<const PFTerm> terms)
{
    ZetaForm out;
    for (const auto& t : terms) {
        if (t.a == 0)
            throw std::invalid_argument("partial-fraction power must be >= 1");
        if (t.c == 0)
            continue;
        if (t.a == 1)
            out.add_divergent_harmonic(t.c);
        else
            out.add_zeta(t.a, t.c);
        if (t.j > 0)
            out.add_rational(-t.c * harmonic(t.j, t.a));
    }
    return out;
}

ZetaForm form_combine(const ZetaForm& f, const ZetaForm& g, const BigRational& s)
{
    return f + g * s;
}

std::variant<IntegerForm, IntegerizeFailure> integerize(const ZetaForm& f, const BigInt& T, unsigned zeta_index)
{
    if (T <= 0)
        return IntegerizeFailure{"T must be positive", {}};
    if (!f.is_finite())
        return IntegerizeFailure{"form is not finite", {}};
    for (const auto& [a, q] : f.zeta_coeffs())
        if (a != zeta_index)
            return IntegerizeFailure{"form has a zeta(" + std::to_string(a) + ") component", {}};

    const BigRational q0 = f.rational_part();
    const BigRational qa = f.zeta_coeff(zeta_index);
    BigRational r = q0 * BigRational(T);
    BigRational s = qa * BigRational(T);
    r.canonicalize();
    s.canonicalize();

    IntegerizeFailure failure{"T is not a common multiple of the coefficient denominators", {}};
    if (r.get_den() != 1)
        failure.offending_denominators.emplace_back(q0.get_den());
    if (s.get_den() != 1)
        failure.offending_denominators.emplace_back(qa.get_den());
    if (!failure.offending_denominators.empty())
        return failure;
    return IntegerForm{BigInt(r.get_num()), BigInt(s.get_num())};
}

}  // namespace zetaforge
