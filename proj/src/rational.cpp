#include "zetaforge/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace zetaforge {

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

BigRational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (negative)
        n = -n;
    return make_rational(n, d);
}

BigInt ipow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRational ipow(const BigRational& base, unsigned long e)
{
    return make_rational(ipow(BigInt(base.get_num()), e), ipow(BigInt(base.get_den()), e));
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace zetaforge
