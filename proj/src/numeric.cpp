#include "zetaforge/numeric.hpp"

#include "zetaforge/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

namespace zetaforge {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(HPReal::default_precision())
{
    HPReal::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { HPReal::default_precision(saved_); }

HPReal to_hp(const BigRational& q)
{
    HPReal x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

HPReal to_hp(const BigInt& z)
{
    HPReal x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}

std::string to_decimal(const HPReal& x, unsigned digits)
{
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits)) << std::scientific << x;
    return os.str();
}

namespace {

HPReal epsilon_for(unsigned digits)
{
    HPReal ten(10);
    return pow(ten, -static_cast<int>(digits));
}

HPReal arctan_inverse(unsigned x, unsigned digits)
{
    // atan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1))
    const HPReal eps = epsilon_for(digits + 2);
    const HPReal x2 = HPReal(x) * x;
    HPReal power = HPReal(1) / x;
    HPReal sum = 0;
    for (unsigned k = 0;; ++k) {
        HPReal term = power / (2 * k + 1);
        sum += (k % 2 == 0) ? term : HPReal(-term);
        if (term < eps)
            break;
        power /= x2;
    }
    return sum;
}

/// B_0, B_2, B_4, ... exactly, grown on demand.
BigRational bernoulli_even(unsigned j)
{
    static std::mutex mutex;
    static std::vector<BigRational> all{BigRational(1)};  // B_0, B_1, B_2, ...
    std::lock_guard lock(mutex);
    const unsigned need = 2 * j;
    while (all.size() <= need) {
        // sum_{k=0}^{n} binom(n+1, k) B_k = 0
        const unsigned n = static_cast<unsigned>(all.size());
        BigRational acc(0);
        for (unsigned k = 0; k < n; ++k)
            acc += BigRational(binomial(n + 1, k)) * all[k];
        all.push_back(-acc / BigRational(n + 1));
    }
    return all[need];
}

}  // namespace

HPReal pi_value(unsigned digits)
{
    PrecisionScope scope(digits + guard_digits);
    return 16 * arctan_inverse(5, digits + guard_digits) - 4 * arctan_inverse(239, digits + guard_digits);
}

HPReal zeta_value(unsigned a, unsigned digits)
{
    if (a < 2)
        throw std::invalid_argument("zeta_value needs a >= 2");
    if (digits > 100)
        throw std::invalid_argument("zeta_value supports at most 100 digits");
    const unsigned wp = digits + guard_digits;
    PrecisionScope scope(wp);
    const HPReal eps = epsilon_for(wp);

    const unsigned N = std::max(20u, wp);
    HPReal sum = 0;
    for (unsigned m = N - 1; m >= 1; --m)
        sum += 1 / pow(HPReal(m), a);

    // Euler-Maclaurin from N: int_N^inf + f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N)
    const HPReal n_hp(N);
    const HPReal n_pow = pow(n_hp, a);  // N^a
    sum += n_hp / (n_pow * (a - 1)) + 1 / (2 * n_pow);
    // rising = a (a+1) ... (a+2j-2); npow = N^(a+2j-1)
    HPReal rising = a;
    HPReal npow = n_pow * n_hp;
    HPReal fact = 2;  // (2j)!
    for (unsigned j = 1; j < 4 * N; ++j) {
        HPReal term = to_hp(bernoulli_even(j)) * rising / (fact * npow);
        sum += term;
        if (abs(term) < eps)
            break;
        rising *= HPReal(a + 2 * j - 1) * (a + 2 * j);
        npow *= n_hp * n_hp;
        fact *= HPReal(2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

HPReal eval_form(const ZetaForm& form, unsigned digits)
{
    if (!form.is_finite())
        throw DivergentForm("cannot evaluate a divergent form: " + form.to_string());
    PrecisionScope scope(digits + guard_digits);
    HPReal value = to_hp(form.rational_part());
    for (const auto& [a, q] : form.zeta_coeffs())
        value += to_hp(q) * zeta_value(a, digits + guard_digits);
    return value;
}

SeriesEnclosure sum_terms_numeric(std::span<const PFTerm> terms, unsigned long m_cut, unsigned digits)
{
    if (m_cut < 1000)
        throw std::invalid_argument("sum_terms_numeric needs m_cut >= 1000");
    BigRational harmonic_residue(0);
    for (const auto& t : terms) {
        if (t.a == 0)
            throw std::invalid_argument("partial-fraction power must be >= 1");
        if (t.a == 1)
            harmonic_residue += t.c;
    }
    if (harmonic_residue != 0)
        throw DivergentInput("terms decay like 1/m: harmonic residue " + to_string(harmonic_residue));

    const unsigned wp = digits + guard_digits;
    PrecisionScope scope(wp);

    std::vector<HPReal> coeff;
    coeff.reserve(terms.size());
    for (const auto& t : terms)
        coeff.push_back(to_hp(t.c));

    HPReal partial = 0;
    for (unsigned long m = 1; m <= m_cut; ++m) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            HPReal base(m + terms[i].j);
            partial += coeff[i] / pow(base, terms[i].a);
        }
    }

    // Tails: for a = 1 with cancelling coefficients,
    //   sum_{m>M} sum_j c_j/(m+j) = -sum_j c_j sum_{i=1..j} 1/(M+i)  (exact),
    // for a >= 2 the integral test brackets sum_{m>M} (m+j)^-a.
    HPReal lower = 0;
    HPReal upper = 0;
    const HPReal M(m_cut);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (t.a == 1) {
            HPReal s = 0;
            for (unsigned q = 1; q <= t.j; ++q)
                s += 1 / (M + q);
            lower -= coeff[i] * s;
            upper -= coeff[i] * s;
            continue;
        }
        const HPReal lo = 1 / ((t.a - 1) * pow(M + t.j + 1, t.a - 1));
        const HPReal hi = 1 / ((t.a - 1) * pow(M + t.j, t.a - 1));
        if (coeff[i] >= 0) {
            lower += coeff[i] * lo;
            upper += coeff[i] * hi;
        } else {
            lower += coeff[i] * hi;
            upper += coeff[i] * lo;
        }
    }
    // rounding slack for m_cut * |terms| accumulations
    HPReal magnitude = 1;
    for (const auto& c : coeff)
        magnitude += abs(c);
    const HPReal slack = magnitude * (m_cut + 1) * terms.size() * epsilon_for(wp - 2);
    return SeriesEnclosure{partial, partial + lower - slack, partial + upper + slack};
}

DirectSum sum_monomial_direct(unsigned r, unsigned s, unsigned t, unsigned k, unsigned long m_cut)
{
    if (t == 0 || k > 2)
        throw std::invalid_argument("sum_monomial_direct needs t >= 1 and k in {0, 1, 2}");

    // Expansion of the general term in eps = 1/m, exact.
    RationalFunctionOfM f = weight(t);
    f *= dk_kernel(k, r, s);
    const UPoly num = f.numerator;
    const UPoly den = f.expanded_denominator();
    const int shift = den.degree() - num.degree();  // leading power of 1/m
    constexpr int order = 8;
    std::vector<BigRational> nrev(order), drev(order), g(order);
    for (int i = 0; i < order; ++i) {
        if (num.degree() - i >= 0)
            nrev[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(num.degree() - i)];
        if (den.degree() - i >= 0)
            drev[static_cast<std::size_t>(i)] = den[static_cast<std::size_t>(den.degree() - i)];
    }
    for (int i = 0; i < order; ++i) {
        BigRational acc = nrev[static_cast<std::size_t>(i)];
        for (int q = 1; q <= i; ++q)
            acc -= drev[static_cast<std::size_t>(q)] * g[static_cast<std::size_t>(i - q)];
        g[static_cast<std::size_t>(i)] = acc / drev[0];
    }
    for (int i = 0; i < order; ++i)
        if (g[static_cast<std::size_t>(i)] != 0 && shift + i < 2)
            throw DivergentInput("general term does not decay like 1/m^2");

    // Partial sum with compensated accumulation.
    long double w_norm = 1;
    for (unsigned i = 2; i < t; ++i)
        w_norm *= i;
    const long double R = r, S = s;
    long double sum = 0, comp = 0, abs_sum = 0;
    for (unsigned long mi = m_cut; mi >= 1; --mi) {
        const long double m = static_cast<long double>(mi);
        long double w = 1;
        for (unsigned i = 0; i + 2 <= t; ++i)
            w *= m + i;
        w /= w_norm;
        const long double A = m + R, B = m + S;
        long double term = 0;
        switch (k) {
        case 0:
            term = w / (A * B);
            break;
        case 1:
            term = -w * (A + B) / ((A * B) * (A * B));
            break;
        default:
            term = 2 * w * (A * A + A * B + B * B) / ((A * B) * (A * B) * (A * B));
            break;
        }
        abs_sum += std::fabs(term);
        const long double y = term - comp;
        const long double tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
    }

    // Tail: sum_{m>M} m^-p by Euler-Maclaurin from M.
    const long double M = static_cast<long double>(m_cut);
    auto tail = [&](long double p) {
        return std::pow(M, 1 - p) / (p - 1) - std::pow(M, -p) / 2 + p * std::pow(M, -p - 1) / 12
            - p * (p + 1) * (p + 2) * std::pow(M, -p - 3) / 720;
    };
    long double tail_sum = 0, tail_err = 0;
    for (int i = 0; i < order; ++i) {
        const long double gi = g[static_cast<std::size_t>(i)].get_d();
        if (gi == 0)
            continue;
        const long double p = shift + i;
        tail_sum += gi * tail(p);
        tail_err += std::fabs(gi) * p * (p + 1) * (p + 2) * (p + 3) * (p + 4) * std::pow(M, -p - 5) / 30240;
    }
    // Truncated expansion: bounded by twice the last retained order's size.
    const long double last = std::fabs(g[order - 1].get_d()) + std::fabs(g[order - 2].get_d()) + 1;
    tail_err += 2 * last * std::pow(M, -(shift + order - 1));
    const long double eps = std::numeric_limits<long double>::epsilon();
    const long double rounding = 16 * eps * abs_sum + 16 * eps * std::fabs(tail_sum);
    return DirectSum{sum + tail_sum, tail_err + rounding};
}

namespace {

struct TanhSinhNode {
    HPReal x;           ///< in (0, 1)
    HPReal complement;  ///< 1 - x, accurate near x = 1
    HPReal weight;
};

/// Nodes of the step-h rule on [0, 1], truncated where weights fall below eps.
std::vector<TanhSinhNode> tanh_sinh_nodes(const HPReal& h, const HPReal& eps)
{
    const HPReal half_pi = pi_value(static_cast<unsigned>(HPReal::default_precision())) / 2;
    std::vector<TanhSinhNode> nodes;
    auto make = [&](const HPReal& t) {
        const HPReal g = 2 * half_pi * sinh(t);
        const HPReal x = 1 / (1 + exp(-g));
        const HPReal xc = 1 / (1 + exp(g));
        return TanhSinhNode{x, xc, h * 2 * half_pi * cosh(t) * x * xc};
    };
    nodes.push_back(make(HPReal(0)));
    for (long i = 1;; ++i) {
        const HPReal t = h * i;
        TanhSinhNode plus = make(t);
        TanhSinhNode minus = make(-t);
        if (plus.weight < eps && minus.weight < eps)
            break;
        nodes.push_back(std::move(plus));
        nodes.push_back(std::move(minus));
    }
    return nodes;
}

/// Integral over the triangle {0 <= b <= a <= 1} in Duffy coordinates
/// b = a*s, for coeff[i][j] = coefficient of a^i b^j in N(1-a, 1-b).
HPReal duffy_triangle(const std::vector<std::vector<HPReal>>& coeff, unsigned t, unsigned k,
                      const std::vector<TanhSinhNode>& nodes, std::size_t& evaluations)
{
    const std::size_t I = coeff.size();
    const std::size_t J = I ? coeff[0].size() : 0;
    HPReal total = 0;
    std::vector<HPReal> inner_coeff(J);
    for (const auto& outer : nodes) {
        const HPReal& a = outer.x;
        // inner_coeff[j] = sum_i c_ij a^(i+j+1-t)
        const HPReal a_base = pow(a, static_cast<int>(1) - static_cast<int>(t));
        HPReal a_j = a_base;
        for (std::size_t j = 0; j < J; ++j) {
            HPReal acc = 0;
            HPReal a_pow = a_j;
            for (std::size_t i = 0; i < I; ++i) {
                if (coeff[i][j] != 0)
                    acc += coeff[i][j] * a_pow;
                a_pow *= a;
            }
            inner_coeff[j] = acc;
            a_j *= a;
        }
        const HPReal log_x = k ? log(outer.complement) : HPReal(0);
        HPReal inner = 0;
        for (const auto& in : nodes) {
            const HPReal& s = in.x;
            HPReal poly = 0;
            for (std::size_t j = J; j-- > 0;)
                poly = poly * s + inner_coeff[j];
            // u / a = 1 + s (1 - a) >= 1
            HPReal value = poly / pow(1 + s * outer.complement, t);
            if (k) {
                const HPReal y = outer.complement + a * in.complement;
                const HPReal L = log_x + log(y);
                value *= (k == 1) ? L : HPReal(L * L);
            }
            inner += in.weight * value;
            ++evaluations;
        }
        total += outer.weight * inner;
    }
    return total;
}

}  // namespace

QuadratureResult quad_piece(const IntegrandPiece& piece, unsigned digits)
{
    if (piece.numerator.variables() != xy_variables())
        throw std::invalid_argument("piece numerator must be a polynomial in x, y");
    if (piece.t == 0 || piece.k > 2)
        throw std::invalid_argument("piece needs t >= 1 and k in {0, 1, 2}");

    // N(1-a, 1-b) exactly
    const std::vector<std::string> ab{"a", "b"};
    const PolyQ one = PolyQ::constant(ab, BigRational(1));
    const PolyQ shifted =
        piece.numerator.compose({one - PolyQ::variable(ab, "a"), one - PolyQ::variable(ab, "b")});

    const unsigned wp = digits + guard_digits;
    PrecisionScope scope(wp);
    const std::size_t I = shifted.degree(0) + 1, J = shifted.degree(1) + 1;
    std::vector<std::vector<HPReal>> coeff(I, std::vector<HPReal>(J, HPReal(0)));
    std::vector<std::vector<HPReal>> transposed(J, std::vector<HPReal>(I, HPReal(0)));
    for (const auto& [e, c] : shifted.terms()) {
        coeff[e[0]][e[1]] = to_hp(c);
        transposed[e[1]][e[0]] = to_hp(c);
    }

    const HPReal tol = epsilon_for(digits / 2);
    const HPReal node_eps = tol * epsilon_for(6);
    QuadratureResult result;
    HPReal previous = 0;
    constexpr unsigned max_levels = 9;
    for (unsigned level = 1; level <= max_levels; ++level) {
        const HPReal h = pow(HPReal(2), -static_cast<int>(level));
        const auto nodes = tanh_sinh_nodes(h, node_eps);
        HPReal value = duffy_triangle(coeff, piece.t, piece.k, nodes, result.evaluations)
            + duffy_triangle(transposed, piece.t, piece.k, nodes, result.evaluations);
        result.levels = level;
        if (level >= 3) {
            const HPReal diff = abs(value - previous);
            if (diff < tol) {
                result.value = value;
                result.error_estimate = diff;
                return result;
            }
        }
        previous = value;
    }
    throw NonConvergent("quadrature did not settle after " + std::to_string(max_levels) + " refinements");
}

double unreduced_integrand(FamilySpec spec, const std::array<double, 4>& p)
{
    const double x = p[0], y = p[1], z = p[2], w = p[3];
    const double u = 1 - x * y;
    const int n = static_cast<int>(spec.n);
    switch (spec.family) {
    case Family::zeta2:
        return std::pow(x * (1 - x) * y * (1 - y), n) / std::pow(u, n + 1);
    case Family::zeta3:
        return std::pow(x * (1 - x) * y * (1 - y) * z * (1 - z), n) / std::pow(1 - u * z, n + 1);
    case Family::zeta4:
        return std::pow(x * (1 - x) * y * (1 - y) * z * (1 - z) * w * (1 - w), n) * std::pow(u, 2 * n + 1)
            / std::pow((1 - u * z) * (1 - u * w), n + 1);
    }
    return 0;
}

namespace {

struct BatchStats {
    std::uint64_t count = 0;
    double mean = 0;
    double m2 = 0;
};

constexpr std::uint64_t mc_batch_size = 1u << 16;

BatchStats run_batch(FamilySpec spec, std::uint64_t seed, std::uint64_t batch, std::uint64_t count)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BatchStats st;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::array<double, 4> p{unit(rng), unit(rng), unit(rng), unit(rng)};
        const double f = unreduced_integrand(spec, p);
        ++st.count;
        const double delta = f - st.mean;
        st.mean += delta / static_cast<double>(st.count);
        st.m2 += delta * (f - st.mean);
    }
    return st;
}

}  // namespace

McEstimate mc_integral(FamilySpec spec, std::uint64_t samples, std::uint64_t seed, unsigned threads)
{
    if (samples == 0)
        throw std::invalid_argument("mc_integral needs samples > 0");
    const std::uint64_t batches = (samples + mc_batch_size - 1) / mc_batch_size;
    std::vector<BatchStats> stats(batches);
    auto batch_count = [&](std::uint64_t b) {
        return b + 1 == batches ? samples - b * mc_batch_size : mc_batch_size;
    };

    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::uint64_t b = 0; b < batches; ++b)
            stats[b] = run_batch(spec, seed, b, batch_count(b));
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < batches; b += threads)
                    stats[b] = run_batch(spec, seed, b, batch_count(b));
            });
    }

    // Chan et al. pairwise merge, always in batch order.
    BatchStats total;
    for (const auto& st : stats) {
        if (st.count == 0)
            continue;
        const double n_a = static_cast<double>(total.count), n_b = static_cast<double>(st.count);
        const double delta = st.mean - total.mean;
        const double n = n_a + n_b;
        total.mean += delta * n_b / n;
        total.m2 += st.m2 + delta * delta * n_a * n_b / n;
        total.count += st.count;
    }
    const double variance = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
    return McEstimate{total.mean, std::sqrt(variance / static_cast<double>(total.count)), samples, seed};
}

}  // namespace zetaforge
