#include "zetaforge/analysis.hpp"

#include "zetaforge/harmonic.hpp"

#include <algorithm>
#include <cmath>

namespace zetaforge {

namespace {

/// Value, gradient and Hessian of a scalar function of d variables.
struct Jet {
    HPReal v;
    std::vector<HPReal> g;
    std::vector<std::vector<HPReal>> h;

    explicit Jet(std::size_t d, const HPReal& value = 0)
        : v(value), g(d, HPReal(0)), h(d, std::vector<HPReal>(d, HPReal(0)))
    {
    }
    static Jet variable(std::size_t d, std::size_t i, const HPReal& value)
    {
        Jet j(d, value);
        j.g[i] = 1;
        return j;
    }
    std::size_t dim() const { return g.size(); }
};

Jet operator+(Jet a, const Jet& b)
{
    a.v += b.v;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        a.g[i] += b.g[i];
        for (std::size_t k = 0; k < a.dim(); ++k)
            a.h[i][k] += b.h[i][k];
    }
    return a;
}

Jet operator*(const HPReal& s, Jet a)
{
    a.v *= s;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        a.g[i] *= s;
        for (std::size_t k = 0; k < a.dim(); ++k)
            a.h[i][k] *= s;
    }
    return a;
}

Jet operator-(const Jet& a, const Jet& b) { return a + HPReal(-1) * b; }

Jet operator-(const HPReal& c, const Jet& a)
{
    Jet out = HPReal(-1) * a;
    out.v += c;
    return out;
}

Jet operator*(const Jet& a, const Jet& b)
{
    Jet out(a.dim(), a.v * b.v);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.g[i] = a.g[i] * b.v + a.v * b.g[i];
        for (std::size_t k = 0; k < a.dim(); ++k)
            out.h[i][k] = a.h[i][k] * b.v + a.g[i] * b.g[k] + a.g[k] * b.g[i] + a.v * b.h[i][k];
    }
    return out;
}

Jet log(const Jet& a)
{
    Jet out(a.dim(), boost::multiprecision::log(a.v));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.g[i] = a.g[i] / a.v;
        for (std::size_t k = 0; k < a.dim(); ++k)
            out.h[i][k] = a.h[i][k] / a.v - a.g[i] * a.g[k] / (a.v * a.v);
    }
    return out;
}

std::size_t family_dim(Family f) { return family_weight(f); }

/// log of the ratio function, as a jet.
Jet log_ratio(Family family, const std::vector<HPReal>& p)
{
    const std::size_t d = p.size();
    std::vector<Jet> v;
    for (std::size_t i = 0; i < d; ++i)
        v.push_back(Jet::variable(d, i, p[i]));
    const HPReal one(1);
    Jet acc(d);
    for (const auto& vi : v)
        acc = acc + log(vi) + log(one - vi);
    const Jet u = one - v[0] * v[1];
    switch (family) {
    case Family::zeta2:
        acc = acc - log(u);
        break;
    case Family::zeta3:
        acc = acc - log(one - u * v[2]);
        break;
    case Family::zeta4:
        acc = acc + HPReal(2) * log(u) - log(one - u * v[2]) - log(one - u * v[3]);
        break;
    }
    return acc;
}

HPReal ratio_hp(Family family, const std::vector<HPReal>& p)
{
    HPReal r = 1;
    for (const auto& x : p)
        r *= x * (1 - x);
    const HPReal u = 1 - p[0] * p[1];
    switch (family) {
    case Family::zeta2:
        return r / u;
    case Family::zeta3:
        return r / (1 - u * p[2]);
    case Family::zeta4:
        return r * u * u / ((1 - u * p[2]) * (1 - u * p[3]));
    }
    return 0;
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
std::vector<HPReal> solve(std::vector<std::vector<HPReal>> A, std::vector<HPReal> b)
{
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[piv][c]))
                piv = r;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        if (A[c][c] == 0)
            throw NoInteriorMaximum("singular Hessian during ascent");
        for (std::size_t r = c + 1; r < n; ++r) {
            const HPReal f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k)
                A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<HPReal> x(n, HPReal(0));
    for (std::size_t r = n; r-- > 0;) {
        HPReal s = b[r];
        for (std::size_t k = r + 1; k < n; ++k)
            s -= A[r][k] * x[k];
        x[r] = s / A[r][r];
    }
    return x;
}

bool negative_definite(std::vector<std::vector<HPReal>> H)
{
    // Cholesky on -H
    const std::size_t n = H.size();
    for (auto& row : H)
        for (auto& e : row)
            e = -e;
    for (std::size_t j = 0; j < n; ++j) {
        HPReal s = H[j][j];
        for (std::size_t k = 0; k < j; ++k)
            s -= H[j][k] * H[j][k];
        if (s <= 0)
            return false;
        H[j][j] = sqrt(s);
        for (std::size_t i = j + 1; i < n; ++i) {
            HPReal t = H[i][j];
            for (std::size_t k = 0; k < j; ++k)
                t -= H[i][k] * H[j][k];
            H[i][j] = t / H[j][j];
        }
    }
    return true;
}

bool inside(const std::vector<HPReal>& p)
{
    return std::all_of(p.begin(), p.end(), [](const HPReal& x) { return x > 0 && x < 1; });
}

HPReal norm(const std::vector<HPReal>& v)
{
    HPReal s = 0;
    for (const auto& x : v)
        s += x * x;
    return sqrt(s);
}

std::string exponent_text(Family f)
{
    switch (f) {
    case Family::zeta2:
        return "2.01";
    case Family::zeta3:
        return "3.01";
    case Family::zeta4:
        return "4.01";
    }
    return "0";
}

}  // namespace

double ratio_function(Family family, const std::vector<double>& p)
{
    double r = 1;
    for (double x : p)
        r *= x * (1 - x);
    const double u = 1 - p[0] * p[1];
    switch (family) {
    case Family::zeta2:
        return r / u;
    case Family::zeta3:
        return r / (1 - u * p[2]);
    case Family::zeta4:
        return r * u * u / ((1 - u * p[2]) * (1 - u * p[3]));
    }
    return 0;
}

HPReal closed_form_sup(Family family, unsigned digits)
{
    PrecisionScope scope(digits + guard_digits);
    switch (family) {
    case Family::zeta2:
        return pow((sqrt(HPReal(5)) - 1) / 2, 5);
    case Family::zeta3:
        return pow(sqrt(HPReal(2)) - 1, 4);
    case Family::zeta4: {
        const HPReal r17 = sqrt(HPReal(17));
        return pow(r17 - 7, 4) * pow(r17 - 3, 2) / (256 * pow(1 + r17, 2));
    }
    }
    return 0;
}

BoundCertificate sup_ratio(Family family, unsigned digits, unsigned grid)
{
    const std::size_t d = family_dim(family);
    BoundCertificate cert;
    cert.family = family;
    cert.grid_resolution = grid;
    switch (family) {
    case Family::zeta2:
        cert.closed_form_description = "((sqrt(5)-1)/2)^5";
        break;
    case Family::zeta3:
        cert.closed_form_description = "(sqrt(2)-1)^4";
        break;
    case Family::zeta4:
        cert.closed_form_description = "(sqrt(17)-7)^4 (sqrt(17)-3)^2 / (256 (1+sqrt(17))^2)";
        break;
    }

    // Grid scan at cell centres; zeta4 scans (x, y, z) with w = z.
    const std::size_t scan_dim = family == Family::zeta4 ? 3 : d;
    std::vector<double> best(d, 0.5), p(d);
    double best_value = -1;
    std::vector<unsigned> idx(scan_dim, 0);
    for (;;) {
        for (std::size_t i = 0; i < scan_dim; ++i)
            p[i] = (idx[i] + 0.5) / grid;
        if (family == Family::zeta4)
            p[3] = p[2];
        const double value = ratio_function(family, p);
        if (value > best_value) {
            best_value = value;
            best = p;
        }
        std::size_t i = 0;
        while (i < scan_dim && ++idx[i] == grid)
            idx[i++] = 0;
        if (i == scan_dim)
            break;
    }
    cert.grid_max = best_value;

    const unsigned wp = digits + guard_digits;
    PrecisionScope scope(wp);
    std::vector<HPReal> x(best.begin(), best.end());
    const HPReal tiny = pow(HPReal(10), -static_cast<int>(digits));
    for (int iter = 0; iter < 200; ++iter) {
        const Jet f = log_ratio(family, x);
        if (norm(f.g) < tiny)
            break;
        std::vector<HPReal> step;
        if (negative_definite(f.h)) {
            std::vector<HPReal> rhs(d);
            for (std::size_t i = 0; i < d; ++i)
                rhs[i] = -f.g[i];
            step = solve(f.h, rhs);
        } else {
            step = f.g;
            const HPReal scale = HPReal(1) / (10 * (1 + norm(f.g)));
            for (auto& s : step)
                s *= scale;
        }
        HPReal alpha = 1;
        bool moved = false;
        for (int back = 0; back < 80; ++back) {
            std::vector<HPReal> trial(d);
            for (std::size_t i = 0; i < d; ++i)
                trial[i] = x[i] + alpha * step[i];
            if (inside(trial) && log_ratio(family, trial).v >= f.v) {
                x = std::move(trial);
                moved = true;
                break;
            }
            alpha /= 2;
        }
        if (!moved)
            break;
        for (const auto& xi : x)
            if (xi < HPReal(1e-12) || xi > 1 - HPReal(1e-12))
                throw NoInteriorMaximum("ascent left the open unit cube");
    }
    if (!inside(x))
        throw NoInteriorMaximum("ascent left the open unit cube");

    cert.argmax = x;
    cert.numeric_sup = ratio_hp(family, x);
    const Jet f = log_ratio(family, x);
    std::vector<HPReal> grad(d);
    for (std::size_t i = 0; i < d; ++i)
        grad[i] = cert.numeric_sup * f.g[i];
    cert.gradient_norm = norm(grad);

    // Finite differences of the ratio against analytic partials, at the grid
    // seed (a non-stationary point) and at the maximum.
    auto fd_check = [&](const std::vector<HPReal>& at) {
        const HPReal value = ratio_hp(family, at);
        const Jet j = log_ratio(family, at);
        const HPReal step = pow(HPReal(10), -static_cast<int>(wp / 3));
        double worst = 0;
        for (std::size_t i = 0; i < d; ++i) {
            auto plus = at, minus = at;
            plus[i] += step;
            minus[i] -= step;
            const HPReal fd = (ratio_hp(family, plus) - ratio_hp(family, minus)) / (2 * step);
            worst = std::max(worst, static_cast<double>(abs(fd - value * j.g[i])));
        }
        return worst;
    };
    cert.fd_discrepancy = std::max(fd_check(std::vector<HPReal>(best.begin(), best.end())), fd_check(x));

    cert.closed_form_value = closed_form_sup(family, digits);
    const HPReal tol = pow(HPReal(10), -static_cast<int>(digits - 10));
    cert.sup_matches = abs(cert.closed_form_value - cert.numeric_sup) < tol;
    cert.decay_exponent = exponent_text(family);
    return cert;
}

BoundCertificate decay_certificate(Family family, unsigned digits)
{
    BoundCertificate cert = sup_ratio(family, digits);
    PrecisionScope scope(digits + guard_digits);
    const HPReal exponent(cert.decay_exponent);
    cert.decay_product = exp(exponent) * cert.closed_form_value;
    cert.alternative_product = exp(2 * exponent) * cert.closed_form_value;
    cert.satisfied = cert.sup_matches && cert.decay_product < 1;
    return cert;
}

LcmGrowthReport lcm_growth(unsigned n_max, unsigned exact_upto, unsigned digits)
{
    if (n_max < 1 || exact_upto > n_max)
        throw std::invalid_argument("lcm_growth needs 1 <= exact_upto <= n_max");
    LcmGrowthReport report;
    report.n_max = n_max;
    report.exact_upto = exact_upto;

    // prime_of[n] = p when n = p^k, else 0
    std::vector<unsigned> prime_of(n_max + 1, 0);
    std::vector<bool> composite(n_max + 1, false);
    for (unsigned p = 2; p <= n_max; ++p) {
        if (composite[p])
            continue;
        for (unsigned long long q = 1ull * p * p; q <= n_max; q += p)
            composite[q] = true;
        for (unsigned long long q = p; q <= n_max; q *= p)
            prime_of[q] = p;
    }

    PrecisionScope scope(digits + guard_digits);
    auto sampled = [&](unsigned n) {
        if (n <= 10 || n == n_max)
            return true;
        unsigned m = n;
        while (m % 10 == 0)
            m /= 10;
        return m == 1 || m == 2 || m == 5;
    };

    HPReal psi = 0;
    std::vector<double> ratio(n_max + 1, 0.0);
    BigInt lcm_iter(1), lcm_sieve(1);
    report.exact_match = true;
    report.max_log_discrepancy = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (const unsigned p = prime_of[n]) {
            psi += log(HPReal(p));
            if (n <= exact_upto)
                lcm_sieve *= p;
        }
        ratio[n] = static_cast<double>(psi) / n;
        if (n <= exact_upto) {
            mpz_lcm_ui(lcm_iter.get_mpz_t(), lcm_iter.get_mpz_t(), n);
            if (lcm_iter != lcm_sieve) {
                report.exact_match = false;
                report.exact_mismatches.push_back(n);
            }
            const HPReal diff = abs(log(to_hp(lcm_iter)) - psi);
            if (diff > report.max_log_discrepancy)
                report.max_log_discrepancy = diff;
        }
        if (sampled(n))
            report.rows.push_back(LcmGrowthRow{n, psi, ratio[n]});
    }

    for (unsigned n = std::min(10u, n_max); n <= n_max; ++n) {
        if (ratio[n] > report.max_ratio) {
            report.max_ratio = ratio[n];
            report.max_ratio_at = n;
        }
    }
    unsigned last_above = 0;
    for (unsigned n = 1; n <= n_max; ++n)
        if (ratio[n] > 1.0025)
            last_above = n;
    if (last_above < n_max)
        report.threshold_10025 = last_above + 1;
    return report;
}

std::vector<DenominatorRow> denominator_report(Family family, const std::vector<ComputedForm>& forms)
{
    const unsigned k = family_weight(family);
    std::vector<DenominatorRow> rows;
    for (const auto& cf : forms) {
        if (cf.spec.family != family)
            throw std::invalid_argument("denominator_report: form of another family");
        DenominatorRow row;
        row.n = cf.spec.n;
        row.power = k;
        row.den_rational = cf.form.rational_part().get_den();
        row.den_zeta = cf.form.zeta_coeff(k).get_den();
        BigInt den;
        mpz_lcm(den.get_mpz_t(), row.den_rational.get_mpz_t(), row.den_zeta.get_mpz_t());
        // a form with other zeta components has no denominator claim to test;
        // fold their denominators in so the verdict stays factual
        for (const auto& [a, q] : cf.form.zeta_coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), BigInt(q.get_den()).get_mpz_t());
        row.lcm_n_pow = ipow(row.n == 0 ? BigInt(1) : lcm_upto(row.n), k);
        row.lcm_2n_pow = ipow(row.n == 0 ? BigInt(1) : lcm_upto(2 * row.n), k);
        row.divides_lcm_n = mpz_divisible_p(row.lcm_n_pow.get_mpz_t(), den.get_mpz_t()) != 0;
        row.divides_lcm_2n = mpz_divisible_p(row.lcm_2n_pow.get_mpz_t(), den.get_mpz_t()) != 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<DecayRow> decay_table(Family family, const std::vector<ComputedForm>& forms, unsigned digits)
{
    if (digits < 30)
        throw std::invalid_argument("decay_table needs digits >= 30");
    PrecisionScope scope(digits + guard_digits);
    const HPReal base = abs(eval_form(compute_form({family, 0}).form, digits));
    const HPReal C = closed_form_sup(family, digits);
    std::vector<DecayRow> rows;
    for (const auto& cf : forms) {
        if (cf.spec.family != family)
            throw std::invalid_argument("decay_table: form of another family");
        DecayRow row;
        row.n = cf.spec.n;
        const HPReal value = eval_form(cf.form, digits);
        row.value = abs(value);
        BigInt T(cf.form.rational_part().get_den());
        for (const auto& [a, q] : cf.form.zeta_coeffs())
            mpz_lcm(T.get_mpz_t(), T.get_mpz_t(), BigInt(q.get_den()).get_mpz_t());
        row.T = T;
        row.scaled = to_hp(T) * row.value;
        row.bound = base * pow(C, cf.spec.n);
        row.positive = value > 0;
        row.within_bound = row.value <= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace zetaforge
