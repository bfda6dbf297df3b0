#include "zetaforge/reducer.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetaforge {

namespace {

/// p(1 - u) as a polynomial in u.
UPoly reflect(const UPoly& p)
{
    std::vector<BigRational> c = p.taylor_shift(BigRational(1)).coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return UPoly(std::move(c));
}

unsigned valuation(const UPoly& p)
{
    unsigned v = 0;
    while (static_cast<int>(v) <= p.degree() && p[v] == 0)
        ++v;
    return v;
}

UPoly drop_low(const UPoly& p, unsigned v)
{
    const auto& c = p.coeffs();
    return UPoly(std::vector<BigRational>(c.begin() + std::min<std::size_t>(v, c.size()), c.end()));
}

/// (x(1-x)y(1-y))^n in x, y
PolyQ beukers_kernel(unsigned n)
{
    const auto& vars = xy_variables();
    PolyQ one = PolyQ::constant(vars, BigRational(1));
    PolyQ x = PolyQ::variable(vars, "x");
    PolyQ y = PolyQ::variable(vars, "y");
    return poly_pow_expand(x * (one - x) * y * (one - y), n);
}

/// A(1 - xy) for a polynomial A(u)
PolyQ in_xy(const UPoly& a_of_u)
{
    UPoly in_q = reflect(a_of_u);
    PolyQ out(xy_variables());
    for (int i = 0; i <= in_q.degree(); ++i)
        out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(i)}, in_q[static_cast<std::size_t>(i)]);
    return out;
}

/// Emits kernel * A(u) Log^k / u^t after cancelling common u powers.
void emit_piece(std::vector<IntegrandPiece>& out, const PolyQ& kernel, const UPoly& a_of_u, unsigned t, unsigned k)
{
    if (a_of_u.is_zero())
        return;
    unsigned cancel = std::min(valuation(a_of_u), t - 1);
    out.push_back(IntegrandPiece{kernel * in_xy(drop_low(a_of_u, cancel)), t - cancel, k});
}

}  // namespace

InnerProfile inner_profile(unsigned n)
{
    // With v = 1 - uz and w = 1 - u:
    //   J_n(u) = u^-(2n+1) int_w^1 ((1-v)(v-w))^n v^-(n+1) dv.
    // Expand the integrand in powers of v; coefficient c_i(w) of v^i.
    const std::vector<std::string> vars{"v", "w"};
    PolyQ one = PolyQ::constant(vars, BigRational(1));
    PolyQ v = PolyQ::variable(vars, "v");
    PolyQ w = PolyQ::variable(vars, "w");
    PolyQ expanded = poly_pow_expand((one - v) * (v - w), n);

    std::vector<std::vector<BigRational>> coeff(n * 2 + 1, std::vector<BigRational>(n * 2 + 1));
    for (const auto& [e, c] : expanded.terms())
        coeff[e[0]][e[1]] = c;

    UPoly p_of_w;
    UPoly q_of_w;
    for (unsigned i = 0; i <= 2 * n; ++i) {
        UPoly ci(coeff[i]);
        if (ci.is_zero())
            continue;
        if (i == n) {
            // int_w^1 v^-1 dv = -Log(w) = L
            q_of_w = ci;
            continue;
        }
        // int_w^1 v^(i-n-1) dv = (1 - w^(i-n)) / (i-n)
        const int d = static_cast<int>(i) - static_cast<int>(n);
        UPoly shifted;
        if (d > 0) {
            std::vector<BigRational> sc(static_cast<std::size_t>(d), BigRational(0));
            sc.insert(sc.end(), ci.coeffs().begin(), ci.coeffs().end());
            shifted = UPoly(std::move(sc));
        } else {
            // c_i carries w^(n-i), so c_i * w^(i-n) stays polynomial
            const unsigned drop = static_cast<unsigned>(-d);
            if (valuation(ci) < drop)
                throw std::logic_error("inner profile: coefficient not divisible by w power");
            shifted = drop_low(ci, drop);
        }
        p_of_w += (ci - shifted) * (BigRational(1) / BigRational(d));
    }
    return InnerProfile{n, reflect(p_of_w), reflect(q_of_w)};
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::zeta2:
        return "zeta2";
    case Family::zeta3:
        return "zeta3";
    case Family::zeta4:
        return "zeta4";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    if (name == "zeta2")
        return Family::zeta2;
    if (name == "zeta3")
        return Family::zeta3;
    if (name == "zeta4")
        return Family::zeta4;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected zeta2, zeta3 or zeta4)");
}

unsigned family_weight(Family f)
{
    switch (f) {
    case Family::zeta2:
        return 2;
    case Family::zeta3:
        return 3;
    case Family::zeta4:
        return 4;
    }
    return 0;
}

std::vector<IntegrandPiece> assemble_pieces(FamilySpec spec)
{
    const unsigned n = spec.n;
    const PolyQ kernel = beukers_kernel(n);
    std::vector<IntegrandPiece> out;

    switch (spec.family) {
    case Family::zeta2:
        out.push_back(IntegrandPiece{kernel, n + 1, 0});
        break;
    case Family::zeta3: {
        // (P + Q L) / u^(2n+1), L = -Log(xy)
        const InnerProfile prof = inner_profile(n);
        emit_piece(out, kernel, prof.P, 2 * n + 1, 0);
        emit_piece(out, kernel, prof.Q * BigRational(-1), 2 * n + 1, 1);
        break;
    }
    case Family::zeta4: {
        // u^(2n+1) J_n(u)^2 = (P + Q L)^2 / u^(2n+1)
        const InnerProfile prof = inner_profile(n);
        emit_piece(out, kernel, prof.P * prof.P, 2 * n + 1, 0);
        emit_piece(out, kernel, prof.P * prof.Q * BigRational(-2), 2 * n + 1, 1);
        emit_piece(out, kernel, prof.Q * prof.Q, 2 * n + 1, 2);
        break;
    }
    }
    return out;
}

StructuralReport structural_report(Family family, const ZetaForm& form)
{
    StructuralReport r;
    r.nonzero_zeta = form.support();
    const unsigned target = family_weight(family);
    r.target_only = std::all_of(r.nonzero_zeta.begin(), r.nonzero_zeta.end(), [&](unsigned a) { return a == target; });
    return r;
}

ComputedForm compute_form(FamilySpec spec)
{
    ZetaForm total;
    for (const auto& piece : assemble_pieces(spec))
        total += integrate_piece(piece);
    return ComputedForm{spec, total, structural_report(spec.family, total)};
}

}  // namespace zetaforge
