#include "zetaforge/analysis.hpp"
#include "zetaforge/harmonic.hpp"
#include "zetaforge/numeric.hpp"
#include "zetaforge/records.hpp"
#include "zetaforge/reducer.hpp"
#include "zetaforge/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zetaforge;

namespace {

py::object to_py(const json& j)
{
    switch (j.type()) {
    case json::value_t::object: {
        py::dict d;
        for (const auto& [k, v] : j.items())
            d[py::str(k)] = to_py(v);
        return std::move(d);
    }
    case json::value_t::array: {
        py::list l;
        for (const auto& v : j)
            l.append(to_py(v));
        return std::move(l);
    }
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    default:
        return py::none();
    }
}

py::dict form_dict(FamilySpec spec, const ZetaForm& form)
{
    py::dict d = to_py(form_record(spec, form));
    d["text"] = form.to_string();
    return d;
}

ComputedForm computed(const std::string& family, unsigned n)
{
    const Family f = parse_family(family);
    py::gil_scoped_release release;
    return compute_form({f, n});
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact reduction of zeta-value integrals to linear forms.";
    m.attr("__version__") = tool_version();

    py::register_exception<NonCancellingDivergence>(m, "NonCancellingDivergence", PyExc_ArithmeticError);
    py::register_exception<DivergentForm>(m, "DivergentForm", PyExc_ArithmeticError);
    py::register_exception<NoInteriorMaximum>(m, "NoInteriorMaximum", PyExc_RuntimeError);

    m.def(
        "compute_form",
        [](const std::string& family, unsigned n) {
            const ComputedForm cf = computed(family, n);
            py::dict d = form_dict(cf.spec, cf.form);
            d["nonzero_zeta"] = cf.report.nonzero_zeta;
            d["target_only"] = cf.report.target_only;
            return d;
        },
        py::arg("family"), py::arg("n"), "Exact linear form of the family integral at index n.");

    m.def(
        "evaluate",
        [](const std::string& family, unsigned n, unsigned digits) {
            const ComputedForm cf = computed(family, n);
            return to_decimal(eval_form(cf.form, digits), digits);
        },
        py::arg("family"), py::arg("n"), py::arg("digits") = 50);

    m.def(
        "monomial_form",
        [](unsigned r, unsigned s, unsigned t, unsigned k) {
            if (t < 1 || k > 2)
                throw py::value_error("need t >= 1 and k <= 2");
            const ZetaForm f = monomial_form(r, s, t, k);
            return form_dict({Family::zeta4, 0}, f);
        },
        py::arg("r"), py::arg("s"), py::arg("t"), py::arg("k"),
        "Reduced form of the double integral of x^r y^s Log^k(xy) / (1-xy)^t. "
        "The family and n keys of the result are placeholders.");

    m.def(
        "reduce_terms",
        [](const std::vector<std::tuple<unsigned, unsigned, std::string>>& terms) {
            std::vector<PFTerm> pf;
            for (const auto& [a, j, c] : terms)
                pf.push_back({a, j, parse_rational(c)});
            return form_dict({Family::zeta4, 0}, reduce_terms(pf));
        },
        py::arg("terms"), "Sum over m >= 1 of c/(m+j)^a for (a, j, c) triples, c a rational string.");

    m.def(
        "inner_profile",
        [](unsigned n) {
            const InnerProfile p = inner_profile(n);
            auto coeffs = [](const UPoly& q) {
                std::vector<std::string> out;
                for (const auto& c : q.coeffs())
                    out.push_back(to_string(c));
                return out;
            };
            return py::make_tuple(coeffs(p.P), coeffs(p.Q));
        },
        py::arg("n"), "Coefficients (constant term first) of P and Q in J_n(u) = (P + Q L) / u^(2n+1).");

    m.def("zeta_value", [](unsigned a, unsigned digits) { return to_decimal(zeta_value(a, digits), digits); },
          py::arg("a"), py::arg("digits") = 50);
    m.def("harmonic", [](unsigned j, unsigned a) { return to_string(harmonic(j, a)); }, py::arg("j"), py::arg("a"));
    m.def("lcm_upto", [](unsigned n) { return lcm_upto(n).get_str(); }, py::arg("n"));

    m.def(
        "decay_certificate",
        [](const std::string& family, unsigned digits) {
            const Family f = parse_family(family);
            BoundCertificate c;
            {
                py::gil_scoped_release release;
                c = decay_certificate(f, digits);
            }
            py::dict d;
            d["family"] = family;
            d["closed_form"] = c.closed_form_description;
            d["closed_form_value"] = to_decimal(c.closed_form_value, digits);
            d["numeric_sup"] = to_decimal(c.numeric_sup, digits);
            d["decay_exponent"] = c.decay_exponent;
            d["decay_product"] = static_cast<double>(c.decay_product);
            d["alternative_product"] = static_cast<double>(c.alternative_product);
            d["sup_matches"] = c.sup_matches;
            d["satisfied"] = c.satisfied;
            return d;
        },
        py::arg("family"), py::arg("digits") = 40);

    m.def(
        "lcm_growth",
        [](unsigned n_max, unsigned exact_upto) {
            LcmGrowthReport r;
            {
                py::gil_scoped_release release;
                r = lcm_growth(n_max, exact_upto);
            }
            py::dict d;
            d["n_max"] = r.n_max;
            d["psi_over_n"] = r.rows.back().ratio;
            d["exact_match"] = r.exact_match;
            d["max_ratio"] = r.max_ratio;
            d["max_ratio_at"] = r.max_ratio_at;
            d["threshold_10025"] = r.threshold_10025 ? py::object(py::int_(*r.threshold_10025)) : py::none();
            return d;
        },
        py::arg("n_max"), py::arg("exact_upto"));

    m.def(
        "quad_pieces",
        [](const std::string& family, unsigned n, unsigned digits) {
            const Family f = parse_family(family);
            py::list out;
            for (const auto& piece : assemble_pieces({f, n})) {
                QuadratureResult q;
                ZetaForm exact;
                {
                    py::gil_scoped_release release;
                    q = quad_piece(piece, digits);
                    exact = integrate_piece(piece);
                }
                py::dict d;
                d["t"] = piece.t;
                d["k"] = piece.k;
                d["exact"] = to_decimal(eval_form(exact, digits), digits);
                d["quadrature"] = to_decimal(q.value, digits);
                d["error_estimate"] = static_cast<double>(q.error_estimate);
                out.append(d);
            }
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("digits") = 20,
        "Each assembled piece integrated by quadrature and exactly.");

    m.def(
        "mc_integral",
        [](const std::string& family, unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
            const Family f = parse_family(family);
            McEstimate e;
            {
                py::gil_scoped_release release;
                e = mc_integral({f, n}, samples, seed, threads);
            }
            py::dict d;
            d["mean"] = e.mean;
            d["std_error"] = e.std_error;
            d["samples"] = e.samples;
            d["seed"] = e.seed;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 1);
}
