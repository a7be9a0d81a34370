#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binomid/catalog.hpp"
#include "binomid/dsl.hpp"
#include "binomid/errors.hpp"
#include "binomid/integrals.hpp"
#include "binomid/quadrature.hpp"
#include "binomid/report.hpp"
#include "binomid/transform.hpp"

namespace py = pybind11;
using namespace binomid;

namespace {

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h))
        return Rational(py::cast<std::string>(py::str(h)));
    if (py::isinstance<py::str>(h)) {
        Rational q(py::cast<std::string>(h));
        q.canonicalize();
        return q;
    }
    throw ConfigError("parameter values must be int or 'p/q' strings");
}

ParamBinding to_binding(const py::dict& d) {
    ParamBinding b;
    for (auto item : d)
        b[py::cast<std::string>(item.first)] = to_rational(item.second);
    return b;
}

py::dict result_dict(const VerificationResult& r) {
    py::dict out;
    out["id"] = r.id;
    out["binding"] = binding_str(r.binding);
    out["status"] = status_name(r.status);
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["relerr"] = r.relerr;
    out["note"] = r.note;
    return out;
}

const Identity& resolve(const std::string& id_or_text) {
    return lookup(id_or_text).identity;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification of binomial-sum identities";

    // translators are tried most-recently-registered first, so the base
    // class goes in before its refinements
    py::register_exception<Error>(m, "EngineError");
    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<BindError>(m, "BindError");

    m.def("catalog_ids", [] {
        std::vector<std::string> out;
        for (const auto& e : catalog_entries()) out.push_back(e.identity.id);
        return out;
    });

    m.def("catalog_entry", [](const std::string& id) {
        const CatalogEntry& e = lookup(id);
        py::dict out;
        out["id"] = e.identity.id;
        out["text"] = format_identity(e.identity);
        out["location"] = e.location;
        out["quote"] = e.quote;
        out["tags"] = e.tags;
        py::list params;
        for (const auto& p : e.identity.params)
            params.append(py::make_tuple(p.name, param_kind_name(p.kind)));
        out["params"] = params;
        return out;
    });

    m.def(
        "verify",
        [](const std::string& id, const py::dict& binding, bool numeric,
           int digits) {
            VerificationResult r = verify_instance(
                resolve(id), to_binding(binding), VerifyMode{numeric, digits});
            return result_dict(r);
        },
        py::arg("id"), py::arg("binding"), py::arg("numeric") = false,
        py::arg("digits") = 30);

    m.def(
        "sweep_catalog",
        [](const std::string& id, bool numeric, int digits, int jobs) {
            const CatalogEntry& e = lookup(id);
            auto results = sweep(e.identity, e.default_ranges,
                                 VerifyMode{numeric, digits}, jobs);
            Summary s = summarize(results);
            py::dict out;
            out["total"] = s.total;
            out["exact"] = s.exact;
            out["numeric"] = s.numeric;
            out["mismatch"] = s.mismatch;
            out["skipped"] = s.skipped;
            return out;
        },
        py::arg("id"), py::arg("numeric") = false, py::arg("digits") = 30,
        py::arg("jobs") = 1);

    m.def("eval_lhs", [](const std::string& id, const py::dict& binding) {
        return eval_exact_value(resolve(id).lhs, to_binding(binding)).str();
    });

    m.def("parse_canonical", [](const std::string& text) {
        return format_identity(parse_identity(text));
    });

    m.def(
        "verify_text",
        [](const std::string& text, const py::dict& binding, bool numeric,
           int digits) {
            Identity ident = parse_identity(text);
            VerificationResult r = verify_instance(
                ident, to_binding(binding), VerifyMode{numeric, digits});
            return result_dict(r);
        },
        py::arg("text"), py::arg("binding"), py::arg("numeric") = false,
        py::arg("digits") = 30);

    m.def(
        "transform",
        [](const std::string& input, const std::string& op,
           const py::object& u, const py::object& v) {
            GridArg ua = u.is_none() ? GridArg{} : GridArg{to_rational(u)};
            GridArg va = v.is_none() ? GridArg{} : GridArg{to_rational(v)};
            std::vector<std::string> out;
            bool symmetric = input == "waring" || input == "waring-dual";
            if (symmetric) {
                const auto& sym = symmetric_form(input);
                if (op == "xy")
                    out.push_back(format_identity(t_xy_pair(sym, va)));
                else if (op == "sin-sub")
                    out.push_back(format_identity(t_sym_sin(sym, va)));
                else
                    throw ConfigError("op '" + op +
                                      "' needs a standard-form input");
            } else {
                const auto& sf = standard_form(input);
                if (op == "beta01") {
                    out.push_back(format_identity(t_beta01(sf, ua, va)));
                } else if (op == "xy") {
                    auto pr = t_xy_pair(sf, ua, va);
                    out.push_back(format_identity(pr.first));
                    out.push_back(format_identity(pr.second));
                } else if (op == "y-minus1") {
                    out.push_back(format_identity(t_y_minus1(sf, ua, va)));
                } else if (op == "sin-sub") {
                    out.push_back(format_identity(t_sin_sub(sf, ua, va)));
                } else if (op == "cos-parity") {
                    out.push_back(format_identity(
                        t_cos_parity(sf, va, ParitySide::ForwardOnQ)));
                } else if (op == "power-form") {
                    auto pr = t_power_form(sf, va);
                    out.push_back(format_identity(pr.first));
                    out.push_back(format_identity(pr.second));
                } else {
                    throw ConfigError("unknown op '" + op + "'");
                }
            }
            return out;
        },
        py::arg("input"), py::arg("op"), py::arg("u") = py::none(),
        py::arg("v") = py::none());

    m.def(
        "quad_relerr",
        [](const std::string& kind, const std::string& u,
           const std::string& v, int digits) {
            IntegralKind ik;
            if (kind == "K")
                ik = IntegralKind::K_quarter;
            else if (kind == "I")
                ik = IntegralKind::I_half_angle;
            else if (kind == "J")
                ik = IntegralKind::J_full;
            else if (kind == "beta01")
                ik = IntegralKind::Beta01;
            else
                throw ConfigError("unknown kind '" + kind + "'");
            Rational uq(u), vq(v);
            uq.canonicalize();
            vq.canonicalize();
            QuadratureSpec spec{ik, uq, vq, digits};
            QuadResult got = integrate(spec);
            QuadResult want = closed_form_numeric(spec);
            mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
            BigFloat scale = got.re.abs() + got.im.abs() + want.re.abs() +
                             want.im.abs() + BigFloat::from_long(1, prec);
            BigFloat err =
                ((got.re - want.re).abs() + (got.im - want.im).abs()) / scale;
            return err.to_double();
        },
        py::arg("kind"), py::arg("u"), py::arg("v"), py::arg("digits") = 30);

    m.attr("__version__") = kToolVersion;
}
