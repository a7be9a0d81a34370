#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "binomid/catalog.hpp"
#include "binomid/dsl.hpp"
#include "binomid/errors.hpp"
#include "binomid/integrals.hpp"
#include "binomid/quadrature.hpp"
#include "binomid/report.hpp"
#include "binomid/transform.hpp"

using namespace binomid;

namespace {

// ------------------------------------------------------------- arg parsing

Rational parse_rational_arg(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw ConfigError("not a rational: '" + s + "'");
    }
}

// "A..B" inclusive integer range
std::vector<Rational> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw ConfigError("range must be A..B: '" + s + "'");
    Rational a = parse_rational_arg(s.substr(0, dots));
    Rational b = parse_rational_arg(s.substr(dots + 2));
    if (!is_integer(a) || !is_integer(b) || a > b)
        throw ConfigError("bad range: '" + s + "'");
    std::vector<Rational> out;
    for (Rational q = a; q <= b; q += 1) out.push_back(q);
    return out;
}

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        if (j > i) out.push_back(parse_rational_arg(s.substr(i, j - i)));
        i = j + 1;
    }
    if (out.empty()) throw ConfigError("empty list: '" + s + "'");
    return out;
}

// ------------------------------------------------------------ verify runs

struct VerifyOptions {
    std::vector<std::string> ids;
    std::string n_range, m_range, v_grid, x_samples;
    std::string mode = "exact";
    int digits = 30;
    int jobs = 1;
    std::string report_path;
    std::string report_format = "json";
    bool deterministic = false;
};

void add_verify_flags(CLI::App* cmd, VerifyOptions& o, bool with_ids) {
    if (with_ids)
        cmd->add_option("--ids", o.ids, "identity ids to verify (default all)");
    cmd->add_option("--n", o.n_range, "range A..B for parameter n");
    cmd->add_option("--m", o.m_range, "range A..B for parameter m");
    cmd->add_option("--v-grid", o.v_grid,
                    "comma-separated values for grid parameters");
    cmd->add_option("--x-samples", o.x_samples,
                    "comma-separated values for free rational parameters");
    cmd->add_option("--mode", o.mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    cmd->add_option("--digits", o.digits, "working precision in digits");
    cmd->add_option("--jobs", o.jobs, "parallel sweep workers");
    cmd->add_option("--report", o.report_path, "write a report to this path");
    cmd->add_option("--format", o.report_format, "report format")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_flag("--deterministic", o.deterministic,
                  "omit the timestamp from report metadata");
}

void validate_common(const VerifyOptions& o) {
    if (o.digits < 10 || o.digits > 100)
        throw ConfigError("digits must be in [10, 100]");
    if (o.jobs < 1) throw ConfigError("jobs must be >= 1");
}

SweepRanges default_ranges_for(const Identity& ident) {
    SweepRanges r;
    std::size_t naturals = 0;
    for (const auto& p : ident.params)
        if (p.kind == ParamKind::Natural) ++naturals;
    for (const auto& p : ident.params) {
        switch (p.kind) {
            case ParamKind::Natural:
                r[p.name] = (ident.params.size() == 1 && naturals == 1)
                                ? default_n_range_single()
                                : default_n_range();
                break;
            case ParamKind::GridReal:
                r[p.name] = default_v_grid();
                break;
            case ParamKind::FreeRational:
                r[p.name] = default_xy_samples();
                break;
        }
    }
    return r;
}

void apply_overrides(SweepRanges& ranges, const Identity& ident,
                     const VerifyOptions& o) {
    for (const auto& p : ident.params) {
        if (p.kind == ParamKind::Natural) {
            if (p.name == "n" && !o.n_range.empty())
                ranges[p.name] = parse_range(o.n_range);
            if (p.name == "m" && !o.m_range.empty())
                ranges[p.name] = parse_range(o.m_range);
        } else if (p.kind == ParamKind::GridReal && !o.v_grid.empty()) {
            ranges[p.name] = parse_list(o.v_grid);
        } else if (p.kind == ParamKind::FreeRational && !o.x_samples.empty()) {
            ranges[p.name] = parse_list(o.x_samples);
        }
    }
}

nlohmann::json config_json(const std::string& command,
                           const VerifyOptions& o) {
    nlohmann::json c{{"command", command},
                     {"mode", o.mode},
                     {"digits", o.digits},
                     {"jobs", o.jobs}};
    if (!o.ids.empty()) c["ids"] = o.ids;
    if (!o.n_range.empty()) c["n"] = o.n_range;
    if (!o.m_range.empty()) c["m"] = o.m_range;
    if (!o.v_grid.empty()) c["v-grid"] = o.v_grid;
    if (!o.x_samples.empty()) c["x-samples"] = o.x_samples;
    return c;
}

int finish_run(const std::string& command, const VerifyOptions& o,
               const std::vector<VerificationResult>& results) {
    if (!o.report_path.empty()) {
        if (o.report_format == "json")
            write_text_file(
                o.report_path,
                report_json(config_json(command, o), results, o.deterministic)
                        .dump(2) +
                    "\n");
        else
            write_text_file(o.report_path, report_markdown(results));
    }
    Summary s = summarize(results);
    std::cerr << command << ": " << s.total << " instances, " << s.exact
              << " exact, " << s.numeric << " numeric, " << s.mismatch
              << " mismatch, " << s.skipped << " skipped\n";
    if (s.mismatch) {
        for (const auto& r : results)
            if (r.status == Status::Mismatch)
                std::cerr << "  mismatch: " << r.id << " ["
                          << binding_str(r.binding) << "] lhs=" << r.lhs
                          << " rhs=" << r.rhs << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const std::string& command,
               const std::vector<std::pair<Identity, SweepRanges>>& work,
               const VerifyOptions& o) {
    validate_common(o);
    VerifyMode mode{o.mode == "numeric", o.digits};
    std::vector<VerificationResult> results;
    for (const auto& [ident, ranges] : work) {
        auto part = sweep(ident, ranges, mode, o.jobs);
        results.insert(results.end(), part.begin(), part.end());
    }
    return finish_run(command, o, results);
}

// --------------------------------------------------------------- catalog

int cmd_catalog_list() {
    for (const auto& e : catalog_entries()) {
        std::cout << e.identity.id << "  (";
        for (std::size_t i = 0; i < e.identity.params.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << e.identity.params[i].name << ": "
                      << param_kind_name(e.identity.params[i].kind);
        }
        std::cout << ")  " << e.location << "\n";
    }
    return 0;
}

int cmd_catalog_verify(const VerifyOptions& o) {
    std::vector<std::pair<Identity, SweepRanges>> work;
    if (o.ids.empty()) {
        for (const auto& e : catalog_entries()) {
            SweepRanges r = e.default_ranges;
            apply_overrides(r, e.identity, o);
            work.emplace_back(e.identity, std::move(r));
        }
    } else {
        for (const auto& id : o.ids) {
            const CatalogEntry& e = lookup(id);
            SweepRanges r = e.default_ranges;
            apply_overrides(r, e.identity, o);
            work.emplace_back(e.identity, std::move(r));
        }
    }
    return run_verify("catalog verify", work, o);
}

int cmd_dsl_verify(const std::string& path, const VerifyOptions& o) {
    std::vector<Identity> idents = parse_program(read_text_file(path));
    if (idents.empty()) throw ConfigError("no identities in " + path);
    std::vector<std::pair<Identity, SweepRanges>> work;
    for (const auto& ident : idents) {
        if (!o.ids.empty()) {
            bool wanted = false;
            for (const auto& id : o.ids) wanted = wanted || id == ident.id;
            if (!wanted) continue;
        }
        SweepRanges r = default_ranges_for(ident);
        apply_overrides(r, ident, o);
        work.emplace_back(ident, std::move(r));
    }
    return run_verify("dsl verify", work, o);
}

// -------------------------------------------------------------- transform

GridArg grid_arg(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_rational_arg(s);
}

int cmd_transform(const std::string& input, const std::string& op,
                  const std::string& u_str, const std::string& v_str,
                  const std::string& emit_path, bool verify_out, int jobs) {
    GridArg u = grid_arg(u_str);
    GridArg v = grid_arg(v_str);
    bool symmetric = input == "waring" || input == "waring-dual";

    std::vector<Identity> out;
    if (symmetric) {
        const SymmetricXYIdentity& sym = symmetric_form(input);
        if (op == "xy")
            out.push_back(t_xy_pair(sym, v));
        else if (op == "sin-sub")
            out.push_back(t_sym_sin(sym, v));
        else
            throw ConfigError("op '" + op +
                              "' needs a standard-form input, not '" + input +
                              "'");
    } else {
        const StandardFormIdentity& sf = standard_form(input);
        if (op == "beta01") {
            out.push_back(t_beta01(sf, u, v));
        } else if (op == "xy") {
            auto pair = t_xy_pair(sf, u, v);
            out.push_back(pair.first);
            out.push_back(pair.second);
        } else if (op == "y-minus1") {
            out.push_back(t_y_minus1(sf, u, v));
        } else if (op == "sin-sub") {
            out.push_back(t_sin_sub(sf, u, v));
        } else if (op == "cos-parity") {
            out.push_back(t_cos_parity(sf, v, ParitySide::ForwardOnQ));
        } else if (op == "power-form") {
            auto pair = t_power_form(sf, v);
            out.push_back(pair.first);
            out.push_back(pair.second);
        } else {
            throw ConfigError("unknown op '" + op + "'");
        }
    }

    std::string text;
    for (const auto& ident : out) text += format_identity(ident) + "\n";
    std::cout << text;
    if (!emit_path.empty()) write_text_file(emit_path, text);

    if (!verify_out) return 0;
    std::vector<VerificationResult> results;
    for (const auto& ident : out) {
        SweepRanges r = default_ranges_for(ident);
        // keep the confirmation sweep small; emission already ran a
        // closure check over its own samples
        for (const auto& p : ident.params)
            if (p.kind == ParamKind::Natural)
                r[p.name] = parse_range("0..8");
        auto part = sweep(ident, r, VerifyMode{}, jobs);
        results.insert(results.end(), part.begin(), part.end());
    }
    VerifyOptions o;
    o.jobs = jobs;
    return finish_run("transform verify", o, results);
}

// -------------------------------------------------------------- quadcheck

std::vector<Rational> half_grid(const Rational& a, const Rational& b) {
    std::vector<Rational> out;
    for (Rational q = a; q <= b; q += Rational(1, 2)) out.push_back(q);
    return out;
}

// "u=A..B,v=C..D" with rational endpoints, stepped by 1/2
void parse_quad_grid(const std::string& s, std::vector<Rational>& us,
                     std::vector<Rational>& vs) {
    auto parse_axis = [](const std::string& part, const char* letter) {
        std::string prefix = std::string(letter) + "=";
        if (part.rfind(prefix, 0) != 0)
            throw ConfigError("grid axis must start with '" + prefix + "'");
        auto body = part.substr(prefix.size());
        auto dots = body.find("..");
        if (dots == std::string::npos)
            throw ConfigError("grid axis must be " + prefix + "A..B");
        return half_grid(parse_rational_arg(body.substr(0, dots)),
                         parse_rational_arg(body.substr(dots + 2)));
    };
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ConfigError("grid must be u=A..B,v=C..D");
    us = parse_axis(s.substr(0, comma), "u");
    vs = parse_axis(s.substr(comma + 1), "v");
}

int cmd_quadcheck(const std::string& kinds_str, const std::string& grid_str,
                  int digits) {
    if (digits < 10 || digits > 100)
        throw ConfigError("digits must be in [10, 100]");
    std::vector<std::string> kinds;
    {
        std::string s = kinds_str.empty() ? "K,I,J,J-general,beta01"
                                          : kinds_str;
        std::size_t i = 0;
        while (i <= s.size()) {
            std::size_t j = s.find(',', i);
            if (j == std::string::npos) j = s.size();
            if (j > i) kinds.push_back(s.substr(i, j - i));
            i = j + 1;
        }
    }
    std::vector<Rational> us = half_grid(Rational(-1, 2), Rational(5));
    std::vector<Rational> vs = us;
    if (!grid_str.empty()) parse_quad_grid(grid_str, us, vs);

    mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    BigFloat tol = BigFloat::pow10(-(digits - 4), prec);
    bool ok = true;
    for (const auto& kind : kinds) {
        IntegralKind ik;
        if (kind == "K")
            ik = IntegralKind::K_quarter;
        else if (kind == "I")
            ik = IntegralKind::I_half_angle;
        else if (kind == "J" || kind == "J-general")
            ik = IntegralKind::J_full;
        else if (kind == "beta01")
            ik = IntegralKind::Beta01;
        else
            throw ConfigError("unknown kind '" + kind + "'");

        BigFloat worst(prec);
        long checked = 0;
        for (const auto& u : us) {
            for (const auto& v : vs) {
                if (u <= -1 || v <= -1) continue;
                if (kind == "J" && !is_integer(u)) continue;
                if (kind == "J-general" && is_integer(u)) continue;
                QuadratureSpec spec{ik, u, v, digits};
                QuadResult got = integrate(spec);
                QuadResult want = closed_form_numeric(spec);
                BigFloat scale = got.re.abs() + got.im.abs() +
                                 want.re.abs() + want.im.abs() +
                                 BigFloat::from_long(1, prec);
                BigFloat err = ((got.re - want.re).abs() +
                                (got.im - want.im).abs()) /
                               scale;
                if (err > worst) worst = err;
                ++checked;
            }
        }
        bool pass = checked == 0 || worst <= tol;
        std::cout << kind << ": " << checked
                  << " points, max relerr " << worst.str(3)
                  << (pass ? " (ok)" : " (FAIL)") << "\n";
        ok = ok && pass;
    }
    return ok ? 0 : 1;
}

// ------------------------------------------------------------ emit-vectors

void bindings_for(const Identity& ident, const SweepRanges& ranges,
                  const std::function<void(const ParamBinding&)>& fn) {
    std::vector<std::pair<std::string, const std::vector<Rational>*>> axes;
    for (const auto& p : ident.params) axes.push_back({p.name, &ranges.at(p.name)});
    ParamBinding b;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == axes.size()) {
            fn(b);
            return;
        }
        for (const auto& q : *axes[i].second) {
            b[axes[i].first] = q;
            rec(i + 1);
        }
    };
    rec(0);
}

int cmd_emit_vectors(const std::string& out_path) {
    nlohmann::json vectors = nlohmann::json::object();
    for (const auto& e : catalog_entries()) {
        nlohmann::json rows = nlohmann::json::array();
        bindings_for(e.identity, e.default_ranges, [&](const ParamBinding& b) {
            if (!predicate_holds(e.identity.validity, b)) return;
            nlohmann::json binding = nlohmann::json::object();
            for (const auto& [name, value] : b)
                binding[name] = rational_str(value);
            std::string value;
            try {
                value = eval_exact_value(e.identity.lhs, b).str();
            } catch (const Error& ex) {
                return;  // inadmissible instance despite the declared domain
            }
            rows.push_back({{"binding", binding}, {"value", value}});
        });
        vectors[e.identity.id] = rows;
    }
    nlohmann::json out{{"meta", {{"tool", kToolName}, {"version", kToolVersion}}},
                       {"vectors", vectors}};
    write_text_file(out_path, out.dump(2) + "\n");
    std::cerr << "emit-vectors: wrote " << out_path << "\n";
    return 0;
}

int default_digits_from_env() {
    const char* s = std::getenv("BINOMID_DIGITS");
    if (!s) return 30;
    int d = std::atoi(s);
    if (d < 10 || d > 100)
        throw ConfigError("BINOMID_DIGITS must be in [10, 100]");
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of binomial-sum identities"};
    app.require_subcommand(1);

    try {
        VerifyOptions vo;
        vo.digits = default_digits_from_env();

        auto* cat = app.add_subcommand("catalog", "built-in identity registry");
        cat->require_subcommand(1);
        auto* cat_list = cat->add_subcommand("list", "list catalog entries");
        auto* cat_verify =
            cat->add_subcommand("verify", "sweep catalog entries");
        add_verify_flags(cat_verify, vo, true);

        auto* dsl = app.add_subcommand("dsl", "user-supplied identity files");
        dsl->require_subcommand(1);
        auto* dsl_verify = dsl->add_subcommand("verify", "verify a .idn file");
        std::string dsl_file;
        dsl_verify->add_option("file", dsl_file, "identity file")->required();
        add_verify_flags(dsl_verify, vo, true);

        auto* tr = app.add_subcommand("transform",
                                      "derive identities from input forms");
        std::string tr_input, tr_op, tr_u, tr_v, tr_emit;
        bool tr_verify = false;
        int tr_jobs = 1;
        tr->add_option("--input", tr_input, "input form")
            ->required()
            ->check(CLI::IsMember({"binomial", "binomial-x", "waring",
                                   "waring-dual", "simons"}));
        tr->add_option("--op", tr_op, "transformation")
            ->required()
            ->check(CLI::IsMember({"beta01", "xy", "y-minus1", "sin-sub",
                                   "cos-parity", "power-form"}));
        tr->add_option("--u", tr_u, "first exponent (rational, half-grid)");
        tr->add_option("--v", tr_v, "second exponent (rational, half-grid)");
        tr->add_option("--emit-dsl", tr_emit, "write emitted identities here");
        tr->add_flag("--verify", tr_verify, "sweep the emitted identities");
        tr->add_option("--jobs", tr_jobs, "parallel sweep workers");

        auto* quad = app.add_subcommand(
            "quadcheck", "numeric integration vs closed forms");
        std::string q_kinds, q_grid;
        int q_digits = vo.digits;
        quad->add_option("--kinds", q_kinds, "comma-separated integral kinds");
        quad->add_option("--grid", q_grid, "u=A..B,v=C..D (half steps)");
        quad->add_option("--digits", q_digits, "working precision in digits");

        auto* vec = app.add_subcommand("emit-vectors",
                                       "golden values for all entries");
        std::string vec_out;
        vec->add_option("--out", vec_out, "output path")->required();

        CLI11_PARSE(app, argc, argv);

        if (cat_list->parsed()) return cmd_catalog_list();
        if (cat_verify->parsed()) return cmd_catalog_verify(vo);
        if (dsl_verify->parsed()) return cmd_dsl_verify(dsl_file, vo);
        if (tr->parsed())
            return cmd_transform(tr_input, tr_op, tr_u, tr_v, tr_emit,
                                 tr_verify, tr_jobs);
        if (quad->parsed()) return cmd_quadcheck(q_kinds, q_grid, q_digits);
        if (vec->parsed()) return cmd_emit_vectors(vec_out);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
