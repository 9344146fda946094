#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "umbra/appell.hpp"
#include "umbra/checks/suites.hpp"
#include "umbra/errors.hpp"
#include "umbra/opcalc.hpp"
#include "umbra/oracle/appell.hpp"
#include "umbra/oracle/operators.hpp"
#include "umbra/sequence_io.hpp"

namespace umbra::cli {

namespace {

using json = nlohmann::ordered_json;

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw InvalidParameter("cannot write '" + g.output + "'");
    out << text;
}

Rational param(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw InvalidParameter("parameter --" + name + ": " + e.what());
    }
}

bool want_json(const GlobalOptions& g, bool default_json) {
    if (!g.format) return default_json;
    if (*g.format == "json") return true;
    if (*g.format == "csv") return false;
    throw InvalidParameter("unknown format '" + *g.format + "'");
}

// ---------------------------------------------------------------------------
// expand

appell::AppellFamily make_family(const ExpandArgs& a, std::size_t order) {
    if (a.family == "bernoulli") return appell::AppellFamily::bernoulli(order);
    if (a.family == "identity") return appell::AppellFamily::identity(order);
    if (a.family == "gauss-hermite-type") return appell::AppellFamily::gauss_hermite_type(order);
    if (a.family == "exp-square") return appell::AppellFamily::exp_square(order);
    if (a.family == "taylor-file") {
        if (a.taylor_file.empty()) throw InvalidParameter("family taylor-file needs --taylor-file");
        const seq::Sequence t = seq::parse_sequence(read_file(a.taylor_file));
        // A is the polynomial in the file, padded so the family reaches the requested order.
        std::vector<Rational> c(std::max(order + 1, t.size()));
        for (std::size_t n = 0; n < t.size(); ++n) c[n] = t[n];
        return appell::AppellFamily::from_taylor("taylor-file", std::move(c));
    }
    throw InvalidParameter("unknown family '" + a.family + "'");
}

op::FourierSymbol make_function(const ExpandArgs& a, const Rational& s) {
    if (sgn(s) <= 0) throw InvalidParameter("--scale must be positive");
    if (a.function == "gaussian") return op::FourierSymbol::gaussian(to_double(s));
    if (a.function == "x-gaussian") return op::FourierSymbol::x_gaussian(to_double(s));
    throw InvalidParameter("unknown function '" + a.function + "'");
}

std::vector<Rational> function_taylor(const ExpandArgs& a, const Rational& s, std::size_t order) {
    std::vector<Rational> g = oracle::gaussian_series(s, order);
    if (a.function == "x-gaussian") {
        g.insert(g.begin(), Rational(0));
        g.pop_back();
    }
    return g;
}

/// The operational series at two truncations; empty when they disagree,
/// which marks the series as not converged.
std::vector<Rational> oracle_column(const ExpandArgs& a, const Rational& s, std::size_t N) {
    const std::size_t m1 = 80;
    const std::size_t m2 = 160;
    const auto inv1 = make_family(a, m1).coefficients(appell::Sign::minus);
    const auto inv2 = make_family(a, m2).coefficients(appell::Sign::minus);
    const auto c1 = oracle::operational_coefficients(inv1, function_taylor(a, s, m1 + N + 40), N);
    const auto c2 = oracle::operational_coefficients(inv2, function_taylor(a, s, m2 + N + 80), N);
    for (std::size_t n = 0; n <= N; ++n) {
        const double d = std::abs(c1[n].get_d() - c2[n].get_d());
        if (!(d <= 1e-12 * std::max(1.0, std::abs(c2[n].get_d())))) return {};
    }
    return c2;
}

}  // namespace

int run_transform(const GlobalOptions& g, const TransformArgs& a) {
    const seq::Sequence in = seq::parse_sequence(read_file(a.input));
    const Rational alpha = param("alpha", a.alpha);
    const Rational beta = param("beta", a.beta);
    seq::TransformStage stage;
    if (a.transform == "binomial") {
        stage = seq::Binomial{};
    } else if (a.transform == "modular") {
        stage = seq::Modular{{alpha, beta}};
    } else if (a.transform == "modular-inverse") {
        stage = seq::ModularInverse{{alpha, beta}};
    } else if (a.transform == "k-binomial") {
        if (!a.k) throw InvalidParameter("k-binomial needs --k");
        stage = seq::RisingKBinomial{*a.k};
    } else if (a.transform == "hermite") {
        stage = seq::Hermite{{alpha, beta}};
    } else if (a.transform == "hermite-complementary") {
        stage = seq::HermiteComplementary{{alpha, beta}};
    } else if (a.transform == "hermite-inverse") {
        stage = seq::HermiteInverse{{alpha, beta}};
    } else if (a.transform == "laguerre") {
        stage = seq::Laguerre{{alpha, beta}};
    } else {
        throw InvalidParameter("unknown transform '" + a.transform + "'");
    }
    emit(g, seq::format_sequence(seq::apply(stage, in)));
    return ok;
}

int run_check(const GlobalOptions& g, const CheckArgs& a) {
    checks::CheckOptions opts;
    opts.tolerance = g.tolerance;
    opts.seed = g.seed;
    opts.order = g.order;
    const bool as_json = want_json(g, true);
    const checks::RunReport report = checks::run_suite(a.suite, opts);
    std::ostringstream os;
    checks::write_report(os, report, as_json ? checks::Format::json : checks::Format::csv, a.timing);
    emit(g, os.str());
    return report.any_failure() ? check_failed : ok;
}

int run_expand(const GlobalOptions& g, const ExpandArgs& a) {
    const bool as_json = want_json(g, false);
    const Rational s = param("scale", a.scale);
    const appell::AppellFamily fam = make_family(a, g.order.value_or(appell::AppellFamily::default_order));
    const op::FourierSymbol f = make_function(a, s);
    const appell::ExpansionResult res = appell::expansion_coefficients(fam, f, a.N);
    const std::vector<Rational> oracle_c = oracle_column(a, s, a.N);

    std::vector<double> grid;
    for (int i = -10; i <= 10; ++i) grid.push_back(i / 10.0);

    if (as_json) {
        json doc;
        doc["family"] = fam.name();
        doc["function"] = f.name();
        doc["scale"] = to_string(s);
        doc["N"] = a.N;
        doc["max_imag"] = res.max_imag;
        doc["converged"] = res.converged;
        json coeffs = json::array();
        for (std::size_t n = 0; n <= a.N; ++n) {
            json row;
            row["n"] = n;
            row["re"] = res.coefficients[n].real();
            row["im"] = res.coefficients[n].imag();
            row["nodes"] = res.nodes[n];
            if (!oracle_c.empty()) {
                row["oracle"] = oracle_c[n].get_d();
                row["residual"] = std::abs(res.coefficients[n] - oracle_c[n].get_d());
            }
            coeffs.push_back(row);
        }
        doc["coefficients"] = coeffs;
        json recon = json::array();
        for (double x : grid) {
            const Complex r = appell::reconstruct(fam, res, x);
            const Complex t = f.value(x);
            recon.push_back({{"x", x}, {"reconstruction", r.real()}, {"target", t.real()}, {"residual", std::abs(r - t)}});
        }
        doc["reconstruction"] = recon;
        emit(g, doc.dump(2) + "\n");
        return ok;
    }

    std::ostringstream os;
    os << "# family=" << fam.name() << " function=" << f.name() << " scale=" << to_string(s) << " N=" << a.N
       << " max_imag=" << num(res.max_imag) << " converged=" << (res.converged ? "true" : "false") << "\n";
    os << "# oracle=" << (oracle_c.empty() ? "not converged" : "operational series") << "\n";
    os << "n,re,im,nodes,oracle,residual\n";
    for (std::size_t n = 0; n <= a.N; ++n) {
        os << n << ',' << num(res.coefficients[n].real()) << ',' << num(res.coefficients[n].imag()) << ','
           << res.nodes[n] << ',';
        if (oracle_c.empty()) {
            os << ",\n";
        } else {
            os << num(oracle_c[n].get_d()) << ',' << num(std::abs(res.coefficients[n] - oracle_c[n].get_d())) << "\n";
        }
    }
    os << "\nx,reconstruction,target,residual\n";
    for (double x : grid) {
        const Complex r = appell::reconstruct(fam, res, x);
        const Complex t = f.value(x);
        os << num(x) << ',' << num(r.real()) << ',' << num(t.real()) << ',' << num(std::abs(r - t)) << "\n";
    }
    emit(g, os.str());
    return ok;
}

int run_evolve(const GlobalOptions& g, const EvolveArgs& a) {
    std::ostringstream os;
    if (a.equation == "heat") {
        if (!(a.scale > 0.0)) throw InvalidParameter("--scale must be positive");
        const double s = a.scale;
        const auto f = op::GridFunction::sample([s](double x) { return Complex(std::exp(-s * x * x)); }, a.half_width,
                                                a.points);
        const op::GridFunction out = op::heat_evolve_ft(f, a.alpha);
        const double w = 1.0 + 4.0 * s * a.alpha;
        os << "# heat: e^(alpha d^2) e^(-s x^2), s=" << num(s) << " alpha=" << num(a.alpha)
           << " half_width=" << num(a.half_width) << " points=" << a.points << "\n";
        os << "x,tau,value,nodes,oracle,residual\n";
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double x = out.x(j);
            const double expect = std::exp(-s * x * x / w) / std::sqrt(w);
            os << num(x) << ',' << num(a.alpha) << ',' << num(out[j].real()) << ',' << out.size() << ','
               << num(expect) << ',' << num(std::abs(out[j] - expect)) << "\n";
        }
    } else if (a.equation == "tricomi") {
        os << "# tricomi: e^(-tau D^-2) 1\n";
        os << "x,tau,value,nodes,oracle,residual\n";
        for (double x : a.x) {
            for (double tau : a.tau) {
                const op::OpValue v = op::tricomi_evolution(x, tau);
                const double expect = oracle::tricomi_series(x, tau);
                os << num(x) << ',' << num(tau) << ',' << num(v.value.real()) << ',' << v.nodes << ',' << num(expect)
                   << ',' << num(std::abs(v.value - expect)) << "\n";
            }
        }
    } else if (a.equation == "integro-diff") {
        const auto c0 = oracle::tricomi_c0_coefficients(40);
        os << "# integro-diff: e^(-tau (LD + beta D^-1)^m) C_0, m=" << a.m << " beta=" << num(a.beta) << "\n";
        os << "x,tau,value,nodes,oracle,residual\n";
        for (double x : a.x) {
            for (double tau : a.tau) {
                const op::OpValue v = op::integro_diff_evolve_c0(a.beta, a.m, tau, x);
                const double expect = oracle::integro_matrix_exponential(c0, a.beta, a.m, tau, x);
                os << num(x) << ',' << num(tau) << ',' << num(v.value.real()) << ',' << v.nodes << ',' << num(expect)
                   << ',' << num(std::abs(v.value - expect)) << "\n";
            }
        }
    } else {
        throw InvalidParameter("unknown equation '" + a.equation + "'");
    }
    emit(g, os.str());
    return ok;
}

}  // namespace umbra::cli
