#include "umbra/gftrans.hpp"

#include <cmath>
#include <utility>

#include "umbra/errors.hpp"
#include "umbra/specfun.hpp"

namespace umbra::gf {

namespace {

constexpr std::size_t fallback_terms = 4096;

void require_inside(double magnitude, double radius, const char* what) {
    if (!(magnitude < radius)) {
        throw DivergenceError(std::string(what) + ": |argument| = " + std::to_string(magnitude) +
                              " outside radius " + std::to_string(radius));
    }
}

/// Sums sum_{n>=r} a_n w(n, r) z^(n-r) for a model without closed forms.
template <class Weight>
Complex sum_terms(const SequenceModel& a, Complex z, unsigned r, Weight weight) {
    Complex acc = 0.0;
    Complex zp = 1.0;
    for (std::size_t n = r; n < fallback_terms; ++n) {
        const Complex term = to_double(a.term(n)) * weight(n) * zp;
        acc += term;
        if (n > r + 16 && std::abs(term) < 1e-18 * std::abs(acc)) break;
        zp *= z;
    }
    return acc;
}

double falling(std::size_t n, unsigned r) {
    double out = 1.0;
    for (unsigned j = 0; j < r; ++j) out *= static_cast<double>(n - j);
    return out;
}

Complex from_q(const Rational& v) { return to_complex(v); }

}  // namespace

EvalResult series_eval(const PowerSeries& s, Complex x, Growth growth) {
    const double ax = std::abs(x);
    const double q = growth.rate * ax;
    const auto t1 = static_cast<double>(s.truncation_order() + 1);
    EvalResult out{evaluate_truncated(s, x), 0.0};
    if (growth.bound == 0.0) return out;
    if (s.kind() == SeriesKind::ordinary) {
        if (!(q < 1.0)) throw DivergenceError("series_eval: rho |x| >= 1 for an ordinary series");
        out.tail_bound = growth.bound * std::pow(q, t1) / (1.0 - q);
    } else {
        if (q == 0.0) return out;
        out.tail_bound = growth.bound * std::exp(t1 * std::log(q) - std::lgamma(t1 + 1.0) + q);
    }
    return out;
}

Growth envelope_growth(const PowerSeries& s, double min_rate) {
    const std::size_t order = s.truncation_order();
    double rate = min_rate;
    for (std::size_t n = std::max<std::size_t>(1, order / 2); n <= order; ++n) {
        const double mag = std::abs(s[n]);
        if (mag > 0.0) rate = std::max(rate, std::exp(std::log(mag) / static_cast<double>(n)));
    }
    double log_bound = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= order; ++n) {
        const double mag = std::abs(s[n]);
        if (mag == 0.0) continue;
        const double lr = (rate > 0.0) ? static_cast<double>(n) * std::log(rate) : (n == 0 ? 0.0 : -INFINITY);
        log_bound = std::max(log_bound, std::log(mag) - lr);
    }
    const double bound = std::isfinite(log_bound) ? std::exp(log_bound) : 0.0;
    return {bound, rate};
}

PowerSeries series_derivative(const PowerSeries& s, unsigned r) {
    const std::size_t order = s.truncation_order();
    if (r > order) throw TruncationError("derivative order exceeds truncation order");
    std::vector<Complex> c(order - r + 1);
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = s[n + r];
        if (s.kind() == SeriesKind::ordinary) c[n] *= falling(n + r, r);
    }
    return PowerSeries(std::move(c), s.kind());
}

seq::Sequence SequenceModel::prefix(std::size_t length) const {
    std::vector<Rational> t(length);
    for (std::size_t n = 0; n < length; ++n) t[n] = term(n);
    return seq::Sequence(std::move(t));
}

SequenceModel SequenceModel::geometric(const Rational& c) {
    const double cd = to_double(c);
    SequenceModel m;
    m.name = "geometric(" + to_string(c) + ")";
    m.term = [c](std::size_t n) { return pow(c, static_cast<long>(n)); };
    if (cd != 0.0) m.ogf_radius = 1.0 / std::abs(cd);
    m.ogf = [cd](Complex z, unsigned r) {
        return std::tgamma(r + 1.0) * std::pow(cd, r) / std::pow(1.0 - cd * z, static_cast<int>(r + 1));
    };
    m.egf = [cd](Complex z, unsigned r) { return std::pow(cd, r) * std::exp(cd * z); };
    m.bessel_egf = [cd](Complex z) { return specfun::tricomi_c(0, -cd * z); };
    return m;
}

SequenceModel SequenceModel::ones() {
    SequenceModel m = geometric(Rational(1));
    m.name = "ones";
    return m;
}

SequenceModel SequenceModel::linear() {
    SequenceModel m;
    m.name = "linear";
    m.ogf_radius = 1.0;
    m.term = [](std::size_t n) { return Rational(static_cast<unsigned long>(n)); };
    m.ogf = [](Complex z, unsigned r) {
        const double rf = std::tgamma(r + 1.0);
        return (r + 1.0) * rf / std::pow(1.0 - z, static_cast<int>(r + 2)) -
               rf / std::pow(1.0 - z, static_cast<int>(r + 1));
    };
    m.egf = [](Complex z, unsigned r) { return (z + static_cast<double>(r)) * std::exp(z); };
    m.bessel_egf = [](Complex z) { return z * specfun::tricomi_c(1, -z); };
    return m;
}

SequenceModel SequenceModel::delta() {
    SequenceModel m;
    m.name = "delta";
    m.term = [](std::size_t n) { return Rational(n == 0 ? 1 : 0); };
    m.ogf = [](Complex, unsigned r) { return Complex(r == 0 ? 1.0 : 0.0); };
    m.egf = m.ogf;
    m.bessel_egf = [](Complex) { return Complex(1.0); };
    return m;
}

SequenceModel SequenceModel::finite(const seq::Sequence& a) {
    std::vector<Rational> t(a.terms().begin(), a.terms().end());
    std::vector<double> td;
    for (const auto& v : t) td.push_back(to_double(v));
    SequenceModel m;
    m.name = "finite";
    m.term = [t](std::size_t n) { return n < t.size() ? t[n] : Rational(0); };
    m.ogf = [td](Complex z, unsigned r) {
        Complex acc = 0.0;
        for (std::size_t n = td.size(); n-- > r;) acc = acc * z + td[n] * falling(n, r);
        return acc;
    };
    m.egf = [td](Complex z, unsigned r) {
        Complex acc = 0.0;
        for (std::size_t n = td.size(); n-- > r;) acc = acc * z / static_cast<double>(n - r + 1) + td[n];
        return acc;
    };
    m.bessel_egf = [td](Complex z) {
        Complex acc = 0.0;
        Complex zp = 1.0;
        double fact = 1.0;
        for (std::size_t n = 0; n < td.size(); ++n) {
            if (n > 0) fact *= static_cast<double>(n);
            acc += td[n] * zp / (fact * fact);
            zp *= z;
        }
        return acc;
    };
    return m;
}

Complex ogf_value(const SequenceModel& a, Complex z, unsigned r) {
    require_inside(std::abs(z), a.ogf_radius, "ordinary generating function");
    if (a.ogf) return a.ogf(z, r);
    return sum_terms(a, z, r, [r](std::size_t n) { return falling(n, r); });
}

Complex egf_value(const SequenceModel& a, Complex z, unsigned r) {
    if (a.egf) return a.egf(z, r);
    return sum_terms(a, z, r, [r](std::size_t n) { return 1.0 / std::tgamma(static_cast<double>(n - r) + 1.0); });
}

Complex bessel_egf_value(const SequenceModel& a, Complex z) {
    if (a.bessel_egf) return a.bessel_egf(z);
    return sum_terms(a, z, 0, [](std::size_t n) {
        const double f = std::tgamma(static_cast<double>(n) + 1.0);
        return 1.0 / (f * f);
    });
}

Complex binomial_gf_ordinary(const SequenceModel& a, Complex x) {
    require_inside(std::abs(x), 1.0, "binomial closed form");
    return ogf_value(a, -x / (1.0 - x)) / (1.0 - x);
}

Complex binomial_gf_exponential(const SequenceModel& a, Complex x) { return std::exp(x) * egf_value(a, -x); }

Complex modular_gf(const SequenceModel& a, const Rational& alpha, const Rational& beta, Complex x,
                   SeriesKind kind) {
    const Complex al = from_q(alpha);
    const Complex be = from_q(beta);
    if (kind == SeriesKind::ordinary) {
        require_inside(std::abs(al * x), 1.0, "modular closed form");
        return ogf_value(a, be * x / (al * x - 1.0)) / (1.0 - al * x);
    }
    return std::exp(al * x) * egf_value(a, -be * x);
}

Complex k_binomial_gf(const SequenceModel& a, unsigned k, Complex x, SeriesKind kind) {
    Complex acc = 0.0;
    if (kind == SeriesKind::ordinary) {
        require_inside(std::abs(x), 1.0, "k-binomial closed form");
        const Complex z = -x / (1.0 - x);
        for (unsigned r = 0; r <= k; ++r) {
            const double s2 = specfun::stirling2(r, k).get_d();
            if (s2 == 0.0) continue;
            acc += std::pow(-x, static_cast<int>(r)) / std::pow(1.0 - x, static_cast<int>(r + 1)) * s2 *
                   ogf_value(a, z, r);
        }
        return acc;
    }
    for (unsigned r = 0; r <= k; ++r) {
        const double s2 = specfun::stirling2(r, k).get_d();
        if (s2 == 0.0) continue;
        acc += std::pow(-x, static_cast<int>(r)) * s2 * egf_value(a, -x, r);
    }
    return std::exp(x) * acc;
}

Complex hermite_gf(const SequenceModel& a, const Rational& alpha, const Rational& beta, Complex x,
                   HermiteVariant variant) {
    const Complex al = from_q(alpha);
    const Complex be = from_q(beta);
    if (variant == HermiteVariant::plain) return std::exp(al * x) * egf_value(a, be * x * x);
    return std::exp(be * x * x) * egf_value(a, al * x);
}

Complex laguerre_gf(const SequenceModel& a, const Rational& alpha, const Rational& beta, Complex x,
                    SeriesKind kind) {
    const Complex al = from_q(alpha);
    const Complex be = from_q(beta);
    if (kind == SeriesKind::ordinary) {
        require_inside(std::abs(be * x), 1.0, "Laguerre closed form");
        return egf_value(a, -al * x / (1.0 - be * x)) / (1.0 - be * x);
    }
    return std::exp(be * x) * bessel_egf_value(a, -al * x);
}

Complex binomial_ogf_map(const std::function<Complex(Complex)>& f, Complex x) {
    require_inside(std::abs(x), 1.0, "binomial map");
    return f(-x / (1.0 - x)) / (1.0 - x);
}

std::vector<Rational> euler_operator_power(const std::vector<Rational>& poly, unsigned n) {
    std::vector<Rational> out = poly;
    for (unsigned step = 0; step < n; ++step) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] *= static_cast<unsigned long>(j);
    }
    return out;
}

std::vector<Rational> stirling_operator_expansion(const std::vector<Rational>& poly, unsigned n) {
    std::vector<Rational> out(poly.size());
    for (unsigned k = 0; k <= n; ++k) {
        const Rational s2(specfun::stirling2(k, n));
        if (sgn(s2) == 0) continue;
        // t^k d^k/dt^k t^j = j(j-1)...(j-k+1) t^j
        for (std::size_t j = 0; j < poly.size(); ++j) {
            out[j] += s2 * Rational(falling_factorial(static_cast<unsigned>(j), k)) * poly[j];
        }
    }
    return out;
}

}  // namespace umbra::gf
