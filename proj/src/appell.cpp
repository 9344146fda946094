#include "umbra/appell.hpp"

#include <cmath>
#include <string>

#include "umbra/errors.hpp"

namespace umbra::appell {

namespace {

constexpr Complex I(0.0, 1.0);
constexpr double bernoulli_crossover = 0.25;

std::vector<Rational> truncated_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                        std::size_t len) {
    std::vector<Rational> out(len);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Complex horner(const std::vector<Rational>& c, Complex t) {
    Complex acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * t + c[n].get_d();
    return acc;
}

/// (e^z - 1)/z, by its series near the removable point.
Complex exp_minus_one_over(Complex z) {
    if (std::abs(z) < bernoulli_crossover) {
        Complex term = 1.0;
        Complex sum = 1.0;
        for (int m = 1; m < 20; ++m) {
            term *= z / static_cast<double>(m + 1);
            sum += term;
        }
        return sum;
    }
    return (std::exp(z) - 1.0) / z;
}

std::vector<Rational> gaussian_taylor(std::size_t order, long sign) {
    std::vector<Rational> c(order + 1);
    Rational term = 1;
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        c[2 * j] = term;
        term *= Rational(sign, static_cast<long>(j + 1));
    }
    return c;
}

Complex i_power(std::size_t n) {
    static constexpr Complex cycle[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return cycle[n % 4];
}

double poly_value(const ExactPoly& p, double x) {
    double acc = 0.0;
    for (std::size_t n = p.size(); n-- > 0;) acc = acc * x + p[n].get_d();
    return acc;
}

}  // namespace

std::vector<Rational> series_reciprocal(const std::vector<Rational>& a) {
    if (a.empty() || sgn(a[0]) == 0) throw InvalidParameter("series reciprocal needs a nonzero constant term");
    const std::size_t target = a.size();
    std::vector<Rational> g = {Rational(1 / a[0])};
    std::size_t len = 1;
    while (len < target) {
        len = std::min(2 * len, target);
        std::vector<Rational> ag = truncated_product(a, g, len);
        for (auto& v : ag) v = -v;
        ag[0] += 2;
        g = truncated_product(g, ag, len);
    }
    return g;
}

AppellFamily::AppellFamily(std::string name, std::vector<Rational> taylor, std::function<Complex(Complex)> value,
                           std::function<Complex(Complex)> inverse)
    : name_(std::move(name)),
      taylor_(std::move(taylor)),
      value_(std::move(value)),
      inverse_(std::move(inverse)) {
    if (taylor_.empty() || sgn(taylor_[0]) == 0) throw InvalidParameter("A(0) must be nonzero");
    inverse_taylor_ = series_reciprocal(taylor_);
}

AppellFamily AppellFamily::identity(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    return AppellFamily("identity", std::move(c), [](Complex) { return Complex(1.0); },
                        [](Complex) { return Complex(1.0); });
}

AppellFamily AppellFamily::bernoulli(std::size_t order) {
    // 1/A(t) = (e^t - 1)/t = sum t^m/(m+1)!
    std::vector<Rational> inv(order + 1);
    Rational term = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        inv[m] = term;
        term /= static_cast<long>(m + 2);
    }
    return AppellFamily("bernoulli", series_reciprocal(inv), [](Complex t) { return 1.0 / exp_minus_one_over(t); },
                        [](Complex t) { return exp_minus_one_over(t); });
}

AppellFamily AppellFamily::gauss_hermite_type(std::size_t order) {
    return AppellFamily("gauss-hermite-type", gaussian_taylor(order, -1), [](Complex t) { return std::exp(-t * t); },
                        [](Complex t) { return std::exp(t * t); });
}

AppellFamily AppellFamily::exp_square(std::size_t order) {
    return AppellFamily("exp-square", gaussian_taylor(order, 1), [](Complex t) { return std::exp(t * t); },
                        [](Complex t) { return std::exp(-t * t); });
}

AppellFamily AppellFamily::from_taylor(std::string name, std::vector<Rational> taylor) {
    if (taylor.empty() || sgn(taylor[0]) == 0) throw InvalidParameter("A(0) must be nonzero");
    const std::vector<Rational> inv = series_reciprocal(taylor);
    const std::vector<Rational> plus = taylor;
    return AppellFamily(std::move(name), std::move(taylor), [plus](Complex t) { return horner(plus, t); },
                        [inv](Complex t) { return horner(inv, t); });
}

ExactPoly appell_poly(const AppellFamily& fam, std::size_t n, Sign sign) {
    if (n > fam.order()) {
        throw TruncationError("degree " + std::to_string(n) + " exceeds the family order " +
                              std::to_string(fam.order()));
    }
    const auto& c = fam.coefficients(sign);
    ExactPoly out(n + 1);
    Rational falling = 1;  // n!/(n-m)!
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) falling *= static_cast<long>(n - m + 1);
        out[n - m] = c[m] * falling;
    }
    return out;
}

ExactPoly apply_characteristic(const AppellFamily& fam, const ExactPoly& p, Sign sign) {
    if (!p.empty() && p.size() - 1 > fam.order()) throw TruncationError("polynomial degree exceeds the family order");
    const auto& c = fam.coefficients(sign);
    ExactPoly out(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (sgn(p[n]) == 0) continue;
        Rational falling = 1;
        for (std::size_t m = 0; m <= n; ++m) {
            if (m > 0) falling *= static_cast<long>(n - m + 1);
            out[n - m] += c[m] * falling * p[n];
        }
    }
    return out;
}

double generating_check(const AppellFamily& fam, std::size_t N, double t, double x, Sign sign) {
    double sum = 0.0;
    double t_over_fact = 1.0;  // t^n / n!
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) t_over_fact *= t / static_cast<double>(n);
        sum += t_over_fact * poly_value(appell_poly(fam, n, sign), x);
    }
    const Complex a = sign == Sign::plus ? fam.value(t) : fam.inverse_value(t);
    return std::abs(sum - a * std::exp(t * x));
}

ExpansionResult expansion_coefficients(const AppellFamily& fam, const op::FourierSymbol& f, std::size_t N) {
    if (N > max_expansion_terms) {
        throw InvalidParameter("at most " + std::to_string(max_expansion_terms) + " coefficients in double precision");
    }
    if (N > fam.order()) throw TruncationError("coefficient count exceeds the family order");
    ExpansionResult res;
    res.family = fam.name();
    double n_fact = 1.0;
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) n_fact *= static_cast<double>(n);
        const auto integrand = [&fam, n](double k) {
            return fam.inverse_value(Complex(0.0, k)) * std::pow(k, static_cast<double>(n));
        };
        if (f.has_continuous_part()) {
            double previous = 0.0;
            for (double k : {10.0, 20.0, 40.0}) {
                const double v = std::max(std::abs(f.transform(k) * integrand(k)), std::abs(f.transform(-k) * integrand(-k)));
                if (!std::isfinite(v) || (k > 10.0 && v > previous)) {
                    throw DivergenceError("integrand f~(k) [A(ik)]^-1 k^n grows for n = " + std::to_string(n));
                }
                previous = v;
            }
        }
        const op::SymbolIntegral s = op::symbol_integral(f, integrand);
        const Complex alpha = i_power(n) * s.value / n_fact;
        res.coefficients.push_back(alpha);
        res.nodes.push_back(s.nodes);
        res.max_imag = std::max(res.max_imag, std::abs(alpha.imag()));
        res.converged = res.converged && s.converged;
    }
    return res;
}

Complex reconstruct(const AppellFamily& fam, const ExpansionResult& res, double x) {
    Complex sum = 0.0;
    for (std::size_t n = 0; n < res.coefficients.size(); ++n) {
        if (res.coefficients[n] == Complex(0.0)) continue;
        sum += res.coefficients[n] * poly_value(appell_poly(fam, n, Sign::plus), x);
    }
    return sum;
}

double reconstruction_residual(const AppellFamily& fam, const ExpansionResult& res,
                               const std::function<Complex(double)>& f, const std::vector<double>& grid) {
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(reconstruct(fam, res, x) - f(x)));
    return worst;
}

Complex bernoulli_gaussian_printed(std::size_t n) {
    if (n == 0) throw InvalidParameter("the printed form needs n >= 1");
    const auto h = [n](double k) { return (std::exp(I * k) - 1.0) * std::pow(k, static_cast<double>(n - 1)); };
    const quad::QuadResult r = quad::gauss_weighted_integral(h, 1.0);
    return i_power(n - 1) * r.value / std::sqrt(2.0 * M_PI * std::tgamma(n + 1.0));
}

seq::Sequence umbral_heat_sequence(const seq::Sequence& a, const Rational& y) {
    std::vector<Rational> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        // e^(y d^2) a^n = sum_j y^j/j! n!/(n-2j)! a^(n-2j)
        Rational coeff = 1;
        for (std::size_t j = 0; 2 * j <= n; ++j) {
            if (j > 0) coeff *= y * Rational(static_cast<long>((n - 2 * j + 2) * (n - 2 * j + 1)), static_cast<long>(j));
            b[n] += coeff * a[n - 2 * j];
        }
    }
    return seq::Sequence(std::move(b));
}

Complex umbral_heat_egf(const gf::SequenceModel& a, const Rational& y, double x, std::size_t T) {
    const seq::Sequence b = umbral_heat_sequence(a.prefix(T + 1), y);
    double sum = 0.0;
    double x_over_fact = 1.0;
    for (std::size_t n = 0; n <= T; ++n) {
        if (n > 0) x_over_fact *= x / static_cast<double>(n);
        sum += b[n].get_d() * x_over_fact;
    }
    return sum;
}

}  // namespace umbra::appell
