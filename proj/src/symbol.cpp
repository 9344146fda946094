#include "umbra/symbol.hpp"

#include <cmath>
#include <utility>

#include "umbra/errors.hpp"

namespace umbra::op {

namespace {

const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);

std::vector<double> gaussian_taylor(double s, std::size_t order) {
    std::vector<double> c(order + 1, 0.0);
    double term = 1.0;
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        c[2 * j] = term;
        term *= -s / static_cast<double>(j + 1);
    }
    return c;
}

std::vector<double> cosine_taylor(double w, std::size_t order) {
    std::vector<double> c(order + 1, 0.0);
    double term = 1.0;
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        c[2 * j] = term;
        term *= -w * w / static_cast<double>((2 * j + 1) * (2 * j + 2));
    }
    return c;
}

void require_positive(double s) {
    if (!(s > 0.0)) throw InvalidParameter("Gaussian scale must be positive");
}

}  // namespace

FourierSymbol::FourierSymbol(std::string name, std::vector<Atom> atoms, double envelope,
                             std::function<Complex(double)> shape, std::function<Complex(Complex)> value,
                             std::function<std::vector<double>(std::size_t)> taylor)
    : name_(std::move(name)),
      atoms_(std::move(atoms)),
      envelope_(envelope),
      shape_(std::move(shape)),
      value_(std::move(value)),
      taylor_(std::move(taylor)) {
    if (shape_ && !(envelope_ > 0.0)) throw InvalidParameter("continuous symbol part needs a positive envelope");
}

Complex FourierSymbol::transform(double k) const {
    if (!shape_) return 0.0;
    return std::exp(-k * k / (4.0 * envelope_)) * shape_(k);
}

FourierSymbol FourierSymbol::gaussian(double s) {
    require_positive(s);
    const double norm = 1.0 / std::sqrt(2.0 * s);
    return FourierSymbol(
        "gaussian(" + std::to_string(s) + ")", {}, s, [norm](double) { return Complex(norm); },
        [s](Complex z) { return std::exp(-s * z * z); }, [s](std::size_t n) { return gaussian_taylor(s, n); });
}

FourierSymbol FourierSymbol::cos_gaussian(double s, double w) {
    require_positive(s);
    const double norm = std::exp(-w * w / (4.0 * s)) / std::sqrt(2.0 * s);
    return FourierSymbol(
        "cos_gaussian(" + std::to_string(s) + "," + std::to_string(w) + ")", {}, s,
        [norm, s, w](double k) { return Complex(norm * std::cosh(k * w / (2.0 * s))); },
        [s, w](Complex z) { return std::cos(w * z) * std::exp(-s * z * z); },
        [s, w](std::size_t n) {
            const auto g = gaussian_taylor(s, n);
            const auto c = cosine_taylor(w, n);
            std::vector<double> out(n + 1, 0.0);
            for (std::size_t i = 0; i <= n; ++i) {
                for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += g[i] * c[j];
            }
            return out;
        });
}

FourierSymbol FourierSymbol::x_gaussian(double s) {
    require_positive(s);
    const double norm = 1.0 / (2.0 * s * std::sqrt(2.0 * s));
    return FourierSymbol(
        "x_gaussian(" + std::to_string(s) + ")", {}, s, [norm](double k) { return Complex(0.0, -k * norm); },
        [s](Complex z) { return z * std::exp(-s * z * z); },
        [s](std::size_t n) {
            std::vector<double> out(n + 1, 0.0);
            if (n == 0) return out;
            const auto g = gaussian_taylor(s, n - 1);
            for (std::size_t i = 0; i < n; ++i) out[i + 1] = g[i];
            return out;
        });
}

FourierSymbol FourierSymbol::cosine(double w) {
    const double mass = 0.5 / inv_sqrt_2pi;
    return FourierSymbol(
        "cosine(" + std::to_string(w) + ")", {{-w, mass}, {w, mass}}, 0.0, nullptr,
        [w](Complex z) { return std::cos(w * z); }, [w](std::size_t n) { return cosine_taylor(w, n); });
}

FourierSymbol FourierSymbol::constant(Complex c) {
    return FourierSymbol(
        "constant", {{0.0, c / inv_sqrt_2pi}}, 0.0, nullptr, [c](Complex) { return c; },
        [c](std::size_t n) {
            if (c.imag() != 0.0) throw UnsupportedSymbol("complex constant has no real Taylor coefficients");
            std::vector<double> out(n + 1, 0.0);
            out[0] = c.real();
            return out;
        });
}

SymbolIntegral symbol_integral(const FourierSymbol& f, const std::function<Complex(double)>& g, double c,
                               const quad::QuadOptions& opts) {
    SymbolIntegral out{0.0, 0, true};
    for (const auto& atom : f.atoms()) out.value += atom.mass * std::exp(-c * atom.k * atom.k) * g(atom.k);
    if (f.has_continuous_part()) {
        const double rate = 1.0 / (4.0 * f.envelope()) + c;
        if (!(rate > 0.0)) throw DivergenceError("integrand is not Gaussian-damped");
        const double y = 1.0 / (4.0 * rate);
        const quad::QuadResult r =
            quad::gauss_weighted_integral([&](double k) { return f.shape(k) * g(k); }, y, opts);
        out.value += r.value;
        out.nodes = r.nodes;
        out.converged = r.converged;
    }
    out.value *= inv_sqrt_2pi;
    return out;
}

}  // namespace umbra::op
