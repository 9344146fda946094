#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "umbra/errors.hpp"
#include "umbra/opcalc.hpp"
#include "umbra/specfun.hpp"

namespace umbra::op {

namespace {

constexpr Complex I(0.0, 1.0);
constexpr double boundary_tolerance = 1e-12;
constexpr double region_limit = 0.5;

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void check_integro_parameters(unsigned m, double tau, double x) {
    if (m == 0) throw InvalidParameter("m must be a positive even integer");
    if (m % 2 == 1) throw UnsupportedSymbol("odd m: e^(-tau z^m) has no Fourier transform");
    if (tau < 0.0) throw InvalidParameter("tau must be nonnegative");
    if (std::abs(x) > region_limit) throw TruncationError("|x| beyond the truncation-controlled region 0.5");
}

/// Symmetric k-range outside which e~_m(k) e^(-beta k^2/2) is below e^-36,
/// from the saddle-point envelope exp(-c tau^(-1/(m-1)) |k|^(m/(m-1))).
double k_extent(unsigned m, double tau, double beta) {
    const double md = static_cast<double>(m);
    const double p = md / (md - 1.0);
    const double c = (md - 1.0) * std::pow(md, -p) * std::sin(M_PI / (2.0 * (md - 1.0)));
    const auto decay = [&](double k) { return c * std::pow(tau, -1.0 / (md - 1.0)) * std::pow(k, p) + 0.5 * beta * k * k; };
    double hi = 1.0;
    while (decay(hi) < 36.0) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (decay(mid) < 36.0 ? lo : hi) = mid;
    }
    return hi;
}

OpValue integro_generic(const std::function<Complex(double)>& evolved, double beta, unsigned m, double tau) {
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
    if (m == 2) {
        const double rate = 1.0 / (4.0 * tau) + 0.5 * beta;
        const quad::QuadResult r = quad::gauss_weighted_integral(evolved, 1.0 / (4.0 * rate));
        return {r.value * inv_sqrt_2pi / std::sqrt(2.0 * tau), r.nodes, r.converged};
    }
    const double extent = k_extent(m, tau, beta);
    const quad::QuadResult r = quad::legendre_integral(
        [&](double k) { return e_tilde(m, k, tau) * std::exp(-0.5 * beta * k * k) * evolved(k); }, -extent, extent,
        {8, 256, 1e-10});
    return {r.value * inv_sqrt_2pi, r.nodes, r.converged};
}

}  // namespace

GridFunction::GridFunction(double half_width, std::vector<Complex> samples)
    : half_width_(half_width), samples_(std::move(samples)) {
    if (!is_power_of_two(samples_.size())) throw InvalidParameter("grid size must be a power of two");
    if (!(half_width_ > 0.0)) throw InvalidParameter("grid half-width must be positive");
}

GridFunction GridFunction::sample(const std::function<Complex(double)>& f, double half_width, std::size_t n) {
    if (!is_power_of_two(n)) throw InvalidParameter("grid size must be a power of two");
    std::vector<Complex> s(n);
    const double h = 2.0 * half_width / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = f((static_cast<double>(j) - static_cast<double>(n / 2)) * h);
    return GridFunction(half_width, std::move(s));
}

double GridFunction::x(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(samples_.size() / 2)) * spacing();
}

GridFunction heat_evolve_ft(const GridFunction& f, double alpha) {
    if (alpha < 0.0) throw InvalidParameter("heat evolution needs alpha >= 0");
    const std::size_t n = f.size();
    if (std::abs(f[0]) > boundary_tolerance || std::abs(f[n - 1]) > boundary_tolerance) {
        throw DomainTooSmall("initial data does not decay below 1e-12 at the grid boundary");
    }
    if (alpha == 0.0) return f;
    fftw_complex* buf = fftw_alloc_complex(n);
    fftw_plan forward;
    fftw_plan backward;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        forward = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (std::size_t j = 0; j < n; ++j) {
        buf[j][0] = f[j].real();
        buf[j][1] = f[j].imag();
    }
    fftw_execute(forward);
    const double dk = 2.0 * M_PI / (static_cast<double>(n) * f.spacing());
    for (std::size_t j = 0; j < n; ++j) {
        const double idx = j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n);
        const double k = idx * dk;
        const double damp = std::exp(-alpha * k * k) / static_cast<double>(n);
        buf[j][0] *= damp;
        buf[j][1] *= damp;
    }
    fftw_execute(backward);
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = Complex(buf[j][0], buf[j][1]);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }
    fftw_free(buf);
    return GridFunction(f.half_width(), std::move(out));
}

OpValue tricomi_evolution(double x, double tau) {
    if (tau < 0.0) throw InvalidParameter("tau must be nonnegative");
    if (tau == 0.0) return {Complex(1.0), 0, true};
    const quad::QuadResult r =
        quad::gauss_weighted_integral([x](double k) { return specfun::tricomi_c(0, Complex(0.0, -k * x)); }, tau);
    return {r.value / (2.0 * std::sqrt(M_PI * tau)), r.nodes, r.converged};
}

double e_tilde(unsigned m, double k, double tau) {
    if (m == 0 || m % 2 == 1) throw UnsupportedSymbol("e~_m needs a positive even m");
    if (!(tau > 0.0)) throw InvalidParameter("e~_m needs tau > 0");
    if (m == 2) return std::exp(-k * k / (4.0 * tau)) / std::sqrt(2.0 * tau);
    const double md = static_cast<double>(m);
    const double z_max = std::pow(40.0 / tau, 1.0 / md);
    const quad::QuadResult r = quad::legendre_integral(
        [=](double z) { return Complex(std::exp(-tau * std::pow(z, md)) * std::cos(k * z)); }, 0.0, z_max,
        {8, 1024, 1e-13});
    return 2.0 * r.value.real() / std::sqrt(2.0 * M_PI);
}

OpValue integro_diff_evolve(const PowerSeries& f, double beta, unsigned m, double tau, double x) {
    check_integro_parameters(m, tau, x);
    if (f.kind() != SeriesKind::ordinary) throw InvalidParameter("integro_diff_evolve expects an ordinary series");
    if (tau == 0.0) return {evaluate_truncated(f, Complex(x)), 0, true};
    const auto evolved = [&](double k) {
        // e^(ik LD) f by the Borel route, then e^(i beta k D^-1) x^j = j! x^j C_j(-i beta k x).
        const PowerSeries p = exp_laguerre_derivative(Complex(0.0, k), f);
        Complex acc = 0.0;
        double jfact_xj = 1.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j > 0) jfact_xj *= static_cast<double>(j) * x;
            acc += p[j] * jfact_xj * specfun::tricomi_c(static_cast<unsigned>(j), Complex(0.0, -beta * k * x));
        }
        return acc;
    };
    return integro_generic(evolved, beta, m, tau);
}

OpValue integro_diff_evolve_c0(double beta, unsigned m, double tau, double x) {
    check_integro_parameters(m, tau, x);
    if (tau == 0.0) return {specfun::tricomi_c(0, Complex(x)), 0, true};
    const auto evolved = [&](double k) {
        return std::exp(-I * k) * specfun::tricomi_c(0, Complex(x, -beta * k * x));
    };
    return integro_generic(evolved, beta, m, tau);
}

}  // namespace umbra::op
