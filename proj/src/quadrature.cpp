#include "umbra/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "umbra/errors.hpp"

namespace umbra::quad {

namespace {

/// Relative tolerance of the moment self-test. Evaluating u^(2m) at a node
/// that is only known to machine precision already costs about 2m ulps, so
/// the bound widens linearly once 4e-15 (m + 1) exceeds 1e-13.
double moment_tolerance(std::size_t m) { return std::max(1e-13, 4e-15 * static_cast<double>(m + 1)); }
constexpr double log_underflow = -700.0;

/// Orthonormal Hermite polynomials (weight e^(-u^2)) up to index n at u,
/// rescaled as they grow. Returns p_n / p_(n-1) and log |p_(n-1)|.
struct HermiteTail {
    double ratio;
    double log_prev;
};

HermiteTail hermite_tail(std::size_t n, double u) {
    double prev = 0.0;
    double cur = 1.0;  // p_0 up to the factor pi^(-1/4)
    double log_scale = -0.25 * std::log(M_PI);
    for (std::size_t j = 0; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double next = std::sqrt(2.0 / (jd + 1.0)) * u * cur - std::sqrt(jd / (jd + 1.0)) * prev;
        prev = cur;
        cur = next;
        const double mag = std::abs(cur);
        if (mag > 1e150) {
            prev /= mag;
            cur /= mag;
            log_scale += std::log(mag);
        }
    }
    return {cur / prev, std::log(std::abs(prev)) + log_scale};
}

std::vector<double> tridiagonal_eigenvalues(std::size_t n) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
    for (std::size_t i = 1; i < n; ++i) sub[static_cast<Eigen::Index>(i - 1)] = std::sqrt(static_cast<double>(i) / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InternalConsistency("Gauss-Hermite eigenvalue solve failed");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

struct LegendreNodes {
    std::vector<double> x;
    std::vector<double> w;
};

LegendreNodes legendre_nodes(std::size_t n) {
    LegendreNodes out{std::vector<double>(n), std::vector<double>(n)};
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double jd = static_cast<double>(j);
                const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
                p0 = p1;
                p1 = p2;
            }
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        out.x[i] = x;
        out.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return out;
}

}  // namespace

std::shared_ptr<const QuadratureRule> QuadratureRule::gauss_hermite(std::size_t n) {
    if (n < 2) throw InvalidParameter("Gauss-Hermite rule needs at least two nodes");
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const QuadratureRule>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    std::vector<double> roots = tridiagonal_eigenvalues(n);
    std::vector<double> log_w(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = roots[i];
        for (int iter = 0; iter < 4; ++iter) {
            const HermiteTail t = hermite_tail(n, u);
            u -= t.ratio / std::sqrt(2.0 * static_cast<double>(n));
        }
        roots[i] = u;
        log_w[i] = -std::log(static_cast<double>(n)) - 2.0 * hermite_tail(n, u).log_prev;
    }
    // Exact symmetry of the rule keeps odd integrands at zero.
    for (std::size_t i = 0; i < n / 2; ++i) {
        const std::size_t j = n - 1 - i;
        const double u = 0.5 * (roots[j] - roots[i]);
        const double lw = 0.5 * (log_w[i] + log_w[j]);
        roots[i] = -u;
        roots[j] = u;
        log_w[i] = log_w[j] = lw;
    }
    if (n % 2 == 1) roots[n / 2] = 0.0;

    auto rule = std::shared_ptr<QuadratureRule>(new QuadratureRule(Family::gauss_hermite, n));
    for (std::size_t i = 0; i < n; ++i) {
        if (log_w[i] < log_underflow) continue;
        rule->nodes_.push_back(roots[i]);
        rule->weights_.push_back(std::exp(log_w[i]));
    }

    const std::size_t top = n / 2 - 1;
    for (std::size_t m = 0; m <= top; ++m) {
        const double lg = std::lgamma(static_cast<double>(m) + 0.5);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (roots[i] == 0.0) {
                if (m == 0) s += std::exp(log_w[i] - lg);
                continue;
            }
            s += std::exp(log_w[i] + 2.0 * static_cast<double>(m) * std::log(std::abs(roots[i])) - lg);
        }
        if (!(std::abs(s - 1.0) <= moment_tolerance(m))) {
            throw InternalConsistency("Gauss-Hermite rule with " + std::to_string(n) + " nodes misses moment " +
                                      std::to_string(2 * m) + " (relative error above tolerance)");
        }
    }
    rule->verified_moment_ = top;

    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(rule)).first->second;
}

QuadratureRule QuadratureRule::gauss_legendre_composite(double a, double b, std::size_t panels, std::size_t order) {
    if (panels == 0 || order == 0 || !(b > a)) throw InvalidParameter("Gauss-Legendre rule needs a < b and panels > 0");
    const LegendreNodes base = legendre_nodes(order);
    QuadratureRule rule(Family::gauss_legendre_composite, panels * order);
    const double width = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * width;
        for (std::size_t i = 0; i < order; ++i) {
            rule.nodes_.push_back(mid + 0.5 * width * base.x[i]);
            rule.weights_.push_back(0.5 * width * base.w[i]);
        }
    }
    return rule;
}

QuadResult gauss_weighted_integral(const std::function<Complex(double)>& h, double y, const QuadOptions& opts) {
    if (!(y > 0.0)) throw InvalidParameter("Gaussian variance parameter must be positive");
    const double scale = 2.0 * std::sqrt(y);
    auto eval = [&](std::size_t n) {
        return scale * QuadratureRule::gauss_hermite(n)->sum([&](double u) { return h(scale * u); });
    };
    std::size_t n = opts.initial_nodes;
    Complex prev = eval(n);
    while (2 * n <= opts.max_nodes) {
        n *= 2;
        const Complex cur = eval(n);
        if (std::abs(cur - prev) <= opts.tolerance * std::max(1.0, std::abs(cur))) return {cur, n, true};
        prev = cur;
    }
    return {prev, n, false};
}

QuadResult legendre_integral(const std::function<Complex(double)>& h, double a, double b, const QuadOptions& opts) {
    auto eval = [&](std::size_t panels) { return QuadratureRule::gauss_legendre_composite(a, b, panels).sum(h); };
    std::size_t panels = opts.initial_nodes;
    Complex prev = eval(panels);
    while (2 * panels <= opts.max_nodes) {
        panels *= 2;
        const Complex cur = eval(panels);
        if (std::abs(cur - prev) <= opts.tolerance * std::max(1.0, std::abs(cur))) return {cur, panels, true};
        prev = cur;
    }
    return {prev, panels, false};
}

}  // namespace umbra::quad
