#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra::quad {

enum class Family {
    gauss_hermite,             // weight e^(-u^2) on the real line
    gauss_legendre_composite,  // unit weight on a finite interval
};

/// Immutable node/weight table. Gauss-Hermite rules verify their even
/// moments against Gamma(m + 1/2) when built and throw InternalConsistency on
/// a mismatch.
class QuadratureRule {
public:
    static std::shared_ptr<const QuadratureRule> gauss_hermite(std::size_t node_count);
    /// `panels` copies of an `order`-point Gauss-Legendre rule on [a, b].
    static QuadratureRule gauss_legendre_composite(double a, double b, std::size_t panels, std::size_t order = 16);

    Family family() const noexcept { return family_; }
    /// Requested rule size; nodes whose weight underflows are dropped, so
    /// nodes().size() can be smaller for large Gauss-Hermite rules.
    std::size_t node_count() const noexcept { return node_count_; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    template <class Fn>
    auto sum(Fn&& fn) const -> decltype(fn(0.0)) {
        decltype(fn(0.0)) acc{};
        for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * fn(nodes_[i]);
        return acc;
    }

    /// Largest m for which the moment self-test sum w u^(2m) = Gamma(m + 1/2)
    /// was checked.
    std::size_t verified_moment() const noexcept { return verified_moment_; }

private:
    QuadratureRule(Family f, std::size_t n) : family_(f), node_count_(n) {}

    Family family_;
    std::size_t node_count_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::size_t verified_moment_ = 0;
};

struct QuadOptions {
    std::size_t initial_nodes = 128;
    std::size_t max_nodes = 1024;
    double tolerance = 1e-10;  // relative to max(1, |value|)
};

struct QuadResult {
    Complex value;
    std::size_t nodes = 0;   // node count of the accepted rule
    bool converged = true;   // false when max_nodes was reached first
};

/// int e^(-k^2/(4y)) h(k) dk over the real line, via k = 2 sqrt(y) u and
/// Gauss-Hermite rules doubled from `initial_nodes` until two successive
/// values agree. Throws InvalidParameter for y <= 0.
QuadResult gauss_weighted_integral(const std::function<Complex(double)>& h, double y, const QuadOptions& opts = {});

/// int_a^b h(k) dk with composite Gauss-Legendre, doubling the panel count
/// until two successive values agree.
QuadResult legendre_integral(const std::function<Complex(double)>& h, double a, double b,
                             const QuadOptions& opts = {8, 1024, 1e-12});

}  // namespace umbra::quad
