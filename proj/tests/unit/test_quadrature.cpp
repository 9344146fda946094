#include "doctest.h"

#include <cmath>

#include "umbra/errors.hpp"
#include "umbra/quadrature.hpp"

using namespace umbra;
using namespace umbra::quad;

TEST_CASE("Gauss-Hermite rules pass their moment self-test") {
    for (std::size_t n : {2u, 3u, 8u, 33u, 128u, 256u, 512u, 1024u}) {
        const auto rule = QuadratureRule::gauss_hermite(n);
        CHECK(rule->nodes().size() <= n);
        CHECK(rule->family() == Family::gauss_hermite);
        CHECK(rule->node_count() == n);
        CHECK(rule->verified_moment() == n / 2 - 1);
        for (std::size_t i = 0; i < rule->nodes().size(); ++i) CHECK(rule->weights()[i] > 0.0);
    }
    CHECK(QuadratureRule::gauss_hermite(64) == QuadratureRule::gauss_hermite(64));
    CHECK_THROWS_AS(QuadratureRule::gauss_hermite(1), InvalidParameter);
}

TEST_CASE("independent moment check with direct powers") {
    const auto rule = QuadratureRule::gauss_hermite(40);
    for (int m = 0; m < 20; ++m) {
        const double s = rule->sum([m](double u) { return std::pow(u, 2 * m); });
        CHECK(s == doctest::Approx(std::tgamma(m + 0.5)).epsilon(1e-13));
        const double odd = rule->sum([m](double u) { return std::pow(u, 2 * m + 1); });
        CHECK(std::abs(odd) <= 1e-15 * std::tgamma(m + 1.0));
    }
}

TEST_CASE("gauss_weighted_integral") {
    for (double y : {0.1, 1.0, 3.0}) {
        const auto one = gauss_weighted_integral([](double) { return Complex(1.0); }, y);
        CHECK(one.value.real() == doctest::Approx(2.0 * std::sqrt(M_PI * y)).epsilon(1e-14));
        CHECK(one.converged);
        CHECK(one.nodes == 256);
        const auto k2 = gauss_weighted_integral([](double k) { return Complex(k * k); }, y);
        CHECK(k2.value.real() == doctest::Approx(2.0 * std::sqrt(M_PI * y) * 2.0 * y).epsilon(1e-14));
        const auto odd = gauss_weighted_integral([](double k) { return Complex(k); }, y);
        CHECK(std::abs(odd.value) <= 1e-15);
    }
    // Fourier pair of the Gaussian: int e^(-k^2/4) e^(ikx) dk = 2 sqrt(pi) e^(-x^2)
    const double x = 1.3;
    const auto ft = gauss_weighted_integral([x](double k) { return std::exp(Complex(0.0, k * x)); }, 1.0);
    CHECK(std::abs(ft.value - 2.0 * std::sqrt(M_PI) * std::exp(-x * x)) <= 1e-14);
    CHECK_THROWS_AS(gauss_weighted_integral([](double) { return Complex(1.0); }, 0.0), InvalidParameter);

    const auto slow = gauss_weighted_integral([](double k) { return std::exp(Complex(0.0, 40.0 * k)); }, 1.0,
                                              QuadOptions{16, 32, 1e-10});
    CHECK_FALSE(slow.converged);
}

TEST_CASE("composite Gauss-Legendre") {
    const auto rule = QuadratureRule::gauss_legendre_composite(0.0, 2.0, 3, 10);
    CHECK(rule.nodes().size() == 30);
    CHECK(rule.sum([](double x) { return std::pow(x, 19); }) == doctest::Approx(std::pow(2.0, 20) / 20.0).epsilon(1e-14));
    const auto r = legendre_integral([](double x) { return Complex(std::cos(25.0 * x)); }, -1.0, 3.0);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx((std::sin(75.0) + std::sin(25.0)) / 25.0).epsilon(1e-12));
}
