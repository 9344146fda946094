#include "doctest.h"

#include <cmath>

#include "umbra/oracle/gf_master.hpp"
#include "test_support.hpp"
#include "umbra/errors.hpp"
#include "umbra/specfun.hpp"

using namespace umbra;
using namespace umbra::gf;

namespace {

PowerSeries constant_series(Complex value, std::size_t order, SeriesKind kind) {
    return PowerSeries(std::vector<Complex>(order + 1, value), kind);
}

double err(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("series_eval") {
    SUBCASE("geometric series at one half") {
        for (std::size_t order : {4u, 10u, 40u}) {
            const auto r = series_eval(constant_series(1.0, order, SeriesKind::ordinary), 0.5, {1.0, 1.0});
            const double t = static_cast<double>(order);
            CHECK(r.value.real() == doctest::Approx(2.0 - std::pow(2.0, -t)).epsilon(1e-15));
            CHECK(r.tail_bound == doctest::Approx(std::pow(2.0, -t)).epsilon(1e-15));
            CHECK(2.0 - r.value.real() <= r.tail_bound * (1 + 1e-12));
        }
    }
    SUBCASE("exponential kind sums to e") {
        const auto r = series_eval(constant_series(1.0, 20, SeriesKind::exponential), 1.0, {1.0, 1.0});
        CHECK(std::abs(r.value.real() - std::exp(1.0)) <= r.tail_bound);
        CHECK(r.tail_bound < 1e-18);
    }
    SUBCASE("constant series with zero growth bound") {
        const auto r = series_eval(PowerSeries({Complex(3.5, -1.0)}), Complex(0.9, 0.2), {0.0, 1.0});
        CHECK(r.value == Complex(3.5, -1.0));
        CHECK(r.tail_bound == 0.0);
    }
    CHECK_THROWS_AS(series_eval(constant_series(1.0, 5, SeriesKind::ordinary), 1.0, {1.0, 1.0}), DivergenceError);
    CHECK_NOTHROW(series_eval(constant_series(1.0, 5, SeriesKind::exponential), 30.0, {1.0, 1.0}));
}

TEST_CASE("envelope_growth bounds the prefix") {
    std::vector<Complex> c;
    for (int n = 0; n <= 30; ++n) c.emplace_back(5.0 * std::pow(-1.5, n));
    const PowerSeries s(c);
    const Growth g = envelope_growth(s);
    CHECK(g.rate == doctest::Approx(1.5).epsilon(0.1));
    for (std::size_t n = 0; n < s.size(); ++n) CHECK(std::abs(s[n]) <= g.bound * std::pow(g.rate, n) * (1 + 1e-12));
}

TEST_CASE("series_derivative") {
    const PowerSeries ones = constant_series(1.0, 6, SeriesKind::ordinary);
    CHECK(series_derivative(ones, 0) == ones);
    const PowerSeries d = series_derivative(ones, 1);
    CHECK(d.truncation_order() == 5);
    for (std::size_t n = 0; n < d.size(); ++n) CHECK(d[n] == Complex(static_cast<double>(n + 1)));
    const PowerSeries x2 = series_derivative(PowerSeries({0.0, 0.0, 1.0}), 2);
    CHECK(x2.truncation_order() == 0);
    CHECK(x2[0] == Complex(2.0));
    // Exponential kind: derivative is a plain shift of the coefficients.
    const PowerSeries e = series_derivative(PowerSeries({1.0, 2.0, 3.0, 4.0}, SeriesKind::exponential), 2);
    CHECK(e[0] == Complex(3.0));
    CHECK(e[1] == Complex(4.0));
    CHECK_THROWS_AS(series_derivative(PowerSeries({1.0, 2.0}), 3), TruncationError);
}

TEST_CASE("sequence models expose consistent generating functions") {
    for (const auto& a : umbra::oracle::master_sequences()) {
        for (Complex z : {Complex(0.1, 0.0), Complex(-0.3, 0.2), Complex(0.0, -0.4)}) {
            for (unsigned r = 0; r <= 3; ++r) {
                Complex ogf = 0.0;
                Complex egf = 0.0;
                Complex zp = 1.0;
                double fact = 1.0;
                for (std::size_t n = r; n < 400; ++n) {
                    double fall = 1.0;
                    for (unsigned j = 0; j < r; ++j) fall *= static_cast<double>(n - j);
                    const double an = to_double(a.term(n));
                    ogf += an * fall * zp;
                    egf += an * zp / fact;
                    zp *= z;
                    fact *= static_cast<double>(n - r + 1);
                }
                CHECK(err(ogf_value(a, z, r), ogf) <= 1e-12 * std::max(1.0, std::abs(ogf)));
                CHECK(err(egf_value(a, z, r), egf) <= 1e-12 * std::max(1.0, std::abs(egf)));
            }
            Complex q = 0.0;
            Complex zp = 1.0;
            double fact = 1.0;
            for (std::size_t n = 0; n < 60; ++n) {
                q += to_double(a.term(n)) * zp / (fact * fact);
                zp *= z;
                fact *= static_cast<double>(n + 1);
            }
            CHECK(err(bessel_egf_value(a, z), q) <= 1e-13);
        }
    }
}

TEST_CASE("binomial closed forms") {
    const auto ones = SequenceModel::ones();
    for (double x : {-0.5, -0.1, 0.3, 0.45}) CHECK(err(binomial_gf_ordinary(ones, x), 1.0) <= 1e-15);
    const auto fixed = SequenceModel::finite(umbra::testing::make_seq({7, 2, -3}));
    CHECK(binomial_gf_ordinary(fixed, 0.0) == Complex(7.0));
    CHECK(binomial_gf_exponential(fixed, 0.0) == Complex(7.0));

    const auto two = SequenceModel::geometric(Rational(2));
    const Complex closed = binomial_gf_ordinary(two, 0.2);
    CHECK(closed.real() == doctest::Approx(1.0 / 1.2).epsilon(1e-14));
    // b_n = (-1)^n
    double series = 0.0;
    for (int n = 0; n < 80; ++n) series += std::pow(-0.2, n);
    CHECK(closed.real() == doctest::Approx(series).epsilon(1e-14));

    for (double x : {-2.0, 0.0, 1.5}) {
        CHECK(err(binomial_gf_exponential(ones, x), 1.0) <= 1e-14);
        CHECK(err(binomial_gf_exponential(SequenceModel::linear(), x), -x) <= 1e-13);
    }
    CHECK_THROWS_AS(binomial_gf_ordinary(ones, 1.0), DivergenceError);
    CHECK_THROWS_AS(binomial_gf_ordinary(two, 0.45), DivergenceError);  // -x/(1-x) leaves the radius 1/2
}

TEST_CASE("modular closed forms") {
    const auto lin = SequenceModel::linear();
    for (Complex x : {Complex(0.2, 0.0), Complex(-0.3, 0.1)}) {
        CHECK(err(modular_gf(lin, Rational(1), Rational(1), x, SeriesKind::ordinary), binomial_gf_ordinary(lin, x)) <=
              1e-15);
        CHECK(err(modular_gf(lin, Rational(1), Rational(1), x, SeriesKind::exponential),
                  binomial_gf_exponential(lin, x)) <= 1e-15);
    }
    CHECK(modular_gf(SequenceModel::ones(), Rational(2), Rational(1), 0.3, SeriesKind::exponential).real() ==
          doctest::Approx(std::exp(0.3)).epsilon(1e-15));
    const auto fixed = SequenceModel::finite(umbra::testing::make_seq({-4, 1}));
    CHECK(modular_gf(fixed, Rational(3), Rational(5), 0.0, SeriesKind::ordinary) == Complex(-4.0));
    CHECK_THROWS_AS(modular_gf(fixed, Rational(3), Rational(5), 0.4, SeriesKind::ordinary), DivergenceError);
}

TEST_CASE("k-binomial closed forms") {
    const auto ones = SequenceModel::ones();
    for (Complex x : {Complex(0.25, 0.0), Complex(-0.4, 0.2)}) {
        CHECK(err(k_binomial_gf(ones, 0, x, SeriesKind::ordinary), binomial_gf_ordinary(ones, x)) <= 1e-15);
        CHECK(err(k_binomial_gf(ones, 0, x, SeriesKind::exponential), binomial_gf_exponential(ones, x)) <= 1e-15);
    }
    CHECK(k_binomial_gf(ones, 1, 0.4, SeriesKind::exponential).real() == doctest::Approx(-0.4).epsilon(1e-14));

    // a_n = 1, k = 2: b = (0, -1, 2, 0, 0, ...) from the exact transform.
    const seq::Sequence b = seq::rising_k_binomial(ones.prefix(6), 2);
    CHECK(b == umbra::testing::make_seq({0, -1, 2, 0, 0, 0}));
    const double x = 0.25;
    CHECK(k_binomial_gf(ones, 2, x, SeriesKind::ordinary).real() ==
          doctest::Approx(-x + 2.0 * x * x).epsilon(1e-14));
}

TEST_CASE("Hermite closed forms") {
    const auto ones = SequenceModel::ones();
    const Rational alpha(3, 4);
    const Rational beta(-1, 2);
    for (double x : {-0.5, 0.2, 0.7}) {
        const Complex closed = hermite_gf(ones, alpha, beta, x, HermiteVariant::plain);
        CHECK(closed.real() == doctest::Approx(std::exp(0.75 * x - 0.5 * x * x)).epsilon(1e-14));
        double series = 0.0;
        double xn = 1.0;
        for (unsigned n = 0; n < 40; ++n) {
            series += specfun::hermite2(n, 0.75, -0.5) * xn;
            xn *= x / (n + 1.0);
        }
        CHECK(closed.real() == doctest::Approx(series).epsilon(1e-13));
        const auto lin = SequenceModel::linear();
        CHECK(err(hermite_gf(lin, alpha, Rational(0), x, HermiteVariant::complementary), egf_value(lin, 0.75 * x)) <=
              1e-15);
    }
    const auto fixed = SequenceModel::finite(umbra::testing::make_seq({9, 4}));
    CHECK(hermite_gf(fixed, alpha, beta, 0.0, HermiteVariant::plain) == Complex(9.0));
    CHECK(hermite_gf(fixed, alpha, beta, 0.0, HermiteVariant::complementary) == Complex(9.0));
}

TEST_CASE("Laguerre closed forms at alpha = beta = 1") {
    const auto ones = SequenceModel::ones();
    for (int i = 0; i <= 10; ++i) {
        const double x = 0.05 * i;
        const Complex e = laguerre_gf(ones, Rational(1), Rational(1), x, SeriesKind::exponential);
        CHECK(std::abs(e - std::exp(x) * std::cyl_bessel_j(0.0, 2.0 * std::sqrt(x))) <= 1e-12);
        const Complex o = laguerre_gf(ones, Rational(1), Rational(1), x, SeriesKind::ordinary);
        CHECK(std::abs(o - std::exp(-x / (1.0 - x)) / (1.0 - x)) <= 1e-12);
    }
    // alpha enters the Bessel argument: e^(beta x) C_0(alpha x).
    const Complex e = laguerre_gf(ones, Rational(2), Rational(1, 3), 0.4, SeriesKind::exponential);
    CHECK(std::abs(e - std::exp(0.4 / 3.0) * std::cyl_bessel_j(0.0, 2.0 * std::sqrt(0.8))) <= 1e-12);
    const auto fixed = SequenceModel::finite(umbra::testing::make_seq({-2, 1}));
    CHECK(laguerre_gf(fixed, Rational(1), Rational(1), 0.0, SeriesKind::ordinary) == Complex(-2.0));
    CHECK_THROWS_AS(laguerre_gf(ones, Rational(1), Rational(3), 0.4, SeriesKind::ordinary), DivergenceError);
}

TEST_CASE("master property: closed forms against transformed series") {
    const auto results = umbra::oracle::run_master_property();
    CHECK(results.size() == umbra::oracle::master_transforms().size() * 5 * 20);
    std::size_t failures = 0;
    for (const auto& r : results) {
        if (!r.agrees(1e-10)) {
            ++failures;
            MESSAGE(r.transform << " " << r.sequence << " x=" << r.x << " diff=" << r.difference()
                                << " tail=" << r.tail_bound);
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("k-binomial property for k = 0..3") {
    std::size_t failures = 0;
    for (const auto& r : umbra::oracle::run_k_binomial_property()) {
        if (!r.agrees(1e-10)) {
            ++failures;
            MESSAGE(r.transform << " " << r.sequence << " x=" << r.x << " diff=" << r.difference()
                                << " tail=" << r.tail_bound);
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("binomial map is an involution on functions") {
    const std::vector<std::function<Complex(Complex)>> fs = {
        [](Complex z) { return std::exp(z); },
        [](Complex z) { return std::cos(3.0 * z) + z * z; },
        [](Complex z) { return 1.0 / (2.0 - z); },
    };
    for (const auto& f : fs) {
        for (Complex x : {Complex(0.3, 0.0), Complex(-0.7, 0.2), Complex(0.1, -0.45), Complex(0.0, 0.0)}) {
            const auto once = [&f](Complex z) { return binomial_ogf_map(f, z); };
            CHECK(err(binomial_ogf_map(once, x), f(x)) <= 1e-12);
        }
    }
}

TEST_CASE("Euler operator powers expand through Stirling numbers") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> poly(1 + rng() % 12);
        for (auto& c : poly) c = umbra::testing::random_rational(rng, 1000);
        for (unsigned n = 0; n <= 8; ++n) CHECK(euler_operator_power(poly, n) == stirling_operator_expansion(poly, n));
    }
    // (t d/dt)^2 t^3 = 9 t^3
    CHECK(euler_operator_power({0, 0, 0, 1}, 2) == std::vector<Rational>{0, 0, 0, 9});
}
