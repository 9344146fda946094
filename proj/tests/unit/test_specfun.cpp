#include "doctest.h"

#include <cmath>

#include "test_support.hpp"
#include "umbra/specfun.hpp"

using namespace umbra;
using namespace umbra::specfun;

TEST_CASE("two-variable Hermite polynomials") {
    CHECK(hermite2(0, Rational(3), Rational(-7)) == 1);
    for (int x = -3; x <= 3; ++x) {
        for (int y = -3; y <= 3; ++y) CHECK(hermite2(2, Rational(x), Rational(y)) == Rational(x * x + 2 * y));
    }
    CHECK(hermite2(3, Rational(2), Rational(1)) == 20);

    SUBCASE("special arguments") {
        const Rational x(-5, 3);
        const Rational y(7, 2);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(hermite2(n, x, Rational(0)) == pow(x, n));
            const Rational expected = (n % 2 == 1) ? Rational(0)
                                                   : Rational(factorial(n)) / Rational(factorial(n / 2)) * pow(y, n / 2);
            CHECK(hermite2(n, Rational(0), y) == expected);
        }
    }

    SUBCASE("generating function") {
        for (double t : {-0.5, -0.2, 0.1, 0.5}) {
            for (double x : {-1.0, 0.3, 1.0}) {
                for (double y : {-1.0, 0.0, 0.7}) {
                    double sum = 0.0;
                    double tn_over_fact = 1.0;
                    for (unsigned n = 0; n <= 40; ++n) {
                        sum += tn_over_fact * hermite2(n, x, y);
                        tn_over_fact *= t / (n + 1.0);
                    }
                    CHECK(sum == doctest::Approx(std::exp(x * t + y * t * t)).epsilon(1e-12));
                }
            }
        }
    }

    SUBCASE("exact and floating paths agree") {
        for (unsigned n = 0; n <= 15; ++n) {
            const double exact = to_double(hermite2(n, Rational(3, 4), Rational(-2, 5)));
            CHECK(hermite2(n, 0.75, -0.4) == doctest::Approx(exact).epsilon(1e-13));
            const Complex c = hermite2(n, Complex(0.75, 0.0), Complex(-0.4, 0.0));
            CHECK(c.real() == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("addition theorem residual is exactly zero") {
    CHECK(hermite_addition_check(0, Rational(1), Rational(2), Rational(3)) == 0);
    CHECK(hermite_addition_check(2, Rational(1), Rational(1), Rational(1)) == 0);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<unsigned>(rng() % 11);
        CHECK(hermite_addition_check(n, umbra::testing::random_rational(rng, 1000), umbra::testing::random_rational(rng, 1000),
                                     umbra::testing::random_rational(rng, 1000)) == 0);
    }
}

TEST_CASE("two-variable Laguerre polynomials") {
    CHECK(laguerre2(0, Rational(5), Rational(3)) == 1);
    CHECK(laguerre2(1, Rational(5), Rational(3)) == Rational(3 - 5));
    CHECK(laguerre2(2, Rational(1), Rational(1)) == Rational(-1, 2));

    // Classical three-term recurrence (n+1) L_(n+1) = (2n+1-x) L_n - n L_(n-1).
    for (const Rational& x : {Rational(1), Rational(-3, 7), Rational(9, 2)}) {
        Rational prev = 1;
        Rational cur = 1 - x;
        CHECK(laguerre2(1, x, Rational(1)) == cur);
        for (unsigned n = 1; n < 20; ++n) {
            const Rational next = ((2 * n + 1 - x) * cur - n * prev) / (n + 1);
            CHECK(laguerre2(n + 1, x, Rational(1)) == next);
            prev = cur;
            cur = next;
        }
    }
    // homogeneity: L_n(x, y) = y^n L_n(x/y, 1)
    for (unsigned n = 0; n < 10; ++n) {
        const Rational x(4, 3);
        const Rational y(-5, 2);
        CHECK(laguerre2(n, x, y) == pow(y, n) * laguerre2(n, Rational(x / y), Rational(1)));
    }
}

TEST_CASE("Tricomi-Bessel functions") {
    CHECK(tricomi_c(0, 0.0) == Complex(1.0));
    CHECK(tricomi_c(1, 0.0) == Complex(1.0));
    CHECK(tricomi_c(3, 0.0).real() == doctest::Approx(1.0 / 6.0));

    for (double x : {0.25, 1.0, 2.0, 7.5, 20.0}) {
        const double j0 = std::cyl_bessel_j(0.0, 2.0 * std::sqrt(x));
        CHECK(std::abs(tricomi_c(0, x) - j0) <= 1e-12);
    }
    for (double x : {0.5, 3.0}) {
        const double j2 = std::cyl_bessel_j(2.0, 2.0 * std::sqrt(x));
        CHECK(std::abs(tricomi_c(2, x) - j2 / x) <= 1e-12);  // C_n(x) = x^(-n/2) J_n(2 sqrt x)
    }

    SUBCASE("shift relation by finite differences") {
        const double h = 1e-5;
        for (unsigned n = 0; n < 5; ++n) {
            for (double x : {-1.0, 0.3, 2.0}) {
                const Complex d = (tricomi_c(n, x + h) - tricomi_c(n, x - h)) / (2.0 * h);
                CHECK(std::abs(d + tricomi_c(n + 1, x)) <= 1e-8);
            }
        }
    }

    SUBCASE("shift relation termwise") {
        for (unsigned n = 0; n < 6; ++n) {
            const auto cn = tricomi_c_coefficients(n, 30);
            const auto cn1 = tricomi_c_coefficients(n + 1, 29);
            for (std::size_t r = 0; r < 30; ++r) CHECK(Rational(cn[r + 1] * Rational(r + 1)) == -cn1[r]);
        }
    }

    SUBCASE("complex arguments match the coefficient sum") {
        const auto c = tricomi_c_coefficients(2, 60);
        const Complex x(0.3, -1.7);
        Complex sum = 0.0;
        Complex xp = 1.0;
        for (const auto& v : c) {
            sum += to_double(v) * xp;
            xp *= x;
        }
        CHECK(std::abs(tricomi_c(2, x) - sum) <= 1e-14);
    }
}

TEST_CASE("Stirling numbers of the second kind") {
    for (unsigned n = 1; n < 12; ++n) CHECK(stirling2(1, n) == 1);
    CHECK(stirling2(2, 3) == 3);
    CHECK(stirling2(3, 3) == 1);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(0, 4) == 0);
    CHECK(stirling2(5, 3) == 0);

    const Stirling2Table table(25);
    SUBCASE("recurrence S2(k, n+1) = k S2(k, n) + S2(k-1, n)") {
        for (unsigned n = 0; n < 25; ++n) {
            for (unsigned k = 1; k <= n + 1; ++k) {
                CHECK(table(k, n + 1) == Integer(k * table(k, n) + table(k - 1, n)));
            }
        }
    }
    SUBCASE("falling-factorial rows reproduce powers") {
        for (unsigned n = 0; n <= 25; ++n) {
            for (unsigned x = 0; x <= 30; x += 3) {
                Integer acc = 0;
                for (unsigned k = 0; k <= n; ++k) acc += table(k, n) * falling_factorial(x, k);
                Integer xn;
                mpz_ui_pow_ui(xn.get_mpz_t(), x, n);
                CHECK(acc == xn);
            }
        }
    }
    CHECK_THROWS(table(1, 26));
}
