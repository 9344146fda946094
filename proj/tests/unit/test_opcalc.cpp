#include "doctest.h"

#include <chrono>
#include <cmath>

#include "umbra/errors.hpp"
#include "umbra/opcalc.hpp"
#include "umbra/oracle/operators.hpp"
#include "umbra/specfun.hpp"

using namespace umbra;
using namespace umbra::op;

namespace {

ExactSeries exact(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return ExactSeries(std::move(v));
}

ExactSeries c0_exact(std::size_t order) { return ExactSeries(specfun::tricomi_c_coefficients(0, order)); }

double max_entry_diff(const Matrix2& a, const oracle::Matrix2& b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    }
    return d;
}

}  // namespace

TEST_CASE("heat evolution widens a Gaussian") {
    const auto f = GridFunction::sample([](double x) { return Complex(std::exp(-x * x / 2.0)); }, 20.0, 1024);
    const GridFunction g = heat_evolve_ft(f, 0.5);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double x = g.x(j);
        worst = std::max(worst, std::abs(g[j] - std::exp(-x * x / 4.0) / std::sqrt(2.0)));
    }
    CHECK(worst <= 1e-6);

    const GridFunction same = heat_evolve_ft(f, 0.0);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(same[j] == f[j]);

    const auto h = GridFunction::sample([](double x) { return Complex(x * std::exp(-(x - 1) * (x - 1))); }, 20.0, 1024);
    std::vector<Complex> sum(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) sum[j] = f[j] + h[j];
    const GridFunction lhs = heat_evolve_ft(GridFunction(20.0, sum), 0.3);
    const GridFunction a = heat_evolve_ft(f, 0.3);
    const GridFunction b = heat_evolve_ft(h, 0.3);
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(lhs[j] - a[j] - b[j]) <= 1e-12);
}

TEST_CASE("heat evolution guards") {
    const auto wide = GridFunction::sample([](double x) { return Complex(std::exp(-x * x / 50.0)); }, 5.0, 256);
    CHECK_THROWS_AS(heat_evolve_ft(wide, 0.5), DomainTooSmall);
    const auto f = GridFunction::sample([](double x) { return Complex(std::exp(-x * x)); }, 10.0, 256);
    CHECK_THROWS_AS(heat_evolve_ft(f, -1.0), InvalidParameter);
    CHECK_THROWS_AS(GridFunction(1.0, std::vector<Complex>(100)), InvalidParameter);
    CHECK(f.x(128) == 0.0);
    CHECK(f.x(0) == -10.0);
}

TEST_CASE("shift transform with a Gaussian symbol gives Hermite polynomials") {
    CHECK(std::abs(hermite_integral(2, 1.0, 0.5).value) <= 1e-12);
    CHECK(std::abs(hermite_integral(3, 1.0, 1.0).value - (-5.0)) <= 1e-12);
    CHECK(std::abs(hermite_integral(0, 1.7, 0.3).value - 1.0) <= 1e-14);

    const auto start = std::chrono::steady_clock::now();
    double worst_h = 0.0;
    double worst_m = 0.0;
    for (unsigned n = 0; n <= 10; ++n) {
        for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
            for (double y : {0.1, 0.575, 1.05, 1.525, 2.0}) {
                const Complex expect_h = specfun::hermite2(n, Complex(x), Complex(-y));
                worst_h = std::max(worst_h, std::abs(hermite_integral(n, x, y).value - expect_h));
                worst_m = std::max(worst_m, std::abs(monomial_from_hermite(n, x, y).value - std::pow(x, n)));
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(worst_h <= 1e-8);
    CHECK(worst_m <= 1e-8);
    CHECK(seconds < 10.0);
}

TEST_CASE("monomials from Hermite integrals") {
    CHECK(std::abs(monomial_from_hermite(0, 0.4, 0.7).value - 1.0) <= 1e-14);
    const Complex v = monomial_from_hermite(1, 0.4, 0.7).value;
    CHECK(std::abs(v.real() - 0.4) <= 1e-12);
    CHECK(std::abs(v.imag()) <= 1e-14);
    CHECK(std::abs(monomial_from_hermite(2, 1.0, 1.0).value - 1.0) <= 1e-8);
}

TEST_CASE("Gabor-like transform against the operator Taylor series") {
    const double s = 1.0;
    const FourierSymbol phi = FourierSymbol::gaussian(s);
    const auto taylor = oracle::gaussian_taylor(s, 120);

    // beta = 0 reduces to the plain shift transform, Phi(alpha d) = e^(-s alpha^2 d^2)
    const std::vector<Complex> g = {0.5, -1.0, 0.25};
    const Complex shift = phi_shift_transform(
                              FourierSymbol::gaussian(s * 0.49), [&](Complex z) { return g[0] + g[1] * z + g[2] * z * z; }, 0.3)
                              .value;
    CHECK(std::abs(gabor_like_transform(phi, g, 0.7, 0.0, 0.3).value - shift) <= 1e-14);

    const std::vector<oracle::OperatorMonomial> op = {{0.5, 0, 1}, {0.5, 1, 0}};
    const Complex one = gabor_like_transform(phi, {1.0}, 0.5, 0.5, 0.3).value;
    CHECK(std::abs(one - oracle::operator_taylor_series(taylor, op, {1.0}, 0.3)) <= 1e-8);
    const Complex lin = gabor_like_transform(phi, {0.0, 1.0}, 0.5, 0.5, 0.3).value;
    CHECK(std::abs(lin - oracle::operator_taylor_series(taylor, op, {0.0, 1.0}, 0.3)) <= 1e-8);

    CHECK_THROWS_AS(gabor_like_transform(FourierSymbol::gaussian(0.1), {1.0}, 3.0, -3.0, 0.3), DivergenceError);
}

TEST_CASE("Weyl decoupling holds exactly") {
    CHECK(weyl_check(Rational(0), Rational(3, 2), 8) == 0);
    CHECK(weyl_check(Rational(-2, 5), Rational(0), 8) == 0);
    CHECK(weyl_check(Rational(1), Rational(1), 8) == 0);
    CHECK(weyl_check(Rational(2, 3), Rational(-5, 7), 12) == 0);
    CHECK_THROWS_AS(weyl_check(Rational(1), Rational(1), 17), InvalidParameter);
}

TEST_CASE("cubic disentanglement") {
    CHECK(cubic_disentangle_check(Rational(1), Rational(0), 8) == 0);
    CHECK(cubic_disentangle_check(Rational(0), Rational(1), 8) == 0);
    CHECK(cubic_disentangle_check(Rational(1), Rational(1), 6) == 0);
    CHECK(cubic_disentangle_check(Rational(1), Rational(1), 8) == 0);
    CHECK(cubic_disentangle_check(Rational(4, 9), Rational(-3, 2), 8) == 0);
    CHECK(cubic_disentangle_check(Rational(1, 4), Rational(1, 4), 10) == 0);

    // The printed alpha^2 coincides with sqrt(alpha) at alpha = 1; away from it the residual is nonzero.
    CHECK(cubic_disentangle_check(Rational(1), Rational(1), 8, CubicForm::printed_m) == 0);
    CHECK(cubic_disentangle_check(Rational(4), Rational(1), 8, CubicForm::printed_m) > 0);
    CHECK(cubic_disentangle_check(Rational(1), Rational(1), 8, CubicForm::printed_ordered) > 0);

    CHECK_THROWS_AS(cubic_disentangle_check(Rational(2), Rational(1), 6), InvalidParameter);
    CHECK_THROWS_AS(cubic_disentangle_check(Rational(1), Rational(1), 11), InvalidParameter);
}

TEST_CASE("operator on a monomial") {
    const FourierSymbol f = FourierSymbol::gaussian(1.0);
    CHECK(std::abs(O_on_monomial(f, 0.6, 0.0, 0, 0.8).value - 1.0) <= 1e-14);

    // beta = 0: f(alpha d^2) = e^(-alpha^2 d^4), which fixes x^2 and sends x^4 to x^4 - 24 alpha^2.
    CHECK(std::abs(O_on_monomial(f, 0.5, 0.0, 2, 1.0).value - 1.0) <= 1e-12);
    CHECK(std::abs(O_on_monomial(f, 0.5, 0.0, 4, 1.0).value - (-5.0)) <= 1e-12);

    const auto taylor = oracle::gaussian_taylor(1.0, 160);
    for (unsigned n : {0u, 1u, 2u, 3u}) {
        const std::vector<oracle::OperatorMonomial> op = {{0.25, 0, 2}, {0.25, 1, 0}};
        std::vector<double> mono(n + 1, 0.0);
        mono[n] = 1.0;
        const Complex expect = oracle::operator_taylor_series(taylor, op, mono, 0.5);
        CHECK(std::abs(O_on_monomial(f, 0.25, 0.25, n, 0.5).value - expect) <= 1e-7);
    }
    const Complex derived = O_on_monomial(f, 0.25, 0.25, 1, 0.5).value;
    CHECK(std::abs(derived - 0.37268538138857) <= 1e-10);
    const Complex printed = O_on_monomial(f, 0.25, 0.25, 1, 0.5, true).value;
    CHECK(std::abs(printed - derived) > 1e-3);
}

TEST_CASE("Pauli matrix functions against the spectral oracle") {
    const FourierSymbol gauss = FourierSymbol::gaussian(1.0);
    const FourierSymbol damped = FourierSymbol::cos_gaussian(0.5, 1.3);
    for (double omega : {0.0, 0.7, 1.0, 2.0}) {
        const auto m = pauli_generator(omega);
        const oracle::Matrix2 om = {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
        for (const FourierSymbol* f : {&gauss, &damped}) {
            const auto expect = oracle::spectral_matrix_function([f](Complex z) { return f->value(z); }, om);
            CHECK(max_entry_diff(matrix_function_pauli(*f, omega), expect) <= 1e-8);
        }
    }
    const Matrix2 at_one = matrix_function_pauli(gauss, 1.0);
    CHECK(std::abs(at_one[0][0] - std::exp(-1.0)) <= 1e-12);
    CHECK(std::abs(at_one[1][1] - std::exp(-1.0)) <= 1e-12);
    CHECK(std::abs(at_one[0][1]) <= 1e-14);
    CHECK(std::abs(at_one[1][0]) <= 1e-14);

    const Matrix2 zero = matrix_function_pauli(damped, 0.0);
    CHECK(std::abs(zero[0][0] - 1.0) <= 1e-12);
    CHECK(std::abs(zero[0][1]) <= 1e-15);

    const Matrix2 c = matrix_function_pauli(FourierSymbol::cosine(1.0), 0.7);
    CHECK(std::abs(c[0][0] - std::cos(0.7)) <= 1e-14);
    CHECK(std::abs(c[1][1] - std::cos(0.7)) <= 1e-14);
    CHECK(std::abs(c[0][1]) <= 1e-14);
}

TEST_CASE("negative derivative, Tricomi functions and Borel transform") {
    CHECK(neg_derivative_pow(exact({1}), 1) == exact({0, 1}));
    CHECK(neg_derivative_pow(exact({1}), 2) == ExactSeries({Rational(0), Rational(0), Rational(1, 2)}));
    CHECK(neg_derivative_pow(exact({0, 0, 1}), 1) == ExactSeries({0, 0, 0, Rational(1, 3)}));

    CHECK(exp_negD(Rational(1), exact({1}), 12) == c0_exact(12));
    CHECK(exp_negD(Rational(0), exact({2, -1, 3}), 2) == exact({2, -1, 3}));
    const ExactSeries c1 = exp_negD(Rational(1), exact({0, 1}), 10);
    const auto c1_coeffs = specfun::tricomi_c_coefficients(1, 9);
    for (std::size_t r = 0; r <= 9; ++r) CHECK(c1[r + 1] == c1_coeffs[r]);
    CHECK(c1[2] == Rational(-1, 2));
    CHECK(c1[3] == Rational(1, 12));

    // x^2 -> 2! x^2 C_2(alpha x) with alpha = 1/2 (the argument keeps alpha)
    const ExactSeries e2 = exp_negD(Rational(1, 2), exact({0, 0, 1}), 8);
    const auto c2 = specfun::tricomi_c_coefficients(2, 6);
    for (std::size_t r = 0; r <= 6; ++r) CHECK(e2[r + 2] == Rational(2 * c2[r] * pow(Rational(1, 2), static_cast<long>(r))));

    CHECK(laguerre_derivative(exact({0, 1})) == exact({1}));
    CHECK(laguerre_derivative(exact({0, 0, 1})) == exact({0, 4}));
    const ExactSeries c0 = c0_exact(20);
    const ExactSeries lc0 = laguerre_derivative(c0);
    for (std::size_t n = 0; n < lc0.size(); ++n) CHECK(lc0[n] == -c0[n]);

    const ExactSeries b = borel_transform(c0);
    Rational expect = 1;
    for (std::size_t n = 0; n < b.size(); ++n) {
        CHECK(b[n] == expect);
        expect /= -static_cast<long>(n + 1);
    }
    CHECK(borel_transform(exact({1})) == exact({1}));
    CHECK(borel_transform(exact({0, 0, 1})) == exact({0, 0, 2}));
}

TEST_CASE("Laguerre derivative and D^-1 commute to the identity") {
    CHECK(commutator_check_LD(exact({0, 1})) == ExactSeries::zero(1));
    CHECK(commutator_check_LD(exact({0, 0, 0, 1})) == ExactSeries::zero(3));
    CHECK(commutator_check_LD(ExactSeries({0, Rational(2, 3), -5, Rational(1, 7), 9})) == ExactSeries::zero(4));
    CHECK_THROWS_AS(commutator_check_LD(exact({1, 1})), PreconditionError);
    // The relation also holds on the constant term, so the unchecked residual vanishes.
    CHECK(commutator_residual(exact({1, 1})) == ExactSeries::zero(1));
}

TEST_CASE("exponential of the Laguerre derivative") {
    const ExactSeries f = exact({3, -1, 4, 1, -5});
    CHECK(exp_laguerre_derivative(Rational(0), f) == f);
    CHECK(exp_laguerre_derivative(Rational(0), f, LaguerreRoute::matrix) == f);

    for (const Rational& alpha : {Rational(1), Rational(-2, 3), Rational(5, 2)}) {
        CHECK(exp_laguerre_derivative(alpha, f) == exp_laguerre_derivative(alpha, f, LaguerreRoute::matrix));
    }
    const PowerSeries x = PowerSeries({0.0, 1.0});
    const PowerSeries bx = exp_laguerre_derivative(Complex(1.0), x);
    const PowerSeries mx = exp_laguerre_derivative(Complex(1.0), x, LaguerreRoute::matrix);
    for (std::size_t n = 0; n < bx.size(); ++n) CHECK(std::abs(bx[n] - mx[n]) <= 1e-10);
    CHECK(std::abs(bx[0] - 1.0) <= 1e-15);

    // C_0 is an eigenfunction; the truncation only disturbs nothing because LD lowers the degree.
    const ExactSeries c0 = c0_exact(24);
    const Rational alpha(1, 3);
    const ExactSeries ev = exp_laguerre_derivative(alpha, c0);
    // e^(-alpha) C_0 coefficients through the exact truncated series: compare as floats
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(std::abs(ev[n].get_d() - std::exp(-1.0 / 3.0) * c0[n].get_d()) <= 1e-12 * std::abs(c0[n].get_d()) + 1e-300);
    }
    const PowerSeries evm = exp_laguerre_derivative(Complex(1.0 / 3.0), to_complex(c0), LaguerreRoute::matrix);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(std::abs(evm[n] - ev[n].get_d()) <= 1e-12 * std::abs(c0[n].get_d()));
}

TEST_CASE("Tricomi evolution against the series oracle") {
    CHECK(tricomi_evolution(0.4, 0.0).value == Complex(1.0));
    CHECK(std::abs(tricomi_evolution(1.0, 1.0).value - 0.5206029) <= 5e-8);
    CHECK(std::abs(tricomi_evolution(1.0, 1.0).value - oracle::tricomi_series(1.0, 1.0)) <= 1e-12);
    const double small = tricomi_evolution(0.8, 1e-3).value.real();
    CHECK(std::abs(small - (1.0 - 1e-3 * 0.64 / 2.0)) <= 1e-6);
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double x = i / 10.0;
            const double tau = j / 10.0;
            worst = std::max(worst, std::abs(tricomi_evolution(x, tau).value - oracle::tricomi_series(x, tau)));
        }
    }
    CHECK(worst <= 1e-8);
    CHECK_THROWS_AS(tricomi_evolution(0.5, -0.1), InvalidParameter);
}

TEST_CASE("Fourier transform of e^(-tau z^m)") {
    CHECK(e_tilde(2, 0.7, 0.3) == doctest::Approx(std::exp(-0.49 / 1.2) / std::sqrt(0.6)).epsilon(1e-15));
    // Inverse transform at z = 0 recovers 1: (1/sqrt(2 pi)) int e~_4(k) dk = 1.
    const auto r = quad::legendre_integral([](double k) { return Complex(e_tilde(4, k, 0.5)); }, -40.0, 40.0);
    CHECK(std::abs(r.value / std::sqrt(2.0 * M_PI) - 1.0) <= 1e-9);
    CHECK_THROWS_AS(e_tilde(3, 0.1, 1.0), UnsupportedSymbol);
    CHECK_THROWS_AS(e_tilde(2, 0.1, 0.0), InvalidParameter);
}

TEST_CASE("integro-differential evolution against the matrix exponential") {
    const auto c0 = oracle::tricomi_c0_coefficients(40);
    CHECK(std::abs(integro_diff_evolve_c0(1.0, 2, 0.0, 0.3).value - specfun::tricomi_c(0, Complex(0.3))) <= 1e-15);
    for (double tau : {0.1, 0.5}) {
        const Complex v = integro_diff_evolve_c0(0.0, 2, tau, 0.4).value;
        CHECK(std::abs(v - std::exp(-tau) * specfun::tricomi_c(0, Complex(0.4))) <= 1e-12);
    }
    const double oracle_value = oracle::integro_matrix_exponential(c0, 1.0, 2, 0.25, 0.25);
    CHECK(std::abs(integro_diff_evolve_c0(1.0, 2, 0.25, 0.25).value - oracle_value) <= 1e-6);

    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double beta : {0.0, 0.5, 1.0}) {
        for (double x : {0.0, 0.25, 0.5}) {
            for (double tau : {0.0, 0.25, 0.5}) {
                const double expect = oracle::integro_matrix_exponential(c0, beta, 2, tau, x);
                worst = std::max(worst, std::abs(integro_diff_evolve_c0(beta, 2, tau, x).value - expect));
            }
        }
    }
    CHECK(worst <= 1e-6);

    // A polynomial initial condition through the general route
    const PowerSeries f({0.0, 1.0, -0.5, 0.25});
    const std::vector<double> fc = {0.0, 1.0, -0.5, 0.25};
    for (double beta : {0.0, 0.5, 1.0}) {
        const double expect = oracle::integro_matrix_exponential(fc, beta, 2, 0.3, 0.4);
        CHECK(std::abs(integro_diff_evolve(f, beta, 2, 0.3, 0.4).value - expect) <= 1e-6);
    }
    // m = 4 at beta = 0, where the exponential series terminates.
    const std::vector<Rational> pe = {Rational(1), Rational(-2), Rational(1, 3), Rational(0), Rational(5, 2), Rational(-1)};
    std::vector<Complex> pd;
    for (const auto& v : pe) pd.push_back(v.get_d());
    const double m4 = oracle::laguerre_power_exponential(pe, 4, Rational(1, 20), Rational(3, 10)).get_d();
    CHECK(std::abs(integro_diff_evolve(PowerSeries(pd), 0.0, 4, 0.05, 0.3).value - m4) <=
          1e-6 * std::max(1.0, std::abs(m4)));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seconds < 60.0);

    CHECK_THROWS_AS(integro_diff_evolve_c0(1.0, 3, 0.2, 0.2), UnsupportedSymbol);
    CHECK_THROWS_AS(integro_diff_evolve_c0(1.0, 2, 0.2, 0.6), TruncationError);
    CHECK_THROWS_AS(integro_diff_evolve(f, 1.0, 0, 0.2, 0.2), InvalidParameter);
}

TEST_CASE("umbral operator transform") {
    const auto ones = gf::SequenceModel::ones();
    const Complex id = umbral_operator_transform(FourierSymbol::constant(1.0), ones, 0.3).value;
    CHECK(std::abs(id - 1.0 / 0.7) <= 1e-15);
    const Complex at0 = umbral_operator_transform(FourierSymbol::gaussian(0.1), ones, 0.0).value;
    CHECK(std::abs(at0 - 1.0) <= 1e-13);

    std::vector<Rational> c(121);
    Rational term = 1;
    for (std::size_t j = 0; 2 * j < c.size(); ++j) {
        c[2 * j] = term;
        term *= Rational(-1, 10 * static_cast<long>(j + 1));
    }
    const seq::Sequence a(std::vector<Rational>(120, Rational(1)));
    for (double x : {-0.3, -0.1, 0.2, 0.3}) {
        const auto oracle_sum = oracle::umbral_double_sum(c, a, x);
        CHECK(oracle_sum.smallest_term <= 1e-8);
        CHECK(std::abs(umbral_operator_transform(FourierSymbol::gaussian(0.1), ones, x).value - oracle_sum.value) <=
              1e-7);
    }
    CHECK_THROWS_AS(umbral_operator_transform(FourierSymbol::gaussian(0.1), ones, 1.2), DivergenceError);
}
