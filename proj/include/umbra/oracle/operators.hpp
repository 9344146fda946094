#pragma once

#include <array>
#include <functional>
#include <vector>

#include "umbra/rational.hpp"
#include "umbra/scalar.hpp"
#include "umbra/seqcore.hpp"

/// Oracles for the operator calculus that never touch a Fourier integral:
/// Taylor series of the operator, spectral decomposition, dense matrix
/// exponentials and direct double sums.
namespace umbra::oracle {

/// One normal-ordered term coeff * x^x_power d^d_power.
struct OperatorMonomial {
    double coeff;
    unsigned x_power;
    unsigned d_power;
};

/// sum_j c_j A^j g evaluated at x, with A the sum of `op` and c_j = taylor[j].
/// g holds polynomial coefficients.
Complex operator_taylor_series(const std::vector<double>& taylor, const std::vector<OperatorMonomial>& op,
                               const std::vector<double>& g, Complex x);

/// Taylor coefficients of e^(-s z^2) through z^order.
std::vector<double> gaussian_taylor(double s, std::size_t order);

using Matrix2 = std::array<std::array<Complex, 2>, 2>;
/// f(M) = V f(Lambda) V^-1 from the eigen-decomposition of M.
Matrix2 spectral_matrix_function(const std::function<Complex(Complex)>& f, const Matrix2& m);

/// sum_m (-tau)^m x^(2m) / (m! (2m)!), the series of e^(-tau D^-2) 1.
double tricomi_series(double x, double tau);

/// e^(-tau (LD + beta D^-1)^m) f at x with a dense matrix exponential on
/// polynomials of degree <= degree; f holds coefficients.
double integro_matrix_exponential(const std::vector<double>& f, double beta, unsigned m, double tau, double x,
                                  std::size_t degree = 40);
/// e^(-tau LD^m) f at x for a polynomial f with exact coefficients. LD lowers
/// the degree, so the exponential series terminates and is summed exactly.
Rational laguerre_power_exponential(const std::vector<Rational>& f, unsigned m, const Rational& tau, const Rational& x);
/// Coefficients of C_0(x) = sum (-1)^r x^r / r!^2 through x^degree.
std::vector<double> tricomi_c0_coefficients(std::size_t degree);

/// sum_n x^n sum_(m<=n) c_m n!/(n-m)! a_(n-m), the inner sums exact. The
/// outer series is asymptotic in general; it is cut at its smallest term,
/// whose magnitude is reported in `smallest_term`.
struct DoubleSum {
    double value;
    double smallest_term;
    std::size_t terms;
};
DoubleSum umbral_double_sum(const std::vector<Rational>& c, const seq::Sequence& a, double x);

}  // namespace umbra::oracle
