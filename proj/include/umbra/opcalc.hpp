#pragma once

#include <array>
#include <functional>
#include <vector>

#include "umbra/formal.hpp"
#include "umbra/gftrans.hpp"
#include "umbra/power_series.hpp"
#include "umbra/quadrature.hpp"
#include "umbra/symbol.hpp"
#include "umbra/truncated_operator.hpp"

/// Functions of operators through their Fourier representation, the
/// disentanglement checks, and the evolution solvers built on them.
namespace umbra::op {

/// Quadrature value together with the accepted node count.
struct OpValue {
    Complex value;
    std::size_t nodes = 0;
    bool converged = true;
};

// ---------------------------------------------------------------------------
// Heat-type evolution on a grid

/// Samples on the symmetric power-of-two grid x_j = (j - n/2) h, j < n.
class GridFunction {
public:
    GridFunction(double half_width, std::vector<Complex> samples);
    static GridFunction sample(const std::function<Complex(double)>& f, double half_width, std::size_t n);

    double half_width() const noexcept { return half_width_; }
    double spacing() const noexcept { return 2.0 * half_width_ / static_cast<double>(samples_.size()); }
    std::size_t size() const noexcept { return samples_.size(); }
    double x(std::size_t j) const;
    const std::vector<Complex>& samples() const noexcept { return samples_; }
    Complex operator[](std::size_t j) const { return samples_[j]; }

private:
    double half_width_;
    std::vector<Complex> samples_;
};

/// e^(alpha d^2) f by discrete Fourier transform: multiply by e^(-alpha k^2).
/// DomainTooSmall when |f| exceeds 1e-12 at either end of the grid.
GridFunction heat_evolve_ft(const GridFunction& f, double alpha);

// ---------------------------------------------------------------------------
// Shift-type transforms

/// (1/sqrt(2 pi)) int f~(k) g(x + ik) dk, i.e. Phi(d) g for the symbol Phi.
OpValue phi_shift_transform(const FourierSymbol& phi, const std::function<Complex(Complex)>& g, Complex x);
/// e^(-y d^2) x^n by quadrature; equals H_n(x, -y).
OpValue hermite_integral(unsigned n, Complex x, double y);
/// (1/(2 sqrt(pi y))) int e^(-k^2/(4y)) H_n(x + ik, y) dk; equals x^n.
OpValue monomial_from_hermite(unsigned n, Complex x, double y);
/// Phi(alpha d + beta x) g at x via the ordered form
/// (1/sqrt(2 pi)) int Phi~(k) e^(-(alpha beta/2) k^2 + ik beta x) g(x + i alpha k) dk.
/// `g` holds polynomial coefficients. DivergenceError when alpha beta < 0
/// overwhelms the symbol's Gaussian envelope.
OpValue gabor_like_transform(const FourierSymbol& phi, const std::vector<Complex>& g, double alpha, double beta,
                             Complex x);

// ---------------------------------------------------------------------------
// Formal disentanglement checks (exact rational residuals)

/// Max |coefficient| of e^(eps(a d + b x)) - e^(eps a d) e^(eps b x) e^(-eps^2 a b / 2)
/// on x^0..x^8 through eps^T. InvalidParameter for T > 16.
Rational weyl_check(const Rational& a, const Rational& b, unsigned order);

enum class CubicForm {
    derived,          // m = 2 eps^(3/2) sqrt(alpha) beta in the ordered form
    printed_m,        // m with alpha^2 in place of sqrt(alpha)
    printed_ordered,  // monomial form with phase 10/3 and shift 2 k^2 alpha beta
};

/// Max |coefficient| of e^(eps(alpha d^2 + beta x)) minus its ordered form on
/// x^0..x^6 through eps^T, with eps standing for ik. The derived and printed_m
/// forms use e^(m^2/12 - (m/2) A^(1/2) + A) e^B; printed_ordered uses the
/// printed monomial form, written as e^B e^(phase) e^(shift d) e^A.
/// alpha must be the square of a rational (InvalidParameter otherwise);
/// InvalidParameter for T > 10.
Rational cubic_disentangle_check(const Rational& alpha, const Rational& beta, unsigned order,
                                 CubicForm form = CubicForm::derived);

/// f(alpha d^2 + beta x) x^n at x by quadrature of the ordered form
/// (1/sqrt(2 pi)) int f~(k) e^(-i k^3 alpha beta^2 / 3) e^(ik beta x) H_n(x - k^2 alpha beta, ik alpha) dk.
/// With printed = true the phase 10/3 and shift 2 k^2 alpha beta are used instead.
OpValue O_on_monomial(const FourierSymbol& f, double alpha, double beta, unsigned n, Complex x, bool printed = false);

// ---------------------------------------------------------------------------
// Pauli matrix functions

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// f(M) for M = Omega sigma_+ + Omega* sigma_- with Omega = i |Omega|, as
/// (1/sqrt(2 pi)) int f~(k) R(|Omega| k) dk with R the rotation matrix
/// [[cos, -sin], [sin, cos]].
Matrix2 matrix_function_pauli(const FourierSymbol& f, double omega_mag);
/// The matrix M itself.
Matrix2 pauli_generator(double omega_mag);

// ---------------------------------------------------------------------------
// Integral operator D^-1, Laguerre derivative, Borel transform

/// D^-n: x^m -> m! x^(m+n) / (m+n)!; the result order grows by n.
template <class C>
Series<C> neg_derivative_pow(const Series<C>& f, unsigned n);

/// e^(-alpha D^-1) f with x^n -> n! x^n C_n(alpha x), truncated at out_order
/// (at least the input order).
template <class C>
Series<C> exp_negD(const C& alpha, const Series<C>& f, std::size_t out_order);

/// d/dx x d/dx: x^n -> n^2 x^(n-1); the order drops by one (order 0 maps to 0).
template <class C>
Series<C> laguerre_derivative(const Series<C>& f);

/// (LD D^-1 - D^-1 LD - Id) f; PreconditionError when f(0) != 0.
ExactSeries commutator_check_LD(const ExactSeries& f);
/// The same residual without the precondition.
ExactSeries commutator_residual(const ExactSeries& f);

/// x^n -> n! x^n
template <class C>
Series<C> borel_transform(const Series<C>& f);

enum class LaguerreRoute { borel, matrix };
/// e^(alpha d x d) f for a polynomial f. The Borel route sums
/// a_n n!^2 / (j!^2 (n-j)!) alpha^(n-j) into coefficient j; the matrix route
/// exponentiates the (nilpotent) truncated Laguerre-derivative matrix.
template <class C>
Series<C> exp_laguerre_derivative(const C& alpha, const Series<C>& f, LaguerreRoute route = LaguerreRoute::borel);

// ---------------------------------------------------------------------------
// Evolution problems

/// F(x, tau) = e^(-tau D^-2) 1 = (1/(2 sqrt(pi tau))) int e^(-k^2/(4 tau)) C_0(-ikx) dk.
/// InvalidParameter for tau < 0; tau = 0 returns 1.
OpValue tricomi_evolution(double x, double tau);

/// Fourier transform of e^(-tau z^m): (1/sqrt(2 pi)) int e^(-tau z^m - ikz) dz.
/// Closed form for m = 2, composite Gauss-Legendre otherwise.
double e_tilde(unsigned m, double k, double tau);

/// e^(-tau (LD + beta D^-1)^m) f at x, through
/// (1/sqrt(2 pi)) int e~_m(k, tau) e^(-beta k^2/2) e^(i beta k D^-1) e^(ik LD) f dk
/// for a polynomial f. UnsupportedSymbol for odd m, InvalidParameter for
/// m = 0 or tau < 0, TruncationError for |x| > 0.5.
/// For m >= 4, e~_m comes from a numerical Fourier transform whose absolute
/// error floor (about 1e-16) is amplified by the growth of e^(ik LD) f in k,
/// so accuracy falls with the degree of f.
OpValue integro_diff_evolve(const PowerSeries& f, double beta, unsigned m, double tau, double x);
/// The same evolution for f = C_0, using e^(ik LD) C_0 = e^(-ik) C_0.
OpValue integro_diff_evolve_c0(double beta, unsigned m, double tau, double x);

/// F(d_a) f(x) on the umbral image a^n -> a_n, with f the ordinary
/// generating function of a written as 1/(1 - a x):
/// (1/sqrt(2 pi)) int F~(k) / (1 - ikx) f(x / (1 - ikx)) dk.
/// For even F~ this is the same integral with 1 + ikx. A pure point-mass symbol (constant) is
/// handled exactly. DivergenceError when |x| is outside the radius of f.
OpValue umbral_operator_transform(const FourierSymbol& F, const gf::SequenceModel& a, double x);

}  // namespace umbra::op

#include "umbra/opcalc_series.hpp"
