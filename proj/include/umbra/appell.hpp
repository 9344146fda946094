#pragma once

#include <functional>
#include <string>
#include <vector>

#include "umbra/gftrans.hpp"
#include "umbra/rational.hpp"
#include "umbra/scalar.hpp"
#include "umbra/seqcore.hpp"
#include "umbra/symbol.hpp"

/// Appell polynomial families a_n^+(x) = A(d) x^n, a_n^-(x) = [A(d)]^-1 x^n,
/// and expansions of functions in the "+" basis through Fourier quadrature.
namespace umbra::appell {

enum class Sign { plus, minus };

using ExactPoly = std::vector<Rational>;

class AppellFamily {
public:
    /// `taylor` holds A(t) through t^T with A(0) != 0 (InvalidParameter
    /// otherwise). The reciprocal is computed exactly. `value` and `inverse`
    /// evaluate A and 1/A at complex arguments for the quadrature path.
    AppellFamily(std::string name, std::vector<Rational> taylor, std::function<Complex(Complex)> value,
                 std::function<Complex(Complex)> inverse);

    static constexpr std::size_t default_order = 40;

    /// A = 1
    static AppellFamily identity(std::size_t order = default_order);
    /// A(t) = t / (e^t - 1)
    static AppellFamily bernoulli(std::size_t order = default_order);
    /// A(t) = e^(-t^2)
    static AppellFamily gauss_hermite_type(std::size_t order = default_order);
    /// A(t) = e^(t^2); inadmissible against Gaussian data since 1/A(ik) = e^(k^2).
    static AppellFamily exp_square(std::size_t order = default_order);
    /// A given only by its Taylor polynomial; A and 1/A are evaluated from the
    /// truncated series.
    static AppellFamily from_taylor(std::string name, std::vector<Rational> taylor);

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return taylor_.size() - 1; }
    /// Taylor coefficients of A (plus) or 1/A (minus).
    const std::vector<Rational>& coefficients(Sign sign) const noexcept {
        return sign == Sign::plus ? taylor_ : inverse_taylor_;
    }
    Complex value(Complex t) const { return value_(t); }
    Complex inverse_value(Complex t) const { return inverse_(t); }

private:
    std::string name_;
    std::vector<Rational> taylor_;
    std::vector<Rational> inverse_taylor_;
    std::function<Complex(Complex)> value_;
    std::function<Complex(Complex)> inverse_;
};

/// Reciprocal of a power series by Newton iteration g <- g (2 - a g).
/// InvalidParameter when a_0 = 0.
std::vector<Rational> series_reciprocal(const std::vector<Rational>& a);

/// a_n^(sign)(x) = sum_m c_m n!/(n-m)! x^(n-m); TruncationError for n > T.
ExactPoly appell_poly(const AppellFamily& fam, std::size_t n, Sign sign);

/// A(d)^(+-1) applied to a polynomial of degree <= T.
ExactPoly apply_characteristic(const AppellFamily& fam, const ExactPoly& p, Sign sign);

/// |sum_(n<=N) t^n a_n(x)/n! - A(t)^(+-1) e^(tx)|
double generating_check(const AppellFamily& fam, std::size_t N, double t, double x, Sign sign = Sign::plus);

struct ExpansionResult {
    std::vector<Complex> coefficients;
    std::string family;
    std::vector<std::size_t> nodes;
    /// Largest |Im alpha_n|, reported rather than dropped.
    double max_imag = 0.0;
    bool converged = true;
};

/// Coefficient count cap for double precision.
constexpr std::size_t max_expansion_terms = 24;

/// alpha_n = (i^n / (sqrt(2 pi) n!)) int f~(k) [A(ik)]^-1 k^n dk for n = 0..N.
/// Before integrating, |f~(k) [A(ik)]^-1 k^n| is sampled at |k| = 10, 20, 40;
/// growth raises DivergenceError naming n. InvalidParameter for N > 24,
/// TruncationError for N > T.
ExpansionResult expansion_coefficients(const AppellFamily& fam, const op::FourierSymbol& f, std::size_t N);

/// sum_n alpha_n a_n^+(x)
Complex reconstruct(const AppellFamily& fam, const ExpansionResult& res, double x);
/// sup over the grid of |reconstruct - f|
double reconstruction_residual(const AppellFamily& fam, const ExpansionResult& res,
                               const std::function<Complex(double)>& f, const std::vector<double>& grid);

/// The Bernoulli coefficients for e^(-x^2) in the printed normalization
/// i^(n-1)/sqrt(2 pi n!) int e^(-k^2/4) (e^(ik) - 1) k^(n-1) dk, n >= 1. Kept
/// to report its disagreement with expansion_coefficients.
Complex bernoulli_gaussian_printed(std::size_t n);

/// b_n = e^(y d_a^2) a^n read umbrally, a^s -> a_s.
seq::Sequence umbral_heat_sequence(const seq::Sequence& a, const Rational& y);
/// sum_(n<=T) b_n x^n / n! for the sequence above, T = length - 1.
Complex umbral_heat_egf(const gf::SequenceModel& a, const Rational& y, double x, std::size_t T = 64);

}  // namespace umbra::appell
