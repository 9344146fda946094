#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "umbra/power_series.hpp"
#include "umbra/seqcore.hpp"

/// Truncated generating-function evaluation and the closed forms that the
/// sequence transforms induce on ordinary (f) and exponential (g) generating
/// functions.
namespace umbra::gf {

/// Coefficient growth model |c_n| <= M rho^n supplied by the caller.
struct Growth {
    double bound = 1.0;  // M
    double rate = 1.0;   // rho
};

struct EvalResult {
    Complex value;
    double tail_bound = 0.0;
};

/// Truncated sum plus a rigorous tail bound under `growth`.
/// Ordinary kind: tail <= M (rho|x|)^(T+1) / (1 - rho|x|), and rho|x| < 1 is
/// required (DivergenceError otherwise). Exponential kind: tail <=
/// M (rho|x|)^(T+1)/(T+1)! * exp(rho|x|).
EvalResult series_eval(const PowerSeries& s, Complex x, Growth growth);

/// Smallest rate >= `min_rate` / matching bound such that every available
/// coefficient satisfies |c_n| <= M rho^n. The rate is taken from the upper
/// half of the coefficients, so it is an envelope of the given prefix only.
Growth envelope_growth(const PowerSeries& s, double min_rate = 0.0);

/// r-th derivative of the truncated polynomial; order drops to T - r.
/// Throws TruncationError when r > T.
PowerSeries series_derivative(const PowerSeries& s, unsigned r);

/// A sequence together with analytic forms of its generating functions.
///
/// `ogf(z, r)` is the r-th derivative of f(z) = sum a_n z^n, `egf(z, r)` the
/// r-th derivative of g(z) = sum a_n z^n / n!, and `bessel_egf(z)` is
/// q(z) = sum a_n z^n / (n!)^2. Missing evaluators fall back to summing the
/// exact terms, which is only allowed inside `ogf_radius`.
struct SequenceModel {
    std::string name;
    std::function<Rational(std::size_t)> term;
    std::function<Complex(Complex, unsigned)> ogf;
    std::function<Complex(Complex, unsigned)> egf;
    std::function<Complex(Complex)> bessel_egf;
    double ogf_radius = std::numeric_limits<double>::infinity();

    seq::Sequence prefix(std::size_t length) const;

    static SequenceModel ones();                        // a_n = 1
    static SequenceModel linear();                      // a_n = n
    static SequenceModel geometric(const Rational& c);  // a_n = c^n
    static SequenceModel delta();                       // a = (1, 0, 0, ...)
    /// Finite sequence padded with zeros; every generating function is a polynomial.
    static SequenceModel finite(const seq::Sequence& a);
};

Complex ogf_value(const SequenceModel& a, Complex z, unsigned r = 0);
Complex egf_value(const SequenceModel& a, Complex z, unsigned r = 0);
Complex bessel_egf_value(const SequenceModel& a, Complex z);

/// (1/(1-x)) f(-x/(1-x)), |x| < 1.
Complex binomial_gf_ordinary(const SequenceModel& a, Complex x);
/// e^x g(-x)
Complex binomial_gf_exponential(const SequenceModel& a, Complex x);
/// Ordinary: (1/(1-alpha x)) f(beta x/(alpha x - 1)), |alpha x| < 1. Exponential: e^(alpha x) g(-beta x).
Complex modular_gf(const SequenceModel& a, const Rational& alpha, const Rational& beta, Complex x, SeriesKind kind);
/// Ordinary: sum_r (-x)^r/(1-x)^(r+1) S2(r,k) f^(r)(-x/(1-x)).
/// Exponential: e^x sum_r (-x)^r S2(r,k) g^(r)(-x).
Complex k_binomial_gf(const SequenceModel& a, unsigned k, Complex x, SeriesKind kind);

enum class HermiteVariant {
    plain,          // e^(alpha x) g(beta x^2)
    complementary,  // e^(beta x^2) g(alpha x)
};
Complex hermite_gf(const SequenceModel& a, const Rational& alpha, const Rational& beta, Complex x,
                   HermiteVariant variant);

/// Ordinary: (1/(1-beta x)) g(-alpha x/(1-beta x)) with g the exponential
/// generating function of the same sequence, |beta x| < 1.
/// Exponential: e^(beta x) q(-alpha x), q(z) = sum a_r z^r/(r!)^2.
Complex laguerre_gf(const SequenceModel& a, const Rational& alpha, const Rational& beta, Complex x,
                    SeriesKind kind);

/// The function-level binomial map f -> (1/(1-x)) f(-x/(1-x)).
Complex binomial_ogf_map(const std::function<Complex(Complex)>& f, Complex x);

/// (t d/dt)^n applied to an exact polynomial.
std::vector<Rational> euler_operator_power(const std::vector<Rational>& poly, unsigned n);
/// sum_k S2(k,n) t^k (d/dt)^k applied to an exact polynomial.
std::vector<Rational> stirling_operator_expansion(const std::vector<Rational>& poly, unsigned n);

}  // namespace umbra::gf
