#pragma once

#include <cstddef>
#include <vector>

#include "umbra/rational.hpp"
#include "umbra/scalar.hpp"

/// Reference evaluations of the special functions the transforms are tested
/// against. Polynomial families are templated so the same code runs exactly
/// on rationals and in floating point on doubles / complex doubles.
namespace umbra::specfun {

/// Two-variable Hermite polynomial H_n(x,y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!).
/// Generating function exp(x t + y t^2).
template <class T>
T hermite2(unsigned n, const T& x, const T& y) {
    using Tr = ScalarTraits<T>;
    const Integer nfact = factorial(n);
    T acc = Tr::from_integer(Integer(0));
    for (unsigned r = 0; 2 * r <= n; ++r) {
        const Integer c = nfact / (factorial(n - 2 * r) * factorial(r));
        acc = T(acc + Tr::from_integer(c) * integer_power(x, n - 2 * r) * integer_power(y, r));
    }
    return acc;
}

/// Two-variable Laguerre polynomial L_n(x,y) = n! sum_r (-1)^r x^r y^(n-r) / ((r!)^2 (n-r)!).
/// L_n(x, 1) is the classical Laguerre polynomial.
template <class T>
T laguerre2(unsigned n, const T& x, const T& y) {
    using Tr = ScalarTraits<T>;
    const Integer nfact = factorial(n);
    T acc = Tr::from_integer(Integer(0));
    for (unsigned r = 0; r <= n; ++r) {
        const Integer rfact = factorial(r);
        const Rational c = ratio(nfact, Integer(rfact * rfact * factorial(n - r)));
        T term = T(Tr::from_rational(c) * integer_power(x, r) * integer_power(y, n - r));
        if (r % 2 == 1) term = T(-term);
        acc = T(acc + term);
    }
    return acc;
}

/// Tricomi-Bessel function C_n(x) = sum_r (-1)^r x^r / (r! (n+r)!).
/// Summation runs for at least n + 10 terms and stops once a term drops below
/// 1e-18 of the running sum. C_0(x) = J_0(2 sqrt(x)) for x >= 0.
Complex tricomi_c(unsigned n, Complex x);

/// Exact Taylor coefficients of C_n through x^order.
std::vector<Rational> tricomi_c_coefficients(unsigned n, std::size_t order);

/// Stirling number of the second kind with the argument order (k, n):
/// k is the number of blocks, n the set size.
/// S2(k,n) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n with 0^0 = 1.
Integer stirling2(unsigned k, unsigned n);

/// Triangular table of S2(k, n) for n <= max_n, built once and read-only.
class Stirling2Table {
public:
    explicit Stirling2Table(unsigned max_n);

    unsigned max_n() const noexcept { return max_n_; }
    /// Zero when k > n.
    const Integer& operator()(unsigned k, unsigned n) const;

private:
    unsigned max_n_;
    std::vector<std::vector<Integer>> rows_;  // rows_[n][k]
    Integer zero_{0};
};

/// sum_s C(n,s) x^s H_(n-s)(y,z) - H_n(x+y, z). Exactly zero on rationals.
template <class T>
T hermite_addition_check(unsigned n, const T& x, const T& y, const T& z) {
    using Tr = ScalarTraits<T>;
    T lhs = Tr::from_integer(Integer(0));
    for (unsigned s = 0; s <= n; ++s) {
        lhs = T(lhs + Tr::from_integer(binomial(n, s)) * integer_power(x, s) * hermite2(n - s, y, z));
    }
    return T(lhs - hermite2(n, T(x + y), z));
}

}  // namespace umbra::specfun
