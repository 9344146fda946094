#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "umbra/rational.hpp"

namespace umbra {

/// Conversions that let the same polynomial code run on exact rationals,
/// doubles and complex doubles.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational from_integer(const Integer& v) { return Rational(v); }
    static Rational from_rational(const Rational& v) { return v; }
    static double magnitude(const Rational& v) { return std::abs(to_double(v)); }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
};

template <>
struct ScalarTraits<double> {
    static double from_integer(const Integer& v) { return v.get_d(); }
    static double from_rational(const Rational& v) { return to_double(v); }
    static double magnitude(double v) { return std::abs(v); }
    static bool is_zero(double v) { return v == 0.0; }
};

template <>
struct ScalarTraits<Complex> {
    static Complex from_integer(const Integer& v) { return {v.get_d(), 0.0}; }
    static Complex from_rational(const Rational& v) { return to_complex(v); }
    static double magnitude(const Complex& v) { return std::abs(v); }
    static bool is_zero(const Complex& v) { return v == Complex{}; }
};

template <class T>
T integer_power(const T& base, unsigned exponent) {
    T result = ScalarTraits<T>::from_integer(Integer(1));
    T b = base;
    while (exponent != 0) {
        if (exponent & 1U) result = T(result * b);
        exponent >>= 1U;
        if (exponent != 0) b = T(b * b);
    }
    return result;
}

}  // namespace umbra
