#pragma once

#include <vector>

#include "umbra/rational.hpp"

/// Operational route to Appell expansion coefficients: the Taylor
/// coefficients of [A(d)]^-1 f obtained by composing exact series, with no
/// Fourier integral involved.
namespace umbra::oracle {

/// Taylor coefficients of e^(-s x^2) through x^order.
std::vector<Rational> gaussian_series(const Rational& s, std::size_t order);

/// Coefficient n of sum_m c_m d^m f is sum_m c_m f_(n+m) (n+m)!/n!, summed
/// over every m the inputs provide; returned for n = 0..N.
std::vector<Rational> operational_coefficients(const std::vector<Rational>& inverse_taylor,
                                               const std::vector<Rational>& f_taylor, std::size_t N);

}  // namespace umbra::oracle
