#pragma once

#include <vector>

#include "umbra/seqcore.hpp"

/// Independent routes to the sequence transforms: each b_n is obtained by
/// expanding the umbral polynomial in the symbol a (a^s standing for a_s) via
/// polynomial recurrences, never by the closed summation formulas.
namespace umbra::oracle {

/// Polynomial in the umbral symbol; index = power.
using UmbralPoly = std::vector<Rational>;

/// sum_s p_s a_s
Rational umbral_evaluate(const UmbralPoly& p, const seq::Sequence& a);

/// (alpha - beta a)^n by repeated multiplication.
seq::Sequence modular_by_umbra(const seq::Sequence& a, const Rational& alpha, const Rational& beta);
/// (t d/dt)^k (1 - t a)^n at t = 1.
seq::Sequence rising_k_by_umbra(const seq::Sequence& a, unsigned k);
/// H_n(alpha, beta a) through H_(n+1) = x H_n + 2 n y H_(n-1).
seq::Sequence hermite_by_recurrence(const seq::Sequence& a, const Rational& alpha, const Rational& beta);
/// H_n(alpha a, beta) through the same recurrence.
seq::Sequence hermite_complementary_by_recurrence(const seq::Sequence& a, const Rational& alpha,
                                                  const Rational& beta);
/// L_n(alpha a, beta) through (n+1) L_(n+1) = ((2n+1) y - x) L_n - n y^2 L_(n-1).
seq::Sequence laguerre_by_recurrence(const seq::Sequence& a, const Rational& alpha, const Rational& beta);

}  // namespace umbra::oracle
