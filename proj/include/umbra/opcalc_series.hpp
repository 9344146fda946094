#pragma once

// Termwise series maps of opcalc.hpp; included from there.

#include "umbra/errors.hpp"
#include "umbra/rational.hpp"
#include "umbra/truncated_operator.hpp"

namespace umbra::op {

namespace detail {

template <class C>
void require_ordinary(const Series<C>& f) {
    if (f.kind() != SeriesKind::ordinary) throw InvalidParameter("termwise operator maps expect an ordinary series");
}

template <class C>
C from_q(const Rational& q) {
    return ScalarTraits<C>::from_rational(q);
}

}  // namespace detail

template <class C>
Series<C> neg_derivative_pow(const Series<C>& f, unsigned n) {
    detail::require_ordinary(f);
    auto out = Series<C>::zero(f.truncation_order() + n);
    for (std::size_t m = 0; m < f.size(); ++m) {
        const Rational w = ratio(factorial(static_cast<unsigned>(m)), factorial(static_cast<unsigned>(m + n)));
        out[m + n] = C(f[m] * detail::from_q<C>(w));
    }
    return out;
}

template <class C>
Series<C> exp_negD(const C& alpha, const Series<C>& f, std::size_t out_order) {
    detail::require_ordinary(f);
    if (out_order < f.truncation_order()) throw InvalidParameter("output order below input order");
    auto out = Series<C>::zero(out_order);
    const C minus_alpha = C(-alpha);
    for (std::size_t n = 0; n < f.size(); ++n) {
        if (ScalarTraits<C>::is_zero(f[n])) continue;
        const Integer nf = factorial(static_cast<unsigned>(n));
        C power = ScalarTraits<C>::from_integer(Integer(1));
        for (std::size_t r = 0; n + r <= out_order; ++r) {
            const Rational w =
                ratio(nf, Integer(factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(n + r))));
            out[n + r] = C(out[n + r] + f[n] * power * detail::from_q<C>(w));
            power = C(power * minus_alpha);
        }
    }
    return out;
}

template <class C>
Series<C> laguerre_derivative(const Series<C>& f) {
    detail::require_ordinary(f);
    const std::size_t order = f.truncation_order();
    if (order == 0) return Series<C>::zero(0);
    auto out = Series<C>::zero(order - 1);
    for (std::size_t j = 0; j < order; ++j) {
        out[j] = C(f[j + 1] * ScalarTraits<C>::from_integer(Integer(static_cast<unsigned long>((j + 1) * (j + 1)))));
    }
    return out;
}

template <class C>
Series<C> borel_transform(const Series<C>& f) {
    detail::require_ordinary(f);
    auto out = Series<C>::zero(f.truncation_order());
    for (std::size_t n = 0; n < f.size(); ++n) {
        out[n] = C(f[n] * ScalarTraits<C>::from_integer(factorial(static_cast<unsigned>(n))));
    }
    return out;
}

template <class C>
Series<C> exp_laguerre_derivative(const C& alpha, const Series<C>& f, LaguerreRoute route) {
    detail::require_ordinary(f);
    const std::size_t order = f.truncation_order();
    if (route == LaguerreRoute::matrix) {
        const auto op = (TruncatedOperator<C>::laguerre_derivative(order) * alpha).exp();
        std::vector<C> coeffs(f.coeffs().begin(), f.coeffs().end());
        return Series<C>(op.apply(coeffs));
    }
    auto out = Series<C>::zero(order);
    for (std::size_t j = 0; j <= order; ++j) {
        const Integer jf = factorial(static_cast<unsigned>(j));
        C power = ScalarTraits<C>::from_integer(Integer(1));
        C acc = ScalarTraits<C>::from_integer(Integer(0));
        for (std::size_t n = j; n <= order; ++n) {
            const Integer nf = factorial(static_cast<unsigned>(n));
            const Rational w = ratio(Integer(nf * nf), Integer(jf * jf * factorial(static_cast<unsigned>(n - j))));
            acc = C(acc + f[n] * power * detail::from_q<C>(w));
            power = C(power * alpha);
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace umbra::op
