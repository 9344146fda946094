#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/scalar.hpp"

namespace umbra::op {

/// Linear operator on polynomials of degree <= cap, stored densely on the
/// monomial basis: entry (i, j) is the coefficient of x^i in op(x^j).
///
/// `raise` is the largest degree increase the operator can cause. Every
/// raising factor pushes part of the image past the cap, so outputs are exact
/// only for inputs of degree <= validity_degree(), which composition lowers by
/// the raise of each inner factor.
template <class S>
class TruncatedOperator {
public:
    static constexpr std::size_t default_cap = 40;
    /// Marks operators whose degree increase is unbounded (exponentials of
    /// raising operators); their truncation is never exact.
    static constexpr long unbounded = std::numeric_limits<long>::max();

    explicit TruncatedOperator(std::size_t cap = default_cap)
        : cap_(cap), m_((cap + 1) * (cap + 1), zero()), raise_(0), validity_(static_cast<long>(cap)) {}

    static TruncatedOperator identity(std::size_t cap = default_cap) {
        TruncatedOperator op(cap);
        for (std::size_t j = 0; j <= cap; ++j) op.at(j, j) = one();
        return op;
    }
    static TruncatedOperator scalar(const S& c, std::size_t cap = default_cap) { return identity(cap) * c; }
    /// d/dx
    static TruncatedOperator derivative(std::size_t cap = default_cap) {
        TruncatedOperator op(cap);
        for (std::size_t j = 1; j <= cap; ++j) op.at(j - 1, j) = from_int(j);
        op.raise_ = -1;
        return op;
    }
    /// multiplication by x
    static TruncatedOperator multiply_x(std::size_t cap = default_cap) {
        TruncatedOperator op(cap);
        for (std::size_t j = 0; j < cap; ++j) op.at(j + 1, j) = one();
        op.raise_ = 1;
        op.validity_ = static_cast<long>(cap) - 1;
        return op;
    }
    /// d/dx x d/dx: x^n -> n^2 x^(n-1)
    static TruncatedOperator laguerre_derivative(std::size_t cap = default_cap) {
        TruncatedOperator op(cap);
        for (std::size_t j = 1; j <= cap; ++j) op.at(j - 1, j) = from_int(j * j);
        op.raise_ = -1;
        return op;
    }
    /// Integration from 0: x^n -> x^(n+1)/(n+1)
    static TruncatedOperator neg_derivative(std::size_t cap = default_cap) {
        TruncatedOperator op(cap);
        for (std::size_t j = 0; j < cap; ++j) op.at(j + 1, j) = S(one() / from_int(j + 1));
        op.raise_ = 1;
        op.validity_ = static_cast<long>(cap) - 1;
        return op;
    }

    std::size_t cap() const noexcept { return cap_; }
    long raise() const noexcept { return raise_; }
    /// Highest input degree with an exact image, or -1 when none is exact.
    long validity_degree() const noexcept { return raise_ == unbounded ? -1 : validity_; }

    const S& operator()(std::size_t i, std::size_t j) const { return m_[i * (cap_ + 1) + j]; }

    TruncatedOperator operator+(const TruncatedOperator& o) const {
        require_same_cap(o);
        TruncatedOperator r(*this);
        for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = S(r.m_[i] + o.m_[i]);
        r.raise_ = std::max(raise_, o.raise_);
        r.validity_ = std::min(validity_, o.validity_);
        return r;
    }
    TruncatedOperator operator-(const TruncatedOperator& o) const { return *this + o * S(-one()); }
    TruncatedOperator operator*(const S& c) const {
        TruncatedOperator r(*this);
        for (auto& v : r.m_) v = S(v * c);
        return r;
    }
    /// Composition: (A * B) x = A(B x).
    TruncatedOperator operator*(const TruncatedOperator& o) const {
        require_same_cap(o);
        TruncatedOperator r(cap_);
        for (std::size_t i = 0; i <= cap_; ++i) {
            for (std::size_t k = 0; k <= cap_; ++k) {
                const S& a = (*this)(i, k);
                if (ScalarTraits<S>::is_zero(a)) continue;
                for (std::size_t j = 0; j <= cap_; ++j) {
                    const S& b = o(k, j);
                    if (!ScalarTraits<S>::is_zero(b)) r.at(i, j) = S(r(i, j) + a * b);
                }
            }
        }
        if (raise_ == unbounded || o.raise_ == unbounded) {
            r.raise_ = unbounded;
        } else {
            r.raise_ = raise_ + o.raise_;
            r.validity_ = std::min({o.validity_, validity_ - o.raise_, static_cast<long>(cap_)});
        }
        return r;
    }
    TruncatedOperator pow(unsigned n) const {
        TruncatedOperator r = identity(cap_);
        for (unsigned k = 0; k < n; ++k) r = r * *this;
        return r;
    }

    /// Applies to coefficients c_0..c_d; TruncationError when d exceeds the
    /// validity degree.
    std::vector<S> apply(const std::vector<S>& coeffs) const {
        std::size_t degree = coeffs.size();
        while (degree > 0 && ScalarTraits<S>::is_zero(coeffs[degree - 1])) --degree;
        if (degree > 0 && static_cast<long>(degree - 1) > validity_degree()) {
            throw TruncationError("input degree " + std::to_string(degree - 1) + " exceeds validity degree " +
                                  std::to_string(validity_degree()));
        }
        return apply_unchecked(coeffs);
    }
    /// Applies without the validity check (the image is cut at the cap).
    std::vector<S> apply_unchecked(const std::vector<S>& coeffs) const {
        if (coeffs.size() > cap_ + 1) throw TruncationError("input degree exceeds the operator cap");
        std::vector<S> out(cap_ + 1, zero());
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (ScalarTraits<S>::is_zero(coeffs[j])) continue;
            for (std::size_t i = 0; i <= cap_; ++i) {
                const S& a = (*this)(i, j);
                if (!ScalarTraits<S>::is_zero(a)) out[i] = S(out[i] + a * coeffs[j]);
            }
        }
        return out;
    }

    /// True when every nonzero entry lies strictly above the diagonal.
    bool is_strictly_lowering() const {
        for (std::size_t i = 0; i <= cap_; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                if (!ScalarTraits<S>::is_zero((*this)(i, j))) return false;
            }
        }
        return true;
    }

    /// Exact exponential of a strictly degree-lowering (nilpotent) operator
    /// by its finite series. Other operators throw UnsupportedSymbol; their
    /// exponentials are an oracle-side concern.
    TruncatedOperator exp() const {
        if (!is_strictly_lowering()) throw UnsupportedSymbol("exact exponential needs a degree-lowering operator");
        TruncatedOperator sum = identity(cap_);
        TruncatedOperator term = identity(cap_);
        for (std::size_t k = 1; k <= cap_; ++k) {
            term = term * *this * S(one() / from_int(k));
            sum = sum + term;
        }
        sum.raise_ = 0;
        sum.validity_ = validity_;
        return sum;
    }

    S& at(std::size_t i, std::size_t j) { return m_[i * (cap_ + 1) + j]; }
    /// Marks the degree increase as unbounded, e.g. after an external
    /// exponential of a raising operator.
    void mark_unbounded() { raise_ = unbounded; }

private:
    static S zero() { return ScalarTraits<S>::from_integer(Integer(0)); }
    static S one() { return ScalarTraits<S>::from_integer(Integer(1)); }
    static S from_int(std::size_t v) { return ScalarTraits<S>::from_integer(Integer(static_cast<unsigned long>(v))); }
    void require_same_cap(const TruncatedOperator& o) const {
        if (o.cap_ != cap_) throw InvalidParameter("operator caps differ");
    }

    std::size_t cap_;
    std::vector<S> m_;
    long raise_;
    long validity_;
};

}  // namespace umbra::op
