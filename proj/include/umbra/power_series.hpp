#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/scalar.hpp"

namespace umbra {

enum class SeriesKind {
    ordinary,     // sum c_n x^n
    exponential,  // sum c_n x^n / n!
};

/// Truncated power series c_0 .. c_T. The coefficient type is Rational on
/// exact paths and Complex elsewhere.
template <class C>
class Series {
public:
    Series(std::vector<C> coeffs, SeriesKind kind = SeriesKind::ordinary)
        : coeffs_(std::move(coeffs)), kind_(kind) {
        if (coeffs_.empty()) throw InvalidParameter("power series needs at least one coefficient");
    }

    static Series zero(std::size_t order, SeriesKind kind = SeriesKind::ordinary) {
        return Series(std::vector<C>(order + 1, ScalarTraits<C>::from_integer(Integer(0))), kind);
    }

    std::size_t truncation_order() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    SeriesKind kind() const noexcept { return kind_; }

    const C& operator[](std::size_t n) const { return coeffs_[n]; }
    C& operator[](std::size_t n) { return coeffs_[n]; }
    std::span<const C> coeffs() const noexcept { return coeffs_; }

    bool operator==(const Series& other) const { return kind_ == other.kind_ && coeffs_ == other.coeffs_; }

private:
    std::vector<C> coeffs_;
    SeriesKind kind_;
};

using PowerSeries = Series<Complex>;
using ExactSeries = Series<Rational>;

inline PowerSeries to_complex(const ExactSeries& s) {
    std::vector<Complex> c;
    c.reserve(s.size());
    for (const auto& v : s.coeffs()) c.push_back(to_complex(v));
    return PowerSeries(std::move(c), s.kind());
}

/// Horner evaluation of the truncated sum (honours the kind).
template <class C>
C evaluate_truncated(const Series<C>& s, const C& x) {
    C acc = ScalarTraits<C>::from_integer(Integer(0));
    if (s.kind() == SeriesKind::ordinary) {
        for (std::size_t n = s.size(); n-- > 0;) acc = C(acc * x + s[n]);
        return acc;
    }
    // c_0 + x/1 (c_1 + x/2 (c_2 + ...))
    for (std::size_t n = s.size(); n-- > 0;) {
        acc = C(s[n] + acc * x / ScalarTraits<C>::from_integer(Integer(static_cast<unsigned long>(n + 1))));
    }
    return acc;
}

}  // namespace umbra
