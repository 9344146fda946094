#pragma once

#include <cstddef>
#include <vector>

#include "umbra/rational.hpp"

/// Exact power series in a formal parameter eps whose coefficients are
/// polynomials in x, and normal-ordered differential operators acting on
/// them. Operator identities are checked order by order in eps.
namespace umbra::op {

/// Polynomial in x, index = power, no trailing zeros.
using ExactPoly = std::vector<Rational>;

class FormalExpansion {
public:
    /// The zero expansion through eps^order_cap.
    explicit FormalExpansion(std::size_t order_cap);
    /// eps^0 x^degree
    static FormalExpansion monomial(std::size_t degree, std::size_t order_cap);

    std::size_t order_cap() const noexcept { return orders_.size() - 1; }
    const ExactPoly& order(std::size_t j) const { return orders_.at(j); }
    /// Adds c x^power to the eps^j coefficient; ignored beyond the cap.
    void add(std::size_t j, std::size_t power, const Rational& c);

    FormalExpansion& operator+=(const FormalExpansion& other);
    FormalExpansion& operator-=(const FormalExpansion& other);
    FormalExpansion& operator*=(const Rational& c);
    bool operator==(const FormalExpansion& other) const { return orders_ == other.orders_; }

    bool is_zero() const;
    /// Largest |coefficient| over all orders and powers.
    Rational max_abs() const;

private:
    void trim(std::size_t j);
    std::vector<ExactPoly> orders_;
};

/// coeff * eps^order * x^x_power * d^d_power (x to the left of d).
struct OperatorTerm {
    Rational coeff;
    unsigned order = 0;
    unsigned x_power = 0;
    unsigned d_power = 0;
};

class FormalOperator {
public:
    FormalOperator() = default;
    explicit FormalOperator(std::vector<OperatorTerm> terms) : terms_(std::move(terms)) {}

    FormalOperator& add(const Rational& coeff, unsigned order, unsigned x_power, unsigned d_power);
    const std::vector<OperatorTerm>& terms() const noexcept { return terms_; }

    FormalExpansion apply(const FormalExpansion& e) const;
    /// e^(op) e as the exponential series. Every term must carry a positive
    /// power of eps (InvalidParameter otherwise), so the series is finite
    /// under the order cap.
    FormalExpansion exp_apply(const FormalExpansion& e) const;

private:
    std::vector<OperatorTerm> terms_;
};

}  // namespace umbra::op
