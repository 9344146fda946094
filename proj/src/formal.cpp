#include "umbra/formal.hpp"

#include <utility>

#include "umbra/errors.hpp"

namespace umbra::op {

FormalExpansion::FormalExpansion(std::size_t order_cap) : orders_(order_cap + 1) {}

FormalExpansion FormalExpansion::monomial(std::size_t degree, std::size_t order_cap) {
    FormalExpansion e(order_cap);
    e.add(0, degree, Rational(1));
    return e;
}

void FormalExpansion::trim(std::size_t j) {
    auto& p = orders_[j];
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void FormalExpansion::add(std::size_t j, std::size_t power, const Rational& c) {
    if (j >= orders_.size() || sgn(c) == 0) return;
    auto& p = orders_[j];
    if (p.size() <= power) p.resize(power + 1);
    p[power] += c;
    trim(j);
}

FormalExpansion& FormalExpansion::operator+=(const FormalExpansion& other) {
    for (std::size_t j = 0; j < other.orders_.size() && j < orders_.size(); ++j) {
        const auto& q = other.orders_[j];
        for (std::size_t p = 0; p < q.size(); ++p) add(j, p, q[p]);
    }
    return *this;
}

FormalExpansion& FormalExpansion::operator-=(const FormalExpansion& other) {
    for (std::size_t j = 0; j < other.orders_.size() && j < orders_.size(); ++j) {
        const auto& q = other.orders_[j];
        for (std::size_t p = 0; p < q.size(); ++p) add(j, p, -q[p]);
    }
    return *this;
}

FormalExpansion& FormalExpansion::operator*=(const Rational& c) {
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        for (auto& v : orders_[j]) v *= c;
        trim(j);
    }
    return *this;
}

bool FormalExpansion::is_zero() const {
    for (const auto& p : orders_) {
        if (!p.empty()) return false;
    }
    return true;
}

Rational FormalExpansion::max_abs() const {
    Rational m = 0;
    for (const auto& p : orders_) {
        for (const auto& v : p) {
            const Rational a = abs(v);
            if (a > m) m = a;
        }
    }
    return m;
}

FormalOperator& FormalOperator::add(const Rational& coeff, unsigned order, unsigned x_power, unsigned d_power) {
    if (sgn(coeff) != 0) terms_.push_back({coeff, order, x_power, d_power});
    return *this;
}

FormalExpansion FormalOperator::apply(const FormalExpansion& e) const {
    FormalExpansion out(e.order_cap());
    for (const auto& t : terms_) {
        for (std::size_t j = 0; j + t.order <= e.order_cap(); ++j) {
            const ExactPoly& p = e.order(j);
            for (std::size_t n = t.d_power; n < p.size(); ++n) {
                if (sgn(p[n]) == 0) continue;
                const Rational c = t.coeff * p[n] * Rational(falling_factorial(static_cast<unsigned>(n), t.d_power));
                out.add(j + t.order, n - t.d_power + t.x_power, c);
            }
        }
    }
    return out;
}

FormalExpansion FormalOperator::exp_apply(const FormalExpansion& e) const {
    for (const auto& t : terms_) {
        if (t.order == 0) throw InvalidParameter("exponential series needs every term to carry the formal parameter");
    }
    FormalExpansion sum = e;
    FormalExpansion term = e;
    for (unsigned k = 1; k <= e.order_cap(); ++k) {
        term = apply(term);
        term *= Rational(1, k);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

}  // namespace umbra::op
