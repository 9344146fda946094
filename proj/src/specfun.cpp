#include "umbra/specfun.hpp"

#include <algorithm>
#include <cmath>

#include "umbra/errors.hpp"

namespace umbra::specfun {

Complex tricomi_c(unsigned n, Complex x) {
    constexpr double relative_cutoff = 1e-18;
    constexpr unsigned hard_cap = 100000;
    Complex term = 1.0 / factorial(n).get_d();
    Complex sum = term;
    const unsigned min_terms = n + 10;
    for (unsigned r = 1; r < hard_cap; ++r) {
        term *= -x / (static_cast<double>(r) * static_cast<double>(n + r));
        sum += term;
        if (r >= min_terms && std::abs(term) < relative_cutoff * std::abs(sum)) break;
        if (r >= min_terms && term == Complex{}) break;
    }
    return sum;
}

std::vector<Rational> tricomi_c_coefficients(unsigned n, std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (std::size_t r = 0; r <= order; ++r) {
        const auto ur = static_cast<unsigned>(r);
        c[r] = ratio(Integer(r % 2 == 0 ? 1 : -1), Integer(factorial(ur) * factorial(n + ur)));
    }
    return c;
}

Integer stirling2(unsigned k, unsigned n) {
    Integer acc = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Integer jn;
        mpz_ui_pow_ui(jn.get_mpz_t(), j, n);
        const Integer term = binomial(k, j) * jn;
        if ((k - j) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    const Integer kfact = factorial(k);
    if (mpz_divisible_p(acc.get_mpz_t(), kfact.get_mpz_t()) == 0) {
        throw InternalConsistency("Stirling sum not divisible by k!");
    }
    return acc / kfact;
}

Stirling2Table::Stirling2Table(unsigned max_n) : max_n_(max_n), rows_(max_n + 1) {
    for (unsigned n = 0; n <= max_n; ++n) {
        rows_[n].reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) rows_[n].push_back(stirling2(k, n));
    }
}

const Integer& Stirling2Table::operator()(unsigned k, unsigned n) const {
    if (n > max_n_) throw TruncationError("Stirling table built only up to n = " + std::to_string(max_n_));
    if (k > n) return zero_;
    return rows_[n][k];
}

}  // namespace umbra::specfun
