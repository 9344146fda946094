#include "umbra/oracle/appell.hpp"

namespace umbra::oracle {

std::vector<Rational> gaussian_series(const Rational& s, std::size_t order) {
    std::vector<Rational> c(order + 1);
    Rational term = 1;
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        c[2 * j] = term;
        term *= -s / static_cast<long>(j + 1);
    }
    return c;
}

std::vector<Rational> operational_coefficients(const std::vector<Rational>& inverse_taylor,
                                               const std::vector<Rational>& f_taylor, std::size_t N) {
    std::vector<Rational> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Rational rising = 1;  // (n+m)!/n!
        for (std::size_t m = 0; m < inverse_taylor.size() && n + m < f_taylor.size(); ++m) {
            if (m > 0) rising *= static_cast<long>(n + m);
            out[n] += inverse_taylor[m] * f_taylor[n + m] * rising;
        }
    }
    return out;
}

}  // namespace umbra::oracle
