#pragma once

#include <random>
#include <vector>

#include "umbra/seqcore.hpp"

namespace umbra::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_abs = 1000000) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return ratio(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long max_abs = 1000000) {
    for (;;) {
        Rational r = random_rational(rng, max_abs);
        if (sgn(r) != 0) return r;
    }
}

inline seq::Sequence random_sequence(std::mt19937_64& rng, std::size_t max_len, long max_abs = 1000000) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::vector<Rational> t(len(rng));
    for (auto& v : t) v = random_rational(rng, max_abs);
    return seq::Sequence(std::move(t));
}

inline seq::Sequence make_seq(std::initializer_list<long> values) {
    std::vector<Rational> t;
    for (long v : values) t.emplace_back(v);
    return seq::Sequence(std::move(t));
}

}  // namespace umbra::testing
