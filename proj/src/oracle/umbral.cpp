#include "umbra/oracle/umbral.hpp"

#include <algorithm>

namespace umbra::oracle {

namespace {

UmbralPoly multiply(const UmbralPoly& p, const UmbralPoly& q) {
    UmbralPoly out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
}

UmbralPoly axpy(const Rational& s, const UmbralPoly& x, const UmbralPoly& y) {
    UmbralPoly out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += s * x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
}

UmbralPoly shift_up(const UmbralPoly& p) {
    UmbralPoly out(p.size() + 1);
    std::copy(p.begin(), p.end(), out.begin() + 1);
    return out;
}

template <class Next>
seq::Sequence from_recurrence(const seq::Sequence& a, UmbralPoly p0, UmbralPoly p1, Next next) {
    std::vector<Rational> b;
    b.reserve(a.size());
    b.push_back(umbral_evaluate(p0, a));
    if (a.size() > 1) b.push_back(umbral_evaluate(p1, a));
    for (std::size_t n = 1; n + 1 < a.size(); ++n) {
        UmbralPoly p2 = next(n, p0, p1);
        b.push_back(umbral_evaluate(p2, a));
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return seq::Sequence(std::move(b));
}

}  // namespace

Rational umbral_evaluate(const UmbralPoly& p, const seq::Sequence& a) {
    Rational acc = 0;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (sgn(p[s]) != 0) acc += p[s] * a[s];
    }
    return acc;
}

seq::Sequence modular_by_umbra(const seq::Sequence& a, const Rational& alpha, const Rational& beta) {
    const UmbralPoly base{alpha, Rational(-beta)};
    UmbralPoly power{Rational(1)};
    std::vector<Rational> b;
    for (std::size_t n = 0; n < a.size(); ++n) {
        b.push_back(umbral_evaluate(power, a));
        power = multiply(power, base);
    }
    return seq::Sequence(std::move(b));
}

seq::Sequence rising_k_by_umbra(const seq::Sequence& a, unsigned k) {
    // (1 - t a)^n is diagonal in (t, a): the t^j coefficient carries a^j.
    const UmbralPoly base{Rational(1), Rational(-1)};
    UmbralPoly power{Rational(1)};
    std::vector<Rational> b;
    for (std::size_t n = 0; n < a.size(); ++n) {
        UmbralPoly weighted = power;
        for (unsigned step = 0; step < k; ++step) {
            for (std::size_t j = 0; j < weighted.size(); ++j) weighted[j] *= static_cast<unsigned long>(j);
        }
        b.push_back(umbral_evaluate(weighted, a));
        power = multiply(power, base);
    }
    return seq::Sequence(std::move(b));
}

seq::Sequence hermite_by_recurrence(const seq::Sequence& a, const Rational& alpha, const Rational& beta) {
    return from_recurrence(a, {Rational(1)}, {alpha}, [&](std::size_t n, const UmbralPoly& pm, const UmbralPoly& p) {
        // alpha H_n + 2 n beta a H_(n-1)
        return axpy(Rational(alpha), p, axpy(Rational(2 * static_cast<long>(n)) * beta, shift_up(pm), {}));
    });
}

seq::Sequence hermite_complementary_by_recurrence(const seq::Sequence& a, const Rational& alpha,
                                                  const Rational& beta) {
    return from_recurrence(a, {Rational(1)}, {Rational(0), alpha},
                           [&](std::size_t n, const UmbralPoly& pm, const UmbralPoly& p) {
                               return axpy(Rational(alpha), shift_up(p),
                                           axpy(Rational(2 * static_cast<long>(n)) * beta, pm, {}));
                           });
}

seq::Sequence laguerre_by_recurrence(const seq::Sequence& a, const Rational& alpha, const Rational& beta) {
    return from_recurrence(a, {Rational(1)}, {beta, Rational(-alpha)},
                           [&](std::size_t n, const UmbralPoly& pm, const UmbralPoly& p) {
                               const Rational nn(static_cast<long>(n));
                               // ((2n+1) beta - alpha a) L_n - n beta^2 L_(n-1), all over n+1
                               UmbralPoly out = axpy(Rational((2 * nn + 1) * beta), p, {});
                               out = axpy(Rational(-alpha), shift_up(p), out);
                               out = axpy(Rational(-nn * beta * beta), pm, out);
                               for (auto& c : out) c /= nn + 1;
                               return out;
                           });
}

}  // namespace umbra::oracle
