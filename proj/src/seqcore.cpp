#include "umbra/seqcore.hpp"

#include <utility>

#include "umbra/errors.hpp"

namespace umbra::seq {

namespace {

/// alpha^0 .. alpha^n
std::vector<Rational> powers(const Rational& base, std::size_t n) {
    std::vector<Rational> out(n + 1);
    out[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) out[j] = out[j - 1] * base;
    return out;
}

Rational sign(std::size_t s) { return (s % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

Sequence::Sequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidParameter("sequence needs at least one term");
}

Sequence binomial_transform(const Sequence& a) {
    return modular_transform(a, ModularParams{Rational(1), Rational(1)});
}

Sequence modular_transform(const Sequence& a, const ModularParams& p) {
    const std::size_t len = a.size();
    const auto alpha_pow = powers(p.alpha, len);
    const auto beta_pow = powers(p.beta, len);
    std::vector<Rational> b(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = 0;
        for (std::size_t s = 0; s <= n; ++s) {
            acc += sign(s) * Rational(binomial(n, s)) * alpha_pow[n - s] * beta_pow[s] * a[s];
        }
        b[n] = acc;
    }
    return Sequence(std::move(b));
}

Sequence modular_inverse(const Sequence& b, const ModularParams& p) {
    if (sgn(p.beta) == 0) throw InvalidParameter("modular inverse needs beta != 0");
    const Sequence scaled = modular_transform(b, ModularParams{p.alpha, Rational(1)});
    const Rational inv_beta = Rational(1) / p.beta;
    std::vector<Rational> a(b.size());
    Rational scale = 1;
    for (std::size_t n = 0; n < b.size(); ++n) {
        a[n] = scale * scaled[n];
        scale *= inv_beta;
    }
    return Sequence(std::move(a));
}

Sequence rising_k_binomial(const Sequence& a, unsigned k) {
    const std::size_t len = a.size();
    std::vector<Rational> weight(len);
    for (std::size_t s = 0; s < len; ++s) {
        Integer w;
        mpz_ui_pow_ui(w.get_mpz_t(), s, k);  // GMP gives 0^0 = 1
        weight[s] = Rational(w);
    }
    std::vector<Rational> b(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = 0;
        for (std::size_t s = 0; s <= n; ++s) acc += sign(s) * Rational(binomial(n, s)) * weight[s] * a[s];
        b[n] = acc;
    }
    return Sequence(std::move(b));
}

Sequence hermite_transform(const Sequence& a, const HermiteParams& p) {
    const std::size_t len = a.size();
    const auto alpha_pow = powers(p.alpha, len);
    const auto beta_pow = powers(p.beta, len);
    std::vector<Rational> b(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = 0;
        const Integer nfact = factorial(n);
        for (std::size_t r = 0; 2 * r <= n; ++r) {
            const Rational c = ratio(nfact, Integer(factorial(n - 2 * r) * factorial(r)));
            acc += c * alpha_pow[n - 2 * r] * beta_pow[r] * a[r];
        }
        b[n] = acc;
    }
    return Sequence(std::move(b));
}

Sequence hermite_complementary(const Sequence& a, const HermiteParams& p) {
    const std::size_t len = a.size();
    const auto alpha_pow = powers(p.alpha, len);
    const auto beta_pow = powers(p.beta, len);
    std::vector<Rational> b(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = 0;
        const Integer nfact = factorial(n);
        for (std::size_t r = 0; 2 * r <= n; ++r) {
            const Rational c = ratio(nfact, Integer(factorial(n - 2 * r) * factorial(r)));
            acc += c * alpha_pow[n - 2 * r] * beta_pow[r] * a[n - 2 * r];
        }
        b[n] = acc;
    }
    return Sequence(std::move(b));
}

Sequence hermite_inverse(const Sequence& b, const HermiteParams& p) {
    if (sgn(p.alpha) == 0) throw InvalidParameter("Hermite inverse needs alpha != 0");
    // H_n(b, -beta) first, then the alpha^-n scaling.
    const Sequence h = hermite_complementary(b, HermiteParams{Rational(1), Rational(-p.beta)});
    const Rational inv_alpha = Rational(1) / p.alpha;
    std::vector<Rational> a(b.size());
    Rational scale = 1;
    for (std::size_t n = 0; n < b.size(); ++n) {
        a[n] = scale * h[n];
        scale *= inv_alpha;
    }
    return Sequence(std::move(a));
}

Sequence laguerre_transform(const Sequence& a, const LaguerreParams& p) {
    const std::size_t len = a.size();
    const auto alpha_pow = powers(p.alpha, len);
    const auto beta_pow = powers(p.beta, len);
    std::vector<Rational> b(len);
    for (std::size_t n = 0; n < len; ++n) {
        Rational acc = 0;
        const Integer nfact = factorial(n);
        for (std::size_t r = 0; r <= n; ++r) {
            const Integer rfact = factorial(r);
            const Rational c = ratio(nfact, Integer(rfact * rfact * factorial(n - r)));
            acc += sign(r) * c * beta_pow[n - r] * alpha_pow[r] * a[r];
        }
        b[n] = acc;
    }
    return Sequence(std::move(b));
}

namespace {

struct StageApplier {
    const Sequence& a;
    Sequence operator()(const Binomial&) const { return binomial_transform(a); }
    Sequence operator()(const Modular& s) const { return modular_transform(a, s.params); }
    Sequence operator()(const ModularInverse& s) const { return modular_inverse(a, s.params); }
    Sequence operator()(const RisingKBinomial& s) const { return rising_k_binomial(a, s.k); }
    Sequence operator()(const Hermite& s) const { return hermite_transform(a, s.params); }
    Sequence operator()(const HermiteComplementary& s) const { return hermite_complementary(a, s.params); }
    Sequence operator()(const HermiteInverse& s) const { return hermite_inverse(a, s.params); }
    Sequence operator()(const Laguerre& s) const { return laguerre_transform(a, s.params); }
};

}  // namespace

Sequence apply(const TransformStage& stage, const Sequence& a) { return std::visit(StageApplier{a}, stage); }

Sequence compose_transforms(std::span<const TransformStage> pipeline, const Sequence& a) {
    Sequence current = a;
    for (const auto& stage : pipeline) current = seq::apply(stage, current);
    return current;
}

}  // namespace umbra::seq
