#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "umbra/rational.hpp"

/// Exact sequence-to-sequence transforms: binomial, modular, rising
/// k-binomial, Hermite (plain, complementary, inverse) and Laguerre.
///
/// Every transform is a polynomial identity in the input terms, so all of
/// them run in exact rational arithmetic and output length equals input
/// length (b_n only ever needs a_0 .. a_n).
namespace umbra::seq {

class Sequence {
public:
    /// Throws InvalidParameter when `terms` is empty.
    explicit Sequence(std::vector<Rational> terms);

    std::size_t size() const noexcept { return terms_.size(); }
    const Rational& operator[](std::size_t n) const { return terms_[n]; }
    std::span<const Rational> terms() const noexcept { return terms_; }

    bool operator==(const Sequence& other) const { return terms_ == other.terms_; }

private:
    std::vector<Rational> terms_;
};

struct ModularParams {
    Rational alpha{1};
    Rational beta{1};
};

struct HermiteParams {
    Rational alpha{1};
    Rational beta{1};
};

struct LaguerreParams {
    Rational alpha{1};
    Rational beta{1};
};

/// b_n = sum_s (-1)^s C(n,s) a_s. Its own inverse.
Sequence binomial_transform(const Sequence& a);

/// b_n = sum_s (-1)^s C(n,s) alpha^(n-s) beta^s a_s
Sequence modular_transform(const Sequence& a, const ModularParams& p);

/// a_n = beta^-n sum_s (-1)^s C(n,s) alpha^(n-s) b_s. Throws InvalidParameter on beta == 0.
Sequence modular_inverse(const Sequence& b, const ModularParams& p);

/// b_n = sum_s (-1)^s C(n,s) s^k a_s, with 0^0 = 1.
Sequence rising_k_binomial(const Sequence& a, unsigned k);

/// b_n = sum_{r <= n/2} n!/((n-2r)! r!) alpha^(n-2r) beta^r a_r, i.e. H_n(alpha, beta a).
Sequence hermite_transform(const Sequence& a, const HermiteParams& p);

/// b_n = n! sum_r alpha^(n-2r) beta^r a_(n-2r) / ((n-2r)! r!), i.e. H_n(alpha a, beta).
Sequence hermite_complementary(const Sequence& a, const HermiteParams& p);

/// a_n = alpha^-n H_n(b, -beta) umbrally. Inverts hermite_complementary with the
/// same parameters; hermite_transform drops a_r for r > n/2 and has no inverse on
/// a finite prefix. Throws InvalidParameter on alpha == 0.
Sequence hermite_inverse(const Sequence& b, const HermiteParams& p);

/// b_n = n! sum_r (-1)^r beta^(n-r) alpha^r a_r / ((r!)^2 (n-r)!), i.e. L_n(alpha a, beta).
Sequence laguerre_transform(const Sequence& a, const LaguerreParams& p);

struct Binomial {};
struct Modular {
    ModularParams params;
};
struct ModularInverse {
    ModularParams params;
};
struct RisingKBinomial {
    unsigned k = 0;
};
struct Hermite {
    HermiteParams params;
};
struct HermiteComplementary {
    HermiteParams params;
};
struct HermiteInverse {
    HermiteParams params;
};
struct Laguerre {
    LaguerreParams params;
};

using TransformStage = std::variant<Binomial, Modular, ModularInverse, RisingKBinomial, Hermite,
                                    HermiteComplementary, HermiteInverse, Laguerre>;

Sequence apply(const TransformStage& stage, const Sequence& a);

/// Applies the stages left to right. An empty pipeline is the identity.
Sequence compose_transforms(std::span<const TransformStage> pipeline, const Sequence& a);

}  // namespace umbra::seq
