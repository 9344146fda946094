#include <cmath>
#include <sstream>

#include "suite_support.hpp"
#include "umbra/gftrans.hpp"
#include "umbra/oracle/gf_master.hpp"
#include "umbra/oracle/umbral.hpp"
#include "umbra/seqcore.hpp"

namespace umbra::checks::detail {

namespace {

seq::Sequence random_sequence(std::mt19937_64& rng, std::size_t max_len, long max_abs) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::vector<Rational> t(len(rng));
    for (auto& v : t) v = random_rational(rng, max_abs);
    return seq::Sequence(std::move(t));
}

double max_abs_diff(const seq::Sequence& a, const seq::Sequence& b) {
    Rational worst = 0;
    for (std::size_t n = 0; n < a.size() && n < b.size(); ++n) worst = std::max(worst, abs_diff(a[n], b[n]));
    return worst.get_d();
}

/// Largest |closed - series| / max(1, |closed|); counts comparisons outside
/// the tail bound.
double gf_residual(const std::vector<oracle::GfComparison>& rows, double rel, std::string& detail) {
    double worst = 0.0;
    std::size_t outside = 0;
    for (const auto& r : rows) {
        worst = std::max(worst, r.difference() / r.scale());
        if (!r.agrees(rel)) ++outside;
    }
    detail = std::to_string(rows.size()) + " comparisons, " + std::to_string(outside) + " outside tail bound";
    return outside == 0 ? worst : std::max(worst, 2.0 * rel);
}

/// (c0 + c1 a)^m as a polynomial in the umbral symbol.
oracle::UmbralPoly linear_power(const Rational& c0, const Rational& c1, std::size_t m) {
    oracle::UmbralPoly p(m + 1);
    for (std::size_t s = 0; s <= m; ++s) {
        p[s] = Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(s))) *
               pow(c0, static_cast<long>(m - s)) * pow(c1, static_cast<long>(s));
    }
    return p;
}

void add_scaled(oracle::UmbralPoly& acc, const oracle::UmbralPoly& p, const Rational& c) {
    if (acc.size() < p.size()) acc.resize(p.size());
    for (std::size_t s = 0; s < p.size(); ++s) acc[s] += c * p[s];
}

Rational hermite_weight(std::size_t n, std::size_t r) {
    return ratio(factorial(static_cast<unsigned>(n)),
                 Integer(factorial(static_cast<unsigned>(n - 2 * r)) * factorial(static_cast<unsigned>(r))));
}

void involution(SuiteBuilder& b) {
    b.check("binomial-involution", "B(B(a)) = a on 200 random rational sequences", 0.0,
            [&](std::string& detail) {
                std::mt19937_64 rng(b.options().seed);
                std::size_t mismatches = 0;
                for (int i = 0; i < 200; ++i) {
                    const seq::Sequence a = random_sequence(rng, 32, 1000000);
                    if (!(seq::binomial_transform(seq::binomial_transform(a)) == a)) ++mismatches;
                }
                detail = std::to_string(mismatches) + " mismatches";
                return static_cast<double>(mismatches);
            },
            1.0);
}

void modular(SuiteBuilder& b) {
    b.check("modular-roundtrip", "modular inverse undoes the modular transform on 200 random cases", 0.0,
            [&](std::string& detail) {
                std::mt19937_64 rng(b.options().seed + 1);
                std::size_t mismatches = 0;
                for (int i = 0; i < 200; ++i) {
                    const seq::Sequence a = random_sequence(rng, 32, 1000000);
                    Rational beta = 0;
                    while (sgn(beta) == 0) beta = random_rational(rng, 1000000);
                    const seq::ModularParams p{random_rational(rng, 1000000), beta};
                    if (!(seq::modular_inverse(seq::modular_transform(a, p), p) == a)) ++mismatches;
                }
                detail = std::to_string(mismatches) + " mismatches";
                return static_cast<double>(mismatches);
            },
            1.0);
}

std::size_t truncation(const SuiteBuilder& b) { return b.options().order.value_or(oracle::master_truncation); }

void k_binomial(SuiteBuilder& b) {
    b.check("k-binomial-closed-forms",
            "rising k-binomial generating functions, k = 0..3, against truncated series within tail bounds", 1e-10,
            [&](std::string& detail) {
                return gf_residual(oracle::run_k_binomial_property(truncation(b)), b.tol(1e-10), detail);
            });
    b.check("euler-stirling-operator", "(t d/dt)^n equals sum_k S2(k,n) t^k d^k on random polynomials", 0.0,
            [&](std::string&) {
                std::mt19937_64 rng(b.options().seed + 2);
                Rational worst = 0;
                for (int i = 0; i < 20; ++i) {
                    std::vector<Rational> poly(10);
                    for (auto& c : poly) c = random_rational(rng, 1000);
                    for (unsigned n = 0; n <= 5; ++n) {
                        const auto lhs = gf::euler_operator_power(poly, n);
                        const auto rhs = gf::stirling_operator_expansion(poly, n);
                        for (std::size_t j = 0; j < std::max(lhs.size(), rhs.size()); ++j) {
                            const Rational l = j < lhs.size() ? lhs[j] : Rational(0);
                            const Rational r = j < rhs.size() ? rhs[j] : Rational(0);
                            worst = std::max(worst, abs_diff(l, r));
                        }
                    }
                }
                return worst.get_d();
            });
}

void gf_master(SuiteBuilder& b) {
    b.check("generating-function-master",
            "binomial, modular, k-binomial, Hermite and Laguerre closed forms against truncated series", 1e-10,
            [&](std::string& detail) {
                return gf_residual(oracle::run_master_property(truncation(b)), b.tol(1e-10), detail);
            });
}

void laguerre_special(SuiteBuilder& b) {
    const auto ones = gf::SequenceModel::ones();
    b.check("laguerre-bessel", "Laguerre transform at alpha = beta = 1: e^x J0(2 sqrt x) on [0, 0.5]", 1e-10,
            [&](std::string&) {
                double worst = 0.0;
                for (int i = 0; i <= 10; ++i) {
                    const double x = 0.05 * i;
                    const Complex v = gf::laguerre_gf(ones, Rational(1), Rational(1), x, SeriesKind::exponential);
                    worst = std::max(worst, std::abs(v - std::exp(x) * std::cyl_bessel_j(0.0, 2.0 * std::sqrt(x))));
                }
                return worst;
            });
    b.check("laguerre-geometric", "Laguerre transform of 1/(1-x): e^(-x/(1-x))/(1-x) on [0, 0.5]", 1e-10,
            [&](std::string&) {
                double worst = 0.0;
                for (int i = 0; i <= 10; ++i) {
                    const double x = 0.05 * i;
                    const Complex v = gf::laguerre_gf(ones, Rational(1), Rational(1), x, SeriesKind::ordinary);
                    worst = std::max(worst, std::abs(v - std::exp(-x / (1.0 - x)) / (1.0 - x)));
                }
                return worst;
            });
}

void hermite_laguerre(SuiteBuilder& b) {
    const seq::Sequence a({Rational(1), Rational(2), Rational(-1), Rational(3), Rational(1, 2), Rational(-2, 3),
                           Rational(5), Rational(1, 7), Rational(4), Rational(-3)});
    const Rational al(3, 2);
    const Rational be(-1, 2);

    b.check("hermite-complementary-inverse", "complementary Hermite transform inverted exactly", 0.0,
            [&](std::string&) {
                const seq::HermiteParams p{al, be};
                return max_abs_diff(seq::hermite_inverse(seq::hermite_complementary(a, p), p), a);
            });
    b.erratum("hermite-complementary-printed-binomial",
              "printed coefficient C(n,2r) against the umbral n!/((n-2r)! r!) of the complementary Hermite transform",
              0.0, [&](std::string&) {
                  const seq::Sequence ours = seq::hermite_complementary(a, {al, be});
                  std::vector<Rational> printed(a.size());
                  for (std::size_t n = 0; n < a.size(); ++n) {
                      for (std::size_t r = 0; 2 * r <= n; ++r) {
                          printed[n] += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(2 * r))) *
                                        pow(al, static_cast<long>(n - 2 * r)) * pow(be, static_cast<long>(r)) *
                                        a[n - 2 * r];
                      }
                  }
                  return max_abs_diff(ours, seq::Sequence(printed));
              });
    b.erratum("laguerre-printed-coefficient", "printed l(n,r) without the n! prefactor against L_n(alpha a, beta)",
              0.0, [&](std::string&) {
                  const seq::Sequence ours = seq::laguerre_transform(a, {al, be});
                  std::vector<Rational> printed(a.size());
                  for (std::size_t n = 0; n < a.size(); ++n) {
                      for (std::size_t r = 0; r <= n; ++r) {
                          const Integer rf = factorial(static_cast<unsigned>(r));
                          const Rational l = Rational(r % 2 == 0 ? 1 : -1) /
                                             Rational(rf * rf * factorial(static_cast<unsigned>(n - r)));
                          printed[n] += l * pow(be, static_cast<long>(n - r)) * pow(al, static_cast<long>(r)) * a[r];
                      }
                  }
                  return max_abs_diff(ours, seq::Sequence(printed));
              });

    const Rational alpha(2), beta(1, 3), gamma(3, 2), delta(-1, 2);
    const std::vector<seq::TransformStage> pipeline = {seq::Modular{{alpha, beta}}, seq::Hermite{{gamma, delta}}};
    const seq::Sequence composed = seq::compose_transforms(pipeline, a);
    b.check("hermite-modular-composite", "Hermite after modular equals H_n(gamma, delta (alpha - beta a))", 0.0,
            [&](std::string&) {
                std::vector<Rational> umbral(a.size());
                for (std::size_t n = 0; n < a.size(); ++n) {
                    oracle::UmbralPoly p;
                    for (std::size_t r = 0; 2 * r <= n; ++r) {
                        add_scaled(p, linear_power(alpha, -beta, r),
                                   hermite_weight(n, r) * pow(gamma, static_cast<long>(n - 2 * r)) *
                                       pow(delta, static_cast<long>(r)));
                    }
                    umbral[n] = oracle::umbral_evaluate(p, a);
                }
                return max_abs_diff(composed, seq::Sequence(umbral));
            });
    b.erratum("hermite-modular-composite-printed", "printed composite H_n(alpha - beta gamma a, beta^2 delta)", 0.0,
              [&](std::string&) {
                  std::vector<Rational> printed(a.size());
                  for (std::size_t n = 0; n < a.size(); ++n) {
                      oracle::UmbralPoly p;
                      for (std::size_t r = 0; 2 * r <= n; ++r) {
                          add_scaled(p, linear_power(alpha, -beta * gamma, n - 2 * r),
                                     hermite_weight(n, r) * pow(Rational(beta * beta * delta), static_cast<long>(r)));
                      }
                      printed[n] = oracle::umbral_evaluate(p, a);
                  }
                  return max_abs_diff(composed, seq::Sequence(printed));
              });
}

}  // namespace

void sequence_suites(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out) {
    SuiteBuilder b(name, opts, out);
    if (name == "involution") involution(b);
    if (name == "modular") modular(b);
    if (name == "k-binomial") k_binomial(b);
    if (name == "gf-master") gf_master(b);
    if (name == "laguerre-special") laguerre_special(b);
    if (name == "hermite-laguerre") hermite_laguerre(b);
}

}  // namespace umbra::checks::detail
