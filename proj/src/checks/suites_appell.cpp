#include <cmath>

#include "suite_support.hpp"
#include "umbra/appell.hpp"
#include "umbra/oracle/appell.hpp"

namespace umbra::checks::detail {

namespace {

using namespace umbra::appell;

std::vector<Rational> bernoulli_inverse_taylor(std::size_t order) {
    std::vector<Rational> c(order + 1);
    Rational f = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        f *= static_cast<long>(m + 1);
        c[m] = 1 / f;
    }
    return c;
}

ExactPoly monomial(std::size_t n) {
    ExactPoly p(n + 1);
    p[n] = 1;
    return p;
}

double max_abs_diff(const ExactPoly& a, const ExactPoly& b) {
    Rational worst = 0;
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) {
        const Rational x = n < a.size() ? a[n] : Rational(0);
        const Rational y = n < b.size() ? b[n] : Rational(0);
        worst = std::max(worst, abs_diff(x, y));
    }
    return worst.get_d();
}

double oracle_residual(const ExpansionResult& res, const std::vector<Rational>& expect) {
    double worst = 0.0;
    for (std::size_t n = 0; n < res.coefficients.size(); ++n) {
        worst = std::max(worst, std::abs(res.coefficients[n] - expect[n].get_d()));
    }
    return worst;
}

void appell_checks(SuiteBuilder& b) {
    const std::size_t N = 10;
    b.check("bernoulli-gaussian-expansion", "Bernoulli coefficients of e^(-x^2) against the operational series, n <= 10",
            1e-8, [&](std::string&) {
                const auto res = expansion_coefficients(AppellFamily::bernoulli(), op::FourierSymbol::gaussian(1.0), N);
                return oracle_residual(res, oracle::operational_coefficients(
                                                bernoulli_inverse_taylor(80), oracle::gaussian_series(Rational(1), 120), N));
            });
    b.check("hermite-type-gaussian-expansion",
            "A(t) = e^(-t^2) coefficients of e^(-x^2): closed form e^(-x^2/5)/sqrt(5), n <= 10", 1e-8,
            [&](std::string&) {
                const auto res =
                    expansion_coefficients(AppellFamily::gauss_hermite_type(), op::FourierSymbol::gaussian(1.0), N);
                double worst = 0.0;
                for (std::size_t n = 0; n <= N; ++n) {
                    const double expect =
                        n % 2 == 0 ? std::pow(-0.2, n / 2) / std::tgamma(n / 2 + 1.0) / std::sqrt(5.0) : 0.0;
                    worst = std::max(worst, std::abs(res.coefficients[n] - expect));
                }
                return worst;
            });
    b.check("hermite-type-narrow-gaussian", "A(t) = e^(-t^2) against the operational series for e^(-x^2/8), n <= 10",
            1e-8, [&](std::string&) {
                const auto res =
                    expansion_coefficients(AppellFamily::gauss_hermite_type(), op::FourierSymbol::gaussian(0.125), N);
                return oracle_residual(res, oracle::operational_coefficients(oracle::gaussian_series(Rational(-1), 300),
                                                                             oracle::gaussian_series(Rational(1, 8), 320),
                                                                             N));
            });
    b.check("bernoulli-a2", "a_2^+(x) = x^2 - x + 1/6 exactly", 0.0, [&](std::string&) {
        return max_abs_diff(appell_poly(AppellFamily::bernoulli(), 2, Sign::plus),
                            ExactPoly{Rational(1, 6), Rational(-1), Rational(1)});
    });
    b.check("generating-function", "sum t^n a_n(x)/n! against A(t)^(+-1) e^(tx), 30 terms", 1e-10, [&](std::string&) {
        double worst = 0.0;
        for (const auto& fam : {AppellFamily::bernoulli(), AppellFamily::gauss_hermite_type(), AppellFamily::identity()}) {
            for (double t : {-0.8, 0.3}) {
                for (double x : {-0.4, 0.5}) {
                    worst = std::max({worst, generating_check(fam, 30, t, x, Sign::plus),
                                      generating_check(fam, 30, t, x, Sign::minus)});
                }
            }
        }
        return worst;
    });
    b.check("reciprocity-composition", "A(d) a_n^- = x^n, and 1/A swaps the plus and minus families", 0.0,
            [&](std::string&) {
                const auto ber = AppellFamily::bernoulli(20);
                const auto flipped = AppellFamily::from_taylor("inverse-bernoulli", bernoulli_inverse_taylor(20));
                double worst = 0.0;
                for (std::size_t n = 0; n <= 20; ++n) {
                    worst = std::max({worst,
                                      max_abs_diff(appell_poly(ber, n, Sign::minus), appell_poly(flipped, n, Sign::plus)),
                                      max_abs_diff(apply_characteristic(ber, appell_poly(ber, n, Sign::minus), Sign::plus),
                                                   monomial(n))});
                }
                return worst;
            });
    b.check("reconstruction-monotone", "Bernoulli reconstruction of e^(-x^2) on [-1, 1] improves from 16 to 20 terms",
            0.0, [&](std::string& detail) {
                const auto ber = AppellFamily::bernoulli();
                const auto gauss = [](double x) { return Complex(std::exp(-x * x)); };
                std::vector<double> grid;
                for (int i = -10; i <= 10; ++i) grid.push_back(i / 10.0);
                const double r16 = reconstruction_residual(
                    ber, expansion_coefficients(ber, op::FourierSymbol::gaussian(1.0), 16), gauss, grid);
                const double r20 = reconstruction_residual(
                    ber, expansion_coefficients(ber, op::FourierSymbol::gaussian(1.0), 20), gauss, grid);
                detail = "r16 = " + std::to_string(r16) + ", r20 = " + std::to_string(r20);
                return r20 < r16 ? 0.0 : r20 - r16;
            });
    b.erratum("bernoulli-printed-normalization", "printed normalization 1/sqrt(2 pi n!) for the Bernoulli coefficients",
              1e-8, [&](std::string&) {
                  const auto res = expansion_coefficients(AppellFamily::bernoulli(), op::FourierSymbol::gaussian(1.0), 4);
                  double worst = 0.0;
                  for (std::size_t n = 1; n <= 4; ++n) {
                      worst = std::max(worst, std::abs(bernoulli_gaussian_printed(n) - res.coefficients[n]));
                  }
                  return worst;
              });
}

}  // namespace

void appell_suites(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out) {
    SuiteBuilder b(name, opts, out);
    if (name == "appell") appell_checks(b);
}

}  // namespace umbra::checks::detail
