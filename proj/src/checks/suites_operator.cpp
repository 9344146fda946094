#include <cmath>

#include "suite_support.hpp"
#include "umbra/appell.hpp"
#include "umbra/opcalc.hpp"
#include "umbra/oracle/operators.hpp"
#include "umbra/specfun.hpp"

namespace umbra::checks::detail {

namespace {

using op::FourierSymbol;

double max_entry_diff(const op::Matrix2& a, const oracle::Matrix2& b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    }
    return d;
}

double max_abs(const ExactSeries& s) {
    Rational worst = 0;
    for (const auto& v : s.coeffs()) worst = std::max(worst, Rational(abs(v)));
    return worst.get_d();
}

double max_abs_diff(const ExactSeries& a, const ExactSeries& b) {
    Rational worst = 0;
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) {
        const Rational x = n < a.size() ? a[n] : Rational(0);
        const Rational y = n < b.size() ? b[n] : Rational(0);
        worst = std::max(worst, abs_diff(x, y));
    }
    return worst.get_d();
}

ExactSeries c0_exact(std::size_t order) { return ExactSeries(specfun::tricomi_c_coefficients(0, order)); }

void quadrature(SuiteBuilder& b) {
    b.check("gauss-weighted-moments", "int e^(-k^2/(4y)) k^(2m) dk = Gamma(m + 1/2) (4y)^(m + 1/2) for m <= 6", 1e-12,
            [&](std::string&) {
                double worst = 0.0;
                for (double y : {0.1, 0.5, 2.0}) {
                    for (int m = 0; m <= 6; ++m) {
                        const auto r = quad::gauss_weighted_integral(
                            [m](double k) { return Complex(std::pow(k, 2 * m)); }, y);
                        const double expect = std::tgamma(m + 0.5) * std::pow(4.0 * y, m + 0.5);
                        worst = std::max(worst, std::abs(r.value - expect) / expect);
                    }
                }
                return worst;
            });
    b.check("legendre-composite", "composite Gauss-Legendre integral of cos on [0, 3]", 1e-12, [&](std::string&) {
        const auto r = quad::legendre_integral([](double k) { return Complex(std::cos(k)); }, 0.0, 3.0);
        return std::abs(r.value - std::sin(3.0));
    });
}

void hermite_integral(SuiteBuilder& b) {
    // Degrees 0, 3, 5, 8, 10 with five x and five y values: 125 points.
    const unsigned degrees[] = {0, 3, 5, 8, 10};
    const double xs[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
    const double ys[] = {0.1, 0.575, 1.05, 1.525, 2.0};
    b.check("hermite-shift-integral", "e^(-y d^2) x^n by quadrature equals H_n(x, -y) on 125 points", 1e-8,
            [&](std::string&) {
                double worst = 0.0;
                for (unsigned n : degrees) {
                    for (double x : xs) {
                        for (double y : ys) {
                            const Complex expect = specfun::hermite2(n, Complex(x), Complex(-y));
                            worst = std::max(worst, std::abs(op::hermite_integral(n, x, y).value - expect));
                        }
                    }
                }
                return worst;
            },
            10.0);
    b.check("monomial-from-hermite", "Gaussian average of H_n(x + ik, y) equals x^n on 125 points", 1e-8,
            [&](std::string&) {
                double worst = 0.0;
                for (unsigned n : degrees) {
                    for (double x : xs) {
                        for (double y : ys) {
                            worst = std::max(worst, std::abs(op::monomial_from_hermite(n, x, y).value - std::pow(x, n)));
                        }
                    }
                }
                return worst;
            },
            10.0);
}

void heat(SuiteBuilder& b) {
    const auto f = op::GridFunction::sample([](double x) { return Complex(std::exp(-x * x / 2.0)); }, 20.0, 1024);
    b.check("heat-gaussian-widening", "e^(alpha d^2) e^(-x^2/2) at alpha = 1/2 equals e^(-x^2/4)/sqrt(2) on grid",
            1e-6, [&](std::string&) {
                const auto g = op::heat_evolve_ft(f, 0.5);
                double worst = 0.0;
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const double x = g.x(j);
                    worst = std::max(worst, std::abs(g[j] - std::exp(-x * x / 4.0) / std::sqrt(2.0)));
                }
                return worst;
            });
    b.check("heat-identity", "alpha = 0 returns the input samples", 0.0, [&](std::string&) {
        const auto g = op::heat_evolve_ft(f, 0.0);
        double worst = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) worst = std::max(worst, std::abs(g[j] - f[j]));
        return worst;
    });
    b.check("heat-linearity", "evolution of a sum equals the sum of evolutions", 1e-12, [&](std::string&) {
        const auto h =
            op::GridFunction::sample([](double x) { return Complex(x * std::exp(-(x - 1) * (x - 1))); }, 20.0, 1024);
        std::vector<Complex> sum(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) sum[j] = f[j] + h[j];
        const auto lhs = op::heat_evolve_ft(op::GridFunction(20.0, sum), 0.3);
        const auto p = op::heat_evolve_ft(f, 0.3);
        const auto q = op::heat_evolve_ft(h, 0.3);
        double worst = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) worst = std::max(worst, std::abs(lhs[j] - p[j] - q[j]));
        return worst;
    });
}

void tricomi(SuiteBuilder& b) {
    b.check("tricomi-evolution-grid", "e^(-tau D^-2) 1 by quadrature against the series on an 11 x 11 grid in [0,1]^2",
            1e-8, [&](std::string&) {
                double worst = 0.0;
                for (int i = 0; i <= 10; ++i) {
                    for (int j = 0; j <= 10; ++j) {
                        const double x = i / 10.0;
                        const double tau = j / 10.0;
                        worst = std::max(worst,
                                         std::abs(op::tricomi_evolution(x, tau).value - oracle::tricomi_series(x, tau)));
                    }
                }
                return worst;
            });
    b.check("tricomi-spot-value", "F(1, 1) against 0.5206029", 5e-8, [&](std::string& detail) {
        const Complex v = op::tricomi_evolution(1.0, 1.0).value;
        detail = "F(1,1) = " + std::to_string(v.real());
        return std::abs(v - 0.5206029);
    });
    b.check("neg-derivative-exponential", "e^(-D^-1) 1 equals C_0 exactly through order 16", 0.0, [&](std::string&) {
        return max_abs_diff(op::exp_negD(Rational(1), ExactSeries({Rational(1)}), 16), c0_exact(16));
    });
    // f = x^2, alpha = 1/2: the image is 2 x^2 C_2(x/2).
    const ExactSeries x2({Rational(0), Rational(0), Rational(1)});
    const auto c2 = specfun::tricomi_c_coefficients(2, 8);
    b.check("neg-derivative-monomial", "e^(-alpha D^-1) x^2 equals 2 x^2 C_2(alpha x) at alpha = 1/2", 0.0,
            [&](std::string&) {
                std::vector<Rational> expect(11);
                for (std::size_t r = 0; r <= 8; ++r) expect[r + 2] = 2 * c2[r] * pow(Rational(1, 2), static_cast<long>(r));
                return max_abs_diff(op::exp_negD(Rational(1, 2), x2, 10), ExactSeries(expect));
            });
    b.erratum("neg-derivative-printed", "printed image (a_n/n!) x^n C_n(x) without alpha, at f = x^2, alpha = 1/2", 0.0,
              [&](std::string&) {
                  std::vector<Rational> printed(11);
                  for (std::size_t r = 0; r <= 8; ++r) printed[r + 2] = c2[r];
                  return max_abs_diff(op::exp_negD(Rational(1, 2), x2, 10), ExactSeries(printed));
              });
}

void disentangle(SuiteBuilder& b) {
    b.check("weyl-decoupling", "e^(eps(a d + b x)) against its ordered form, exact through order 8", 0.0,
            [&](std::string&) {
                Rational worst = 0;
                for (const auto& [p, q] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(2, 3), Rational(-5, 7)},
                                           std::pair{Rational(-2, 5), Rational(3, 2)}}) {
                    worst = std::max(worst, op::weyl_check(p, q, 8));
                }
                return worst.get_d();
            });
    b.check("cubic-disentangle", "e^(eps(alpha d^2 + beta x)) against its ordered form, exact through order 8", 0.0,
            [&](std::string&) {
                Rational worst = 0;
                for (const auto& [p, q] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(4), Rational(1)},
                                           std::pair{Rational(4, 9), Rational(-3, 2)}}) {
                    worst = std::max(worst, op::cubic_disentangle_check(p, q, 8));
                }
                return worst.get_d();
            });
    b.check("operator-on-monomial", "f(alpha d^2 + beta x) x^n against the operator Taylor series, n <= 3", 1e-7,
            [&](std::string&) {
                const FourierSymbol f = FourierSymbol::gaussian(1.0);
                const auto taylor = oracle::gaussian_taylor(1.0, 160);
                const std::vector<oracle::OperatorMonomial> opm = {{0.25, 0, 2}, {0.25, 1, 0}};
                double worst = 0.0;
                for (unsigned n = 0; n <= 3; ++n) {
                    std::vector<double> mono(n + 1, 0.0);
                    mono[n] = 1.0;
                    const Complex expect = oracle::operator_taylor_series(taylor, opm, mono, 0.5);
                    worst = std::max(worst, std::abs(op::O_on_monomial(f, 0.25, 0.25, n, 0.5).value - expect));
                }
                return worst;
            });
    b.check("gabor-like", "Phi(alpha d + beta x) g against the operator Taylor series", 1e-8, [&](std::string&) {
        const auto taylor = oracle::gaussian_taylor(1.0, 120);
        const std::vector<oracle::OperatorMonomial> opm = {{0.5, 0, 1}, {0.5, 1, 0}};
        double worst = 0.0;
        for (const std::vector<Complex>& g : {std::vector<Complex>{1.0}, std::vector<Complex>{0.0, 1.0}}) {
            const std::vector<double> gd = {g.size() == 1 ? 1.0 : 0.0, g.size() == 2 ? 1.0 : 0.0};
            const Complex expect = oracle::operator_taylor_series(taylor, opm, gd, 0.3);
            worst = std::max(worst,
                             std::abs(op::gabor_like_transform(FourierSymbol::gaussian(1.0), g, 0.5, 0.5, 0.3).value -
                                      expect));
        }
        return worst;
    });
    b.erratum("cubic-printed-m", "printed m with alpha^2 in place of sqrt(alpha), at alpha = 4, beta = 1", 0.0,
              [&](std::string&) {
                  return op::cubic_disentangle_check(Rational(4), Rational(1), 8, op::CubicForm::printed_m).get_d();
              });
    b.erratum("cubic-printed-ordering", "printed phase 10/3 and shift 2 k^2 alpha beta, at alpha = beta = 1", 0.0,
              [&](std::string&) {
                  return op::cubic_disentangle_check(Rational(1), Rational(1), 8, op::CubicForm::printed_ordered)
                      .get_d();
              });
}

void pauli(SuiteBuilder& b) {
    b.check("pauli-spectral", "f(M) by quadrature against the spectral oracle, Gaussian and cos-Gaussian symbols",
            1e-8, [&](std::string&) {
                const FourierSymbol gauss = FourierSymbol::gaussian(1.0);
                const FourierSymbol damped = FourierSymbol::cos_gaussian(0.5, 1.3);
                double worst = 0.0;
                for (double omega : {0.0, 0.7, 1.0, 2.0}) {
                    const auto m = op::pauli_generator(omega);
                    const oracle::Matrix2 om = {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
                    for (const FourierSymbol* f : {&gauss, &damped}) {
                        const auto expect =
                            oracle::spectral_matrix_function([f](Complex z) { return f->value(z); }, om);
                        worst = std::max(worst, max_entry_diff(op::matrix_function_pauli(*f, omega), expect));
                    }
                }
                return worst;
            });
    b.check("pauli-gaussian-identity", "e^(-M^2) at |Omega| = 1 equals e^(-1) times the identity", 1e-12,
            [&](std::string&) {
                const auto r = op::matrix_function_pauli(FourierSymbol::gaussian(1.0), 1.0);
                const double e = std::exp(-1.0);
                return std::max({std::abs(r[0][0] - e), std::abs(r[1][1] - e), std::abs(r[0][1]), std::abs(r[1][0])});
            });
}

void weyl_borel(SuiteBuilder& b) {
    b.check("laguerre-commutator", "[LD, D^-1] = 1 on random polynomials with f(0) = 0", 0.0, [&](std::string&) {
        std::mt19937_64 rng(b.options().seed + 3);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            std::vector<Rational> c(12);
            for (std::size_t n = 1; n < c.size(); ++n) c[n] = random_rational(rng, 1000);
            worst = std::max(worst, max_abs(op::commutator_check_LD(ExactSeries(c))));
        }
        return worst;
    });
    b.check("borel-c0", "Borel transform of C_0 equals e^(-x) coefficientwise", 0.0, [&](std::string&) {
        const ExactSeries bt = op::borel_transform(c0_exact(30));
        std::vector<Rational> expect(31);
        Rational t = 1;
        for (std::size_t n = 0; n <= 30; ++n) {
            expect[n] = t;
            t /= -static_cast<long>(n + 1);
        }
        return max_abs_diff(bt, ExactSeries(expect));
    });
    b.check("laguerre-exponential-routes", "Borel and matrix routes for e^(alpha LD) agree", 1e-10, [&](std::string&) {
        const PowerSeries f({3.0, -1.0, 4.0, 1.0, -5.0, 0.5, 2.0});
        double worst = 0.0;
        for (double alpha : {1.0, -2.0 / 3.0, 2.5}) {
            const auto p = op::exp_laguerre_derivative(Complex(alpha), f);
            const auto q = op::exp_laguerre_derivative(Complex(alpha), f, op::LaguerreRoute::matrix);
            for (std::size_t n = 0; n < p.size(); ++n) worst = std::max(worst, std::abs(p[n] - q[n]) / std::max(1.0, std::abs(p[n])));
        }
        return worst;
    });
    b.check("laguerre-eigenfunction", "e^(alpha LD) C_0 equals e^(-alpha) C_0 at alpha = 1/3", 1e-10,
            [&](std::string&) {
                const ExactSeries c0 = c0_exact(24);
                const PowerSeries ev = op::exp_laguerre_derivative(Complex(1.0 / 3.0), to_complex(c0));
                const PowerSeries evm =
                    op::exp_laguerre_derivative(Complex(1.0 / 3.0), to_complex(c0), op::LaguerreRoute::matrix);
                double worst = 0.0;
                for (std::size_t n = 0; n <= 10; ++n) {
                    const double expect = std::exp(-1.0 / 3.0) * c0[n].get_d();
                    const double scale = std::abs(c0[n].get_d());
                    worst = std::max({worst, std::abs(ev[n] - expect) / scale, std::abs(evm[n] - expect) / scale});
                }
                return worst;
            });
}

/// The C_0 integral with the printed factor e^(+ik) and argument x + i beta k, m = 2.
double integro_printed(double beta, double tau, double x) {
    const double y = 1.0 / (1.0 / tau + 2.0 * beta);  // 1/(4y) = 1/(4 tau) + beta/2
    const auto r = quad::gauss_weighted_integral(
        [&](double k) {
            return std::exp(Complex(0.0, k)) * specfun::tricomi_c(0, Complex(x, beta * k));
        },
        y);
    return (r.value / (std::sqrt(2.0 * tau) * std::sqrt(2.0 * M_PI))).real();
}

void integro(SuiteBuilder& b) {
    const auto c0 = oracle::tricomi_c0_coefficients(40);
    b.check("integro-differential-evolution",
            "m = 2 evolution of C_0 against the degree-40 matrix exponential, beta in {0, 0.5, 1}, (x, tau) in [0, 0.5]^2",
            1e-6,
            [&](std::string& detail) {
                double worst = 0.0;
                std::size_t points = 0;
                for (double beta : {0.0, 0.5, 1.0}) {
                    for (int i = 0; i <= 5; ++i) {
                        for (int j = 0; j <= 5; ++j) {
                            const double x = 0.1 * i;
                            const double tau = 0.1 * j;
                            const double expect = oracle::integro_matrix_exponential(c0, beta, 2, tau, x);
                            worst = std::max(worst, std::abs(op::integro_diff_evolve_c0(beta, 2, tau, x).value - expect));
                            ++points;
                        }
                    }
                }
                detail = std::to_string(points) + " points";
                return worst;
            },
            60.0);
    b.check("integro-polynomial", "polynomial initial condition, m = 2, against the matrix exponential", 1e-6,
            [&](std::string&) {
                const std::vector<double> fc = {0.0, 1.0, -0.5, 0.25};
                const PowerSeries f({0.0, 1.0, -0.5, 0.25});
                double worst = 0.0;
                for (double beta : {0.0, 0.5, 1.0}) {
                    const double expect = oracle::integro_matrix_exponential(fc, beta, 2, 0.3, 0.4);
                    worst = std::max(worst, std::abs(op::integro_diff_evolve(f, beta, 2, 0.3, 0.4).value - expect));
                }
                return worst;
            });
    b.check("integro-higher-power", "m = 4 at beta = 0 against the terminating exact series, relative", 1e-6,
            [&](std::string&) {
                const std::vector<Rational> pe = {Rational(1), Rational(-2), Rational(1, 3), Rational(0), Rational(5, 2), Rational(-1)};
                std::vector<Complex> pd;
                for (const auto& v : pe) pd.push_back(v.get_d());
                const double expect =
                    oracle::laguerre_power_exponential(pe, 4, Rational(1, 20), Rational(3, 10)).get_d();
                const Complex v = op::integro_diff_evolve(PowerSeries(pd), 0.0, 4, 0.05, 0.3).value;
                return std::abs(v - expect) / std::max(1.0, std::abs(expect));
            });
    b.erratum("integro-printed-integrand", "printed e^(+ik) C_0(x + i beta k) at x = tau = 1/4, beta = 1", 1e-6,
              [&](std::string&) {
                  return std::abs(integro_printed(1.0, 0.25, 0.25) -
                                  oracle::integro_matrix_exponential(c0, 1.0, 2, 0.25, 0.25));
              });
}

void umbral(SuiteBuilder& b) {
    b.check("umbral-operator-transform", "Gaussian F(d_a) on a_n = 1 against the double sum, |x| <= 0.3", 1e-7,
            [&](std::string&) {
                std::vector<Rational> c(121);
                Rational term = 1;
                for (std::size_t j = 0; 2 * j < c.size(); ++j) {
                    c[2 * j] = term;
                    term *= Rational(-1, 10 * static_cast<long>(j + 1));
                }
                const seq::Sequence a(std::vector<Rational>(120, Rational(1)));
                const auto ones = gf::SequenceModel::ones();
                double worst = 0.0;
                for (int i = -3; i <= 3; ++i) {
                    const double x = 0.1 * i;
                    const auto sum = oracle::umbral_double_sum(c, a, x);
                    worst = std::max(
                        worst, std::abs(op::umbral_operator_transform(FourierSymbol::gaussian(0.1), ones, x).value - sum.value));
                }
                return worst;
            });
    b.check("umbral-heat-bridge", "e^(y d_a^2) read umbrally reproduces the complementary Hermite generating function",
            1e-10, [&](std::string&) {
                const auto ones = gf::SequenceModel::ones();
                const auto geo = gf::SequenceModel::geometric(Rational(1, 2));
                double worst = 0.0;
                for (const Rational& y : {Rational(1, 2), Rational(-1, 3)}) {
                    for (int i = 0; i < 10; ++i) {
                        const double x = -0.5 + i / 9.0;
                        for (const auto* a : {&ones, &geo}) {
                            const Complex closed =
                                gf::hermite_gf(*a, Rational(1), y, x, gf::HermiteVariant::complementary);
                            worst = std::max(worst, std::abs(appell::umbral_heat_egf(*a, y, x) - closed));
                        }
                    }
                }
                return worst;
            });
}

}  // namespace

void operator_suites(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out) {
    SuiteBuilder b(name, opts, out);
    if (name == "quadrature") quadrature(b);
    if (name == "hermite-integral") hermite_integral(b);
    if (name == "heat") heat(b);
    if (name == "tricomi") tricomi(b);
    if (name == "disentangle") disentangle(b);
    if (name == "pauli") pauli(b);
    if (name == "weyl-borel") weyl_borel(b);
    if (name == "integro") integro(b);
    if (name == "umbral") umbral(b);
}

}  // namespace umbra::checks::detail
