#include "umbra/oracle/operators.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

#include "umbra/errors.hpp"

namespace umbra::oracle {

namespace {

std::vector<double> apply_operator(const std::vector<OperatorMonomial>& op, const std::vector<double>& p) {
    std::size_t out_size = 0;
    for (const auto& t : op) out_size = std::max(out_size, p.size() + t.x_power);
    std::vector<double> out(out_size, 0.0);
    for (const auto& t : op) {
        for (std::size_t n = t.d_power; n < p.size(); ++n) {
            double falling = 1.0;
            for (unsigned i = 0; i < t.d_power; ++i) falling *= static_cast<double>(n - i);
            out[n - t.d_power + t.x_power] += t.coeff * falling * p[n];
        }
    }
    return out;
}

Complex evaluate(const std::vector<double>& p, Complex x) {
    Complex acc = 0.0;
    for (std::size_t n = p.size(); n-- > 0;) acc = acc * x + p[n];
    return acc;
}

}  // namespace

Complex operator_taylor_series(const std::vector<double>& taylor, const std::vector<OperatorMonomial>& op,
                               const std::vector<double>& g, Complex x) {
    std::vector<double> power = g;
    std::vector<double> sum;
    for (std::size_t j = 0; j < taylor.size(); ++j) {
        if (j > 0) power = apply_operator(op, power);
        if (sum.size() < power.size()) sum.resize(power.size(), 0.0);
        for (std::size_t n = 0; n < power.size(); ++n) sum[n] += taylor[j] * power[n];
    }
    return evaluate(sum, x);
}

std::vector<double> gaussian_taylor(double s, std::size_t order) {
    std::vector<double> c(order + 1, 0.0);
    double term = 1.0;
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        c[2 * j] = term;
        term *= -s / static_cast<double>(j + 1);
    }
    return c;
}

Matrix2 spectral_matrix_function(const std::function<Complex(Complex)>& f, const Matrix2& m) {
    Eigen::Matrix2cd a;
    a << m[0][0], m[0][1], m[1][0], m[1][1];
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(a);
    const Eigen::Matrix2cd v = solver.eigenvectors();
    Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) d(i, i) = f(solver.eigenvalues()(i));
    const Eigen::Matrix2cd r = v * d * v.inverse();
    return {{{r(0, 0), r(0, 1)}, {r(1, 0), r(1, 1)}}};
}

double tricomi_series(double x, double tau) {
    double sum = 0.0;
    double term = 1.0;  // (-tau)^m x^(2m) / (m! (2m)!)
    for (unsigned m = 0; m < 400; ++m) {
        sum += term;
        const double md = static_cast<double>(m);
        term *= -tau * x * x / ((md + 1.0) * (2.0 * md + 1.0) * (2.0 * md + 2.0));
        if (std::abs(term) < 1e-20 * std::max(1.0, std::abs(sum))) break;
    }
    return sum;
}

double integro_matrix_exponential(const std::vector<double>& f, double beta, unsigned m, double tau, double x,
                                  std::size_t degree) {
    const auto n = static_cast<Eigen::Index>(degree + 1);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 1; j < n; ++j) a(j - 1, j) = static_cast<double>(j * j);
    for (Eigen::Index j = 0; j + 1 < n; ++j) a(j + 1, j) += beta / static_cast<double>(j + 1);
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
    for (unsigned i = 0; i < m; ++i) p = p * a;
    const Eigen::MatrixXd e = (-tau * p).exp();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < f.size() && static_cast<Eigen::Index>(i) < n; ++i) v(static_cast<Eigen::Index>(i)) = f[i];
    const Eigen::VectorXd out = e * v;
    double acc = 0.0;
    for (Eigen::Index i = n; i-- > 0;) acc = acc * x + out(i);
    return acc;
}

Rational laguerre_power_exponential(const std::vector<Rational>& f, unsigned m, const Rational& tau,
                                    const Rational& x) {
    if (m == 0) throw InvalidParameter("m must be positive");
    std::vector<Rational> term = f;  // (-tau)^j LD^(mj) f / j!
    std::vector<Rational> sum = f;
    for (long j = 1; !term.empty(); ++j) {
        for (unsigned i = 0; i < m && !term.empty(); ++i) {
            // x^n -> n^2 x^(n-1)
            std::vector<Rational> next(term.size() - 1);
            for (std::size_t n = 1; n < term.size(); ++n) next[n - 1] = term[n] * static_cast<long>(n * n);
            term = std::move(next);
        }
        for (auto& v : term) v *= -tau / j;
        for (std::size_t n = 0; n < term.size(); ++n) sum[n] += term[n];
    }
    Rational acc = 0;
    for (std::size_t n = sum.size(); n-- > 0;) acc = acc * x + sum[n];
    return acc;
}

std::vector<double> tricomi_c0_coefficients(std::size_t degree) {
    std::vector<double> c(degree + 1);
    double term = 1.0;
    for (std::size_t r = 0; r <= degree; ++r) {
        c[r] = term;
        term *= -1.0 / (static_cast<double>(r + 1) * static_cast<double>(r + 1));
    }
    return c;
}

DoubleSum umbral_double_sum(const std::vector<Rational>& c, const seq::Sequence& a, double x) {
    const Rational xr(x);
    std::vector<double> terms;
    terms.reserve(a.size());
    Rational x_pow = 1;
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational inner = 0;
        Rational falling = 1;  // n!/(n-m)!
        for (std::size_t m = 0; m <= n && m < c.size(); ++m) {
            if (m > 0) falling *= static_cast<long>(n - m + 1);
            if (sgn(c[m]) != 0) inner += c[m] * falling * a[n - m];
        }
        terms.push_back(Rational(inner * x_pow).get_d());
        x_pow *= xr;
    }
    // Cut where max(|t_n|, |t_(n+1)|) is smallest, so isolated near-zero
    // terms do not end the sum early.
    std::size_t cut = terms.size();
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
        const double pair = std::max(std::abs(terms[n]), std::abs(terms[n + 1]));
        if (pair < smallest) {
            smallest = pair;
            cut = n;
        }
    }
    double sum = 0.0;
    for (std::size_t n = 0; n < cut; ++n) sum += terms[n];
    return {sum, smallest, cut};
}

}  // namespace umbra::oracle
