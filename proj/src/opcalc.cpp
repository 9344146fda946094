#include "umbra/opcalc.hpp"

#include <cmath>

#include "umbra/errors.hpp"
#include "umbra/specfun.hpp"

namespace umbra::op {

namespace {

constexpr Complex I(0.0, 1.0);

OpValue from(const SymbolIntegral& s) { return {s.value, s.nodes, s.converged}; }

Complex horner(const std::vector<Complex>& p, Complex z) {
    Complex acc = 0.0;
    for (std::size_t n = p.size(); n-- > 0;) acc = acc * z + p[n];
    return acc;
}

FormalExpansion exp_scalar(const Rational& c, unsigned order, const FormalExpansion& e) {
    return FormalOperator().add(c, order, 0, 0).exp_apply(e);
}

}  // namespace

OpValue phi_shift_transform(const FourierSymbol& phi, const std::function<Complex(Complex)>& g, Complex x) {
    return from(symbol_integral(phi, [&](double k) { return g(x + I * k); }));
}

OpValue hermite_integral(unsigned n, Complex x, double y) {
    return phi_shift_transform(FourierSymbol::gaussian(y), [n](Complex z) { return integer_power(z, n); }, x);
}

OpValue monomial_from_hermite(unsigned n, Complex x, double y) {
    const Complex yc(y, 0.0);
    return phi_shift_transform(
        FourierSymbol::gaussian(y), [n, yc](Complex z) { return specfun::hermite2(n, z, yc); }, x);
}

OpValue gabor_like_transform(const FourierSymbol& phi, const std::vector<Complex>& g, double alpha, double beta,
                             Complex x) {
    const auto integrand = [&](double k) { return std::exp(I * k * beta * x) * horner(g, x + I * alpha * k); };
    return from(symbol_integral(phi, integrand, 0.5 * alpha * beta));
}

Rational weyl_check(const Rational& a, const Rational& b, unsigned order) {
    if (order > 16) throw InvalidParameter("weyl_check supports orders up to 16");
    const FormalOperator sum = FormalOperator().add(a, 1, 0, 1).add(b, 1, 1, 0);
    const FormalOperator da = FormalOperator().add(a, 1, 0, 1);
    const FormalOperator xb = FormalOperator().add(b, 1, 1, 0);
    Rational worst = 0;
    for (std::size_t d = 0; d <= 8; ++d) {
        const FormalExpansion start = FormalExpansion::monomial(d, order);
        FormalExpansion lhs = sum.exp_apply(start);
        const FormalExpansion rhs = da.exp_apply(xb.exp_apply(exp_scalar(Rational(-a * b / 2), 2, start)));
        lhs -= rhs;
        const Rational r = lhs.max_abs();
        if (r > worst) worst = r;
    }
    return worst;
}

Rational cubic_disentangle_check(const Rational& alpha, const Rational& beta, unsigned order, CubicForm form) {
    if (order > 10) throw InvalidParameter("cubic_disentangle_check supports orders up to 10");
    const auto root = exact_sqrt(alpha);
    if (!root) throw InvalidParameter("alpha must be the square of a rational");
    const FormalOperator lhs_op = FormalOperator().add(alpha, 1, 0, 2).add(beta, 1, 1, 0);
    const FormalOperator b_op = FormalOperator().add(beta, 1, 1, 0);

    Rational worst = 0;
    for (std::size_t d = 0; d <= 6; ++d) {
        const FormalExpansion start = FormalExpansion::monomial(d, order);
        FormalExpansion lhs = lhs_op.exp_apply(start);
        FormalExpansion rhs(order);
        if (form == CubicForm::printed_ordered) {
            // e^B e^((10/3) eps^3 alpha beta^2) e^(2 eps^2 alpha beta d) e^(eps alpha d^2)
            FormalExpansion e = FormalOperator().add(alpha, 1, 0, 2).exp_apply(start);
            e = FormalOperator().add(Rational(2 * alpha * beta), 2, 0, 1).exp_apply(e);
            e = exp_scalar(Rational(Rational(10, 3) * alpha * beta * beta), 3, e);
            rhs = b_op.exp_apply(e);
        } else {
            // m = 2 eps^(3/2) q beta, A^(1/2) = eps^(1/2) sqrt(alpha) d:
            // m^2/12 = eps^3 q^2 beta^2 / 3, (m/2) A^(1/2) = eps^2 q sqrt(alpha) beta d.
            const Rational q = form == CubicForm::derived ? *root : Rational(alpha * alpha);
            const FormalOperator ordered = FormalOperator()
                                               .add(Rational(q * q * beta * beta / 3), 3, 0, 0)
                                               .add(Rational(-q * *root * beta), 2, 0, 1)
                                               .add(alpha, 1, 0, 2);
            rhs = ordered.exp_apply(b_op.exp_apply(start));
        }
        lhs -= rhs;
        const Rational r = lhs.max_abs();
        if (r > worst) worst = r;
    }
    return worst;
}

OpValue O_on_monomial(const FourierSymbol& f, double alpha, double beta, unsigned n, Complex x, bool printed) {
    const double phase = printed ? 10.0 / 3.0 : 1.0 / 3.0;
    const double shift = printed ? 2.0 : 1.0;
    const auto integrand = [&](double k) {
        const Complex h = specfun::hermite2(n, Complex(x - shift * k * k * alpha * beta), Complex(0.0, k * alpha));
        return std::exp(-I * phase * k * k * k * alpha * beta * beta) * std::exp(I * k * beta * x) * h;
    };
    return from(symbol_integral(f, integrand));
}

Matrix2 pauli_generator(double omega_mag) {
    return {{{Complex(0.0), Complex(0.0, omega_mag)}, {Complex(0.0, -omega_mag), Complex(0.0)}}};
}

Matrix2 matrix_function_pauli(const FourierSymbol& f, double omega_mag) {
    if (omega_mag < 0.0) throw InvalidParameter("|Omega| must be nonnegative");
    const Complex c = symbol_integral(f, [omega_mag](double k) { return Complex(std::cos(omega_mag * k)); }).value;
    const Complex s = symbol_integral(f, [omega_mag](double k) { return Complex(std::sin(omega_mag * k)); }).value;
    return {{{c, -s}, {s, c}}};
}

ExactSeries commutator_residual(const ExactSeries& f) {
    const ExactSeries a = laguerre_derivative(neg_derivative_pow(f, 1));
    const ExactSeries b = neg_derivative_pow(laguerre_derivative(f), 1);
    auto out = ExactSeries::zero(f.truncation_order());
    for (std::size_t n = 0; n < out.size(); ++n) {
        const Rational bn = n < b.size() ? b[n] : Rational(0);
        out[n] = a[n] - bn - f[n];
    }
    return out;
}

ExactSeries commutator_check_LD(const ExactSeries& f) {
    if (sgn(f[0]) != 0) throw PreconditionError("commutator check requires f(0) = 0");
    return commutator_residual(f);
}

OpValue umbral_operator_transform(const FourierSymbol& F, const gf::SequenceModel& a, double x) {
    if (!(std::abs(x) < a.ogf_radius)) throw DivergenceError("x outside the radius of the generating function");
    const auto integrand = [&](double k) {
        const Complex d = 1.0 - I * k * x;
        return gf::ogf_value(a, x / d) / d;
    };
    return from(symbol_integral(F, integrand));
}

}  // namespace umbra::op
