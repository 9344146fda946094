#pragma once

#include <functional>
#include <string>
#include <vector>

#include "umbra/quadrature.hpp"
#include "umbra/rational.hpp"

namespace umbra::op {

/// Fourier pair f(x) = (1/sqrt(2 pi)) int f~(k) e^(ikx) dk, used to evaluate
/// f(A) = (1/sqrt(2 pi)) int f~(k) e^(ikA) dk.
///
/// f~ is split into point masses (for constants and trigonometric parts) and
/// a continuous part e^(-k^2/(4y)) shape(k) whose Gaussian envelope is handed
/// to the Gauss-Hermite rules.
class FourierSymbol {
public:
    struct Atom {
        double k;
        Complex mass;  // f~ contains mass * delta(k - k_j)
    };

    FourierSymbol(std::string name, std::vector<Atom> atoms, double envelope, std::function<Complex(double)> shape,
                  std::function<Complex(Complex)> value, std::function<std::vector<double>(std::size_t)> taylor);

    /// e^(-s x^2)
    static FourierSymbol gaussian(double s);
    /// cos(w x) e^(-s x^2)
    static FourierSymbol cos_gaussian(double s, double w);
    /// x e^(-s x^2)
    static FourierSymbol x_gaussian(double s);
    /// cos(w x), two point masses
    static FourierSymbol cosine(double w);
    /// The constant c; f(A) = c for every operator A.
    static FourierSymbol constant(Complex c);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    bool has_continuous_part() const noexcept { return static_cast<bool>(shape_); }
    /// y of the envelope e^(-k^2/(4y)); zero without a continuous part.
    double envelope() const noexcept { return envelope_; }
    Complex shape(double k) const { return shape_(k); }
    /// Continuous part of f~ at k, envelope included.
    Complex transform(double k) const;
    /// f itself.
    Complex value(Complex z) const { return value_(z); }
    /// Taylor coefficients c_0 .. c_order of f at 0.
    std::vector<double> taylor(std::size_t order) const { return taylor_(order); }

private:
    std::string name_;
    std::vector<Atom> atoms_;
    double envelope_ = 0.0;
    std::function<Complex(double)> shape_;
    std::function<Complex(Complex)> value_;
    std::function<std::vector<double>(std::size_t)> taylor_;
};

struct SymbolIntegral {
    Complex value;
    std::size_t nodes = 0;
    bool converged = true;
};

/// (1/sqrt(2 pi)) int f~(k) e^(-c k^2) g(k) dk. The extra Gaussian factor is
/// folded into the envelope; DivergenceError when 1/(4y) + c <= 0 leaves the
/// integrand undamped.
SymbolIntegral symbol_integral(const FourierSymbol& f, const std::function<Complex(double)>& g, double c = 0.0,
                               const quad::QuadOptions& opts = {});

}  // namespace umbra::op
