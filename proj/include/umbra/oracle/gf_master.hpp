#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "umbra/gftrans.hpp"
#include "umbra/seqcore.hpp"

/// Closed-form generating functions compared against truncated series of the
/// exactly transformed sequence. Shared by the unit tests, the check suites
/// and the acceptance runner.
namespace umbra::oracle {

struct GfComparison {
    std::string transform;
    std::string sequence;
    Complex x;
    Complex closed;
    Complex series;
    double tail_bound = 0.0;

    double difference() const { return std::abs(closed - series); }
    double scale() const { return std::max(1.0, std::abs(closed)); }
    /// Within the tail bound (plus floating-point rounding slack) and never
    /// worse than `rel` relative.
    bool agrees(double rel) const {
        return difference() <= tail_bound + 1e-12 * scale() && difference() <= rel * scale();
    }
};

inline constexpr std::size_t master_truncation = 64;

/// Twenty points in the closed disc |x| <= 0.5.
inline std::vector<Complex> master_sample_points() {
    return {{0.0, 0.0},   {0.1, 0.0},    {-0.1, 0.0},  {0.25, 0.0},   {-0.25, 0.0},
            {0.4, 0.0},   {-0.5, 0.0},   {0.45, 0.0},  {0.0, 0.3},    {0.0, -0.5},
            {0.3, 0.3},   {-0.3, 0.3},   {0.2, -0.4},  {-0.35, -0.35}, {0.0, 0.5},
            {0.15, 0.2},  {-0.45, 0.0},  {0.05, -0.05}, {-0.1, 0.35},  {0.3, -0.2}};
}

/// Truncated series of the transformed sequence, with a growth envelope
/// fitted on a prefix twice as long as the truncation so the tail bound is not
/// derived from the summed terms alone.
struct TransformedSeries {
    PowerSeries head;
    gf::Growth growth;

    gf::EvalResult at(Complex x) const { return gf::series_eval(head, x, growth); }
};

inline TransformedSeries transformed_series(const std::function<seq::Sequence(const seq::Sequence&)>& transform,
                                            const gf::SequenceModel& a, SeriesKind kind,
                                            std::size_t truncation = master_truncation) {
    const seq::Sequence long_b = transform(a.prefix(2 * truncation + 1));
    std::vector<Complex> all;
    for (const auto& v : long_b.terms()) all.push_back(to_complex(v));
    const gf::Growth growth = gf::envelope_growth(PowerSeries(all, kind), 0.25);
    std::vector<Complex> head(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(truncation) + 1);
    return {PowerSeries(std::move(head), kind), growth};
}

struct GfTransformCase {
    std::string name;
    SeriesKind kind;
    std::function<seq::Sequence(const seq::Sequence&)> transform;
    std::function<Complex(const gf::SequenceModel&, Complex)> closed;
};

inline std::vector<gf::SequenceModel> master_sequences() {
    std::vector<Rational> fixed{Rational(3, 2), Rational(-1), Rational(0), Rational(5, 7), Rational(2),
                                Rational(-4, 3), Rational(1, 9)};
    return {gf::SequenceModel::ones(), gf::SequenceModel::linear(), gf::SequenceModel::geometric(Rational(1, 2)),
            gf::SequenceModel::geometric(Rational(1, 3)), gf::SequenceModel::finite(seq::Sequence(fixed))};
}

/// Binomial, modular, k-binomial, Hermite, complementary Hermite and Laguerre,
/// in every kind the closed forms are stated for.
inline std::vector<GfTransformCase> master_transforms() {
    using gf::SequenceModel;
    const seq::ModularParams mod{Rational(4, 5), Rational(1, 2)};
    const seq::HermiteParams her{Rational(1, 2), Rational(-1, 3)};
    const seq::LaguerreParams lag{Rational(1), Rational(1, 2)};
    std::vector<GfTransformCase> out;
    for (SeriesKind kind : {SeriesKind::ordinary, SeriesKind::exponential}) {
        const std::string suffix = kind == SeriesKind::ordinary ? "/ordinary" : "/exponential";
        out.push_back({"binomial" + suffix, kind, [](const seq::Sequence& a) { return seq::binomial_transform(a); },
                       [kind](const SequenceModel& a, Complex x) {
                           return kind == SeriesKind::ordinary ? gf::binomial_gf_ordinary(a, x)
                                                               : gf::binomial_gf_exponential(a, x);
                       }});
        out.push_back({"modular" + suffix, kind, [mod](const seq::Sequence& a) { return seq::modular_transform(a, mod); },
                       [mod, kind](const SequenceModel& a, Complex x) {
                           return gf::modular_gf(a, mod.alpha, mod.beta, x, kind);
                       }});
        out.push_back({"k-binomial(2)" + suffix, kind, [](const seq::Sequence& a) { return seq::rising_k_binomial(a, 2); },
                       [kind](const SequenceModel& a, Complex x) { return gf::k_binomial_gf(a, 2, x, kind); }});
        out.push_back({"laguerre" + suffix, kind, [lag](const seq::Sequence& a) { return seq::laguerre_transform(a, lag); },
                       [lag, kind](const SequenceModel& a, Complex x) {
                           return gf::laguerre_gf(a, lag.alpha, lag.beta, x, kind);
                       }});
    }
    out.push_back({"hermite/exponential", SeriesKind::exponential,
                   [her](const seq::Sequence& a) { return seq::hermite_transform(a, her); },
                   [her](const SequenceModel& a, Complex x) {
                       return gf::hermite_gf(a, her.alpha, her.beta, x, gf::HermiteVariant::plain);
                   }});
    out.push_back({"hermite-complementary/exponential", SeriesKind::exponential,
                   [her](const seq::Sequence& a) { return seq::hermite_complementary(a, her); },
                   [her](const SequenceModel& a, Complex x) {
                       return gf::hermite_gf(a, her.alpha, her.beta, x, gf::HermiteVariant::complementary);
                   }});
    return out;
}

inline void compare_closed_form(const GfTransformCase& t, const gf::SequenceModel& a,
                                const std::vector<Complex>& points, std::vector<GfComparison>& out,
                                std::size_t truncation = master_truncation) {
    const TransformedSeries series = transformed_series(t.transform, a, t.kind, truncation);
    for (const auto& x : points) {
        const gf::EvalResult r = series.at(x);
        out.push_back({t.name, a.name, x, t.closed(a, x), r.value, r.tail_bound});
    }
}

inline std::vector<GfComparison> run_master_property(std::size_t truncation = master_truncation) {
    std::vector<GfComparison> out;
    const auto points = master_sample_points();
    for (const auto& t : master_transforms()) {
        for (const auto& a : master_sequences()) {
            compare_closed_form(t, a, points, out, truncation);
        }
    }
    return out;
}

/// k in {0..3}; ones, linear and a 2^n family (2^-n for the ordinary kind so
/// the closed form stays inside the radius, 2^n for the exponential kind).
inline std::vector<GfComparison> run_k_binomial_property(std::size_t truncation = master_truncation) {
    std::vector<GfComparison> out;
    const auto points = master_sample_points();
    for (unsigned k = 0; k <= 3; ++k) {
        for (SeriesKind kind : {SeriesKind::ordinary, SeriesKind::exponential}) {
            const GfTransformCase t{"k-binomial(" + std::to_string(k) + ")", kind,
                                    [k](const seq::Sequence& a) { return seq::rising_k_binomial(a, k); },
                                    [k, kind](const gf::SequenceModel& a, Complex x) {
                                        return gf::k_binomial_gf(a, k, x, kind);
                                    }};
            const Rational c = kind == SeriesKind::ordinary ? Rational(1, 2) : Rational(2);
            for (const auto& a : {gf::SequenceModel::ones(), gf::SequenceModel::linear(),
                                  gf::SequenceModel::geometric(c)}) {
                compare_closed_form(t, a, points, out, truncation);
            }
        }
    }
    return out;
}

}  // namespace umbra::oracle
