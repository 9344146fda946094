#include "umbra/rational.hpp"

#include <cctype>

#include "umbra/errors.hpp"

namespace umbra {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const auto slash = text.find('/');
    const auto num = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    if (!all_digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 1, pos + 1);
    Integer numerator{std::string(num)};
    Integer denominator(1);
    if (slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'", 1, slash + 2);
        denominator = Integer(std::string(den));
        if (denominator == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, slash + 2);
    }
    if (!text.empty() && text[0] == '-') numerator = -numerator;
    Rational out(numerator, denominator);
    out.canonicalize();
    return out;
}

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidParameter("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& value, long exponent) {
    if (exponent < 0) {
        if (sgn(value) == 0) throw InvalidParameter("zero raised to a negative power");
        return Rational(1) / pow(value, -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer out(1);
    for (unsigned j = 0; j < k; ++j) out *= n - j;
    return out;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (sgn(value) < 0) return std::nullopt;
    if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 || mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer num;
    Integer den;
    mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
    return Rational(num, den);
}

}  // namespace umbra
