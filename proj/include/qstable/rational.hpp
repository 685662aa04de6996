#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <stdexcept>
#include <string>

namespace qstab {

// Exact rational scalar used by every geometric routine. GMP-backed so
// simplex pivots never overflow, and there is no rounding anywhere.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "42", "-3/7", or "1.25" (decimals are converted exactly, so
// "0.1" becomes 1/10, not a binary approximation). Anything else throws
// std::invalid_argument naming the offending token.
inline Rational parse_rational(const std::string& token) {
    auto fail = [&token]() -> Rational {
        throw std::invalid_argument("not a rational literal: '" + token + "'");
    };
    if (token.empty()) return fail();

    std::size_t pos = 0;
    bool negative = false;
    if (token[pos] == '+' || token[pos] == '-') {
        negative = token[pos] == '-';
        ++pos;
    }
    if (pos == token.size()) return fail();

    auto digits = [&token, &fail](std::size_t from, std::size_t to) {
        if (from == to) fail();
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(token[i]))) fail();
        }
        return BigInt(token.substr(from, to - from));
    };

    std::size_t slash = token.find('/', pos);
    std::size_t dot = token.find('.', pos);
    Rational value;
    if (slash != std::string::npos) {
        if (dot != std::string::npos) fail();
        BigInt num = digits(pos, slash);
        BigInt den = digits(slash + 1, token.size());
        if (den == 0) throw std::invalid_argument("zero denominator: '" + token + "'");
        value = Rational(num, den);
    } else if (dot != std::string::npos) {
        BigInt whole = dot > pos ? digits(pos, dot) : BigInt(0);
        std::size_t frac_len = token.size() - dot - 1;
        BigInt frac = digits(dot + 1, token.size());
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
        value = Rational(whole * scale + frac, scale);
    } else {
        value = Rational(digits(pos, token.size()));
    }
    return negative ? Rational(-value) : value;
}

// Inverse of parse_rational's fraction form: "n" when integral, else "n/d".
inline std::string rational_to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace qstab
