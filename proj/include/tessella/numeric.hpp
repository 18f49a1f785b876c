#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tessella {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Base of every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// 1/p + 1/q >= 1/2
struct NotHyperbolic : Error {
    using Error::Error;
};

inline bool is_integral(const rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// "p/q" or "p"; never exponent notation.
inline std::string to_string(const integer& v) { return v.str(); }

inline std::string to_string(const rational& v) {
    if (is_integral(v)) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Digits only, read as decimal.  Leading zeros are dropped so the string is
// never taken for an octal literal.
inline integer decimal_digits(std::string_view digits) {
    auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return integer{std::string(digits.substr(first))};
}

// Decimal integer with optional sign.
inline integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body))
        throw ParseError("not a decimal integer: '" + std::string(text) + "'");
    integer v = decimal_digits(body);
    return negative ? integer(-v) : v;
}

// "p", "-p" or "p/q" with q > 0.
inline rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return rational(parse_integer(text));
    integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw ParseError("bad denominator in '" + std::string(text) + "'");
    integer den = decimal_digits(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return rational(num, den);
}

inline integer ipow(const integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline rational ipow(const rational& base, unsigned exponent) {
    return rational(ipow(boost::multiprecision::numerator(base), exponent),
                    ipow(boost::multiprecision::denominator(base), exponent));
}

// TESSELLA_CAP, when set to a positive integer, replaces the default cap.
inline std::uint64_t cap_from_env(std::uint64_t fallback) {
    if (const char* v = std::getenv("TESSELLA_CAP")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && parsed > 0) return parsed;
    }
    return fallback;
}

}  // namespace tessella
