#pragma once

// Grossone arithmetic.
//
// A GrossNumber is a finite sum  c_1 G^e_1 + ... + c_k G^e_k  with rational
// coefficients and rational exponents, G standing for grossone.  Values are
// kept canonical: no zero coefficient is stored, so structural equality is
// numeric equality.  Finite numbers live at exponent 0, infinitesimals at
// negative exponents.
//
// Two ways to use a value:
//   * symbolically, where comparison is lexicographic on the exponents;
//   * concretely, where a finite Budget is substituted for G.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "numeric.hpp"

namespace tessella {

struct EvaluationUnsupported : Error {
    using Error::Error;
};
struct InvalidResidue : Error {
    using Error::Error;
};
struct InvalidBudget : Error {
    using Error::Error;
};

class GrossNumber {
public:
    // exponent -> coefficient, largest exponent first
    using Terms = std::map<rational, rational, std::greater<rational>>;

    GrossNumber() = default;
    GrossNumber(rational finite) {  // NOLINT(google-explicit-constructor)
        if (finite != 0) terms_.emplace(rational(0), std::move(finite));
    }
    GrossNumber(int finite) : GrossNumber(rational(finite)) {}  // NOLINT

    static GrossNumber monomial(rational coefficient, rational exponent) {
        GrossNumber out;
        if (coefficient != 0) out.terms_.emplace(std::move(exponent), std::move(coefficient));
        return out;
    }
    static GrossNumber grossone() { return monomial(1, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    rational coefficient(const rational& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? rational(0) : it->second;
    }

    GrossNumber& operator+=(const GrossNumber& other) {
        for (const auto& [e, c] : other.terms_) accumulate(e, c);
        return *this;
    }
    GrossNumber& operator-=(const GrossNumber& other) {
        for (const auto& [e, c] : other.terms_) accumulate(e, -c);
        return *this;
    }

    friend GrossNumber operator-(GrossNumber a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend GrossNumber operator+(GrossNumber a, const GrossNumber& b) { return a += b; }
    friend GrossNumber operator-(GrossNumber a, const GrossNumber& b) { return a -= b; }

    friend GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) {
        GrossNumber out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.accumulate(ea + eb, ca * cb);
        return out;
    }
    GrossNumber& operator*=(const GrossNumber& other) { return *this = *this * other; }

    friend bool operator==(const GrossNumber& a, const GrossNumber& b) {
        return a.terms_ == b.terms_;
    }

    // Sign of the leading coefficient of a - b.
    friend std::strong_ordering operator<=>(const GrossNumber& a, const GrossNumber& b) {
        GrossNumber diff = a - b;
        if (diff.is_zero()) return std::strong_ordering::equal;
        return diff.terms_.begin()->second > 0 ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
    }

private:
    void accumulate(const rational& exponent, const rational& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (inserted) return;
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }

    Terms terms_;
};

inline GrossNumber gross_add(const GrossNumber& a, const GrossNumber& b) { return a + b; }
inline GrossNumber gross_mul(const GrossNumber& a, const GrossNumber& b) { return a * b; }
inline std::strong_ordering gross_compare(const GrossNumber& a, const GrossNumber& b) {
    return a <=> b;
}

// The finite stand-in for grossone in concrete mode.
class Budget {
public:
    explicit Budget(integer value) : value_(std::move(value)) {
        if (value_ < 1) throw InvalidBudget("budget must be a positive integer, got " + value_.str());
    }
    explicit Budget(std::int64_t value) : Budget(integer(value)) {}

    // Plain decimal digits; arbitrary length.
    static Budget parse(std::string_view text) {
        if (!all_digits(text))
            throw InvalidBudget("budget must be a positive decimal integer, got '" +
                                std::string(text) + "'");
        return Budget(decimal_digits(text));
    }

    const integer& value() const noexcept { return value_; }
    friend bool operator==(const Budget&, const Budget&) = default;

private:
    integer value_;
};

// Substitutes the budget for G.  Only integer exponents have a rational value.
inline rational gross_evaluate(const GrossNumber& a, const Budget& g) {
    rational sum = 0;
    for (const auto& [e, c] : a.terms()) {
        if (!is_integral(e))
            throw EvaluationUnsupported("cannot evaluate G^(" + to_string(e) +
                                        ") at a finite budget");
        integer n = boost::multiprecision::numerator(e);
        if (boost::multiprecision::abs(n) > 1'000'000)
            throw EvaluationUnsupported("exponent too large to evaluate: " + n.str());
        auto magnitude = static_cast<unsigned>(boost::multiprecision::abs(n));
        integer power = ipow(g.value(), magnitude);
        sum += n >= 0 ? c * rational(power) : c / rational(power);
    }
    return sum;
}

// Number of elements of {k, k+n, k+2n, ...}: G/n symbolically.
inline GrossNumber progression_cardinality(const integer& k, const integer& n) {
    if (n < 1 || k < 1 || k > n)
        throw InvalidResidue("residue k=" + k.str() + " must satisfy 1 <= k <= n=" + n.str());
    return GrossNumber::monomial(rational(1, n), 1);
}

// |{m : 1 <= m <= g, m = k (mod n)}|
inline integer progression_cardinality(const integer& k, const integer& n, const Budget& g) {
    if (n < 1 || k < 1 || k > n)
        throw InvalidResidue("residue k=" + k.str() + " must satisfy 1 <= k <= n=" + n.str());
    if (g.value() < k) return 0;
    return (g.value() - k) / n + 1;
}

// Largest x with x^2 <= g.
inline integer kappa(const Budget& g) { return boost::multiprecision::sqrt(g.value()); }

// --- text form -------------------------------------------------------------
//
//   3*G^2 + 2*G + 5 + 7*G^-1     1/2*G     G^(1/2)     -G
//
// The parser accepts + - * / ^ and parentheses.  Division is only by a
// nonzero monomial, and powers other than non-negative integers only apply to
// monomials.  The grossone glyph U+2460 is accepted as a synonym for G.

inline std::string to_string(const GrossNumber& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        bool negative = c < 0;
        rational magnitude = negative ? rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (e == 0) {
            out += to_string(magnitude);
            continue;
        }
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += "G";
        if (e != 1) out += is_integral(e) ? "^" + to_string(e) : "^(" + to_string(e) + ")";
    }
    return out;
}

namespace detail {

class GrossParser {
public:
    explicit GrossParser(std::string_view text) : text_(text) {}

    GrossNumber parse() {
        GrossNumber v = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    GrossNumber expression() {
        GrossNumber v = product();
        for (;;) {
            skip_space();
            if (eat('+'))
                v += product();
            else if (eat('-'))
                v -= product();
            else
                return v;
        }
    }

    GrossNumber product() {
        GrossNumber v = unary();
        for (;;) {
            skip_space();
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                GrossNumber d = unary();
                if (!d.is_monomial()) fail("division is only defined by a nonzero monomial");
                const auto& [e, c] = *d.terms().begin();
                v *= GrossNumber::monomial(1 / c, -e);
            } else {
                return v;
            }
        }
    }

    GrossNumber unary() {
        skip_space();
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    GrossNumber power() {
        GrossNumber base = primary();
        skip_space();
        if (!eat('^')) return base;
        return raise(base, exponent());
    }

    GrossNumber primary() {
        skip_space();
        if (eat('(')) {
            GrossNumber v = expression();
            skip_space();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (eat('G') || eat_literal("\xE2\x91\xA0")) return GrossNumber::grossone();
        if (pos_ < text_.size() && is_digit(text_[pos_])) return GrossNumber(rational(digits()));
        fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                 : "unexpected end of input");
    }

    rational exponent() {
        skip_space();
        if (eat('(')) {
            skip_space();
            bool negative = eat('-');
            skip_space();
            rational e(digits());
            skip_space();
            if (eat('/')) {
                skip_space();
                integer den = digits();
                if (den == 0) fail("zero denominator in exponent");
                e /= rational(den);
            }
            skip_space();
            if (!eat(')')) fail("missing ')' in exponent");
            return negative ? rational(-e) : e;
        }
        bool negative = eat('-');
        if (!negative) eat('+');
        rational e(digits());
        return negative ? rational(-e) : e;
    }

    GrossNumber raise(const GrossNumber& base, const rational& e) {
        if (base.is_monomial()) {
            const auto& [be, bc] = *base.terms().begin();
            if (is_integral(e)) {
                integer n = boost::multiprecision::numerator(e);
                if (boost::multiprecision::abs(n) > 10'000) fail("exponent too large");
                auto m = static_cast<unsigned>(boost::multiprecision::abs(n));
                rational c = ipow(bc, m);
                return GrossNumber::monomial(n >= 0 ? c : rational(1 / c), be * e);
            }
            if (bc != 1) fail("rational powers apply only to powers of G with unit coefficient");
            return GrossNumber::monomial(1, be * e);
        }
        if (base.is_zero()) {
            if (e > 0) return {};
            fail("zero raised to a non-positive power");
        }
        if (!is_integral(e) || e < 0 || e > 64)
            fail("a sum of terms can only be raised to a small non-negative integer power");
        GrossNumber out = 1;
        for (int i = 0; i < static_cast<int>(e); ++i) out *= base;
        return out;
    }

    integer digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a number");
        return decimal_digits(text_.substr(start, pos_ - start));
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_literal(std::string_view lit) {
        if (text_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("gross-number '" + std::string(text_) + "' at offset " +
                         std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GrossNumber parse_gross(std::string_view text) { return detail::GrossParser(text).parse(); }

}  // namespace tessella
