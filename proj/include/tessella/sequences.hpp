#pragma once

// Linear recurrences for the level populations u_n of the spanning trees, their
// cumulative sums U_n, and the observable height eta under a budget.
//
// Every family is defined by a monic characteristic polynomial
//     X^k - a_1 X^(k-1) - ... - a_k
// and the recurrence u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n is read off it.
// Initial values are anchored at indices -(k-1) .. 0.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "grossone.hpp"
#include "numeric.hpp"

namespace tessella {

struct InvalidFamilyParams : Error {
    using Error::Error;
};
struct BudgetTooSmall : Error {
    using Error::Error;
};
struct ClosedFormUnavailable : Error {
    using Error::Error;
};

enum class Family { fib, p4_standard, p4_smaller, p4_sibling_v, pq_even, pq_odd_v1, pq_odd_v2 };

// Where the recurrence coefficients come from.  The inline recurrences printed
// next to the {p,q} polynomials disagree with them for pq_even and pq_odd_v1;
// they are kept only for comparison runs.
enum class CoefficientReading { characteristic_polynomial, inline_recurrence };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::fib: return "fib";
        case Family::p4_standard: return "p4_standard";
        case Family::p4_smaller: return "p4_smaller";
        case Family::p4_sibling_v: return "p4_sibling_v";
        case Family::pq_even: return "pq_even";
        case Family::pq_odd_v1: return "pq_odd_v1";
        case Family::pq_odd_v2: return "pq_odd_v2";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::fib, Family::p4_standard, Family::p4_smaller, Family::p4_sibling_v,
                     Family::pq_even, Family::pq_odd_v1, Family::pq_odd_v2})
        if (to_string(f) == name) return f;
    throw InvalidFamilyParams("unknown sequence family '" + std::string(name) + "'");
}

struct RecurrenceSpec {
    Family family = Family::fib;
    int p = 0;
    int q = 0;
    std::vector<std::int64_t> polynomial;    // monic, highest degree first
    std::vector<std::int64_t> coefficients;  // a_1 .. a_k
    std::vector<integer> initials;           // u_{-(k-1)} .. u_0

    int order() const { return static_cast<int>(coefficients.size()); }
    int h() const { return q / 2; }
};

inline std::vector<std::int64_t> characteristic_polynomial(Family family, int p, int q) {
    const std::int64_t h = q / 2;
    switch (family) {
        case Family::fib:
            return {1, -1, -1};
        case Family::p4_standard:
        case Family::p4_smaller:
        case Family::p4_sibling_v:
            return {1, -(p - 2), 1};
        case Family::pq_even:
            return {1, -((p - 3) * (h - 1) + 1), 3 - h};
        case Family::pq_odd_v1:
            return {1, -((p - 3) * (h - 1) + 1), -((p - 2) * (h - 1) - 2), 3 - h};
        case Family::pq_odd_v2:
            return {1, -((p - 3) * (q - 3) + 1), 7 - q};
    }
    return {};
}

namespace detail {

inline std::vector<std::int64_t> inline_recurrence(Family family, int p, int q) {
    const std::int64_t h = q / 2;
    switch (family) {
        case Family::pq_even:
            return {(p - 3) * (h - 1) + 1, -(h + 3)};
        case Family::pq_odd_v1:
            return {(p - 3) * (h - 1) + 1, (p - 2) * (h - 1) - 2, -(h - 3)};
        default: {
            auto poly = characteristic_polynomial(family, p, q);
            std::vector<std::int64_t> out;
            for (std::size_t i = 1; i < poly.size(); ++i) out.push_back(-poly[i]);
            return out;
        }
    }
}

inline void check_family_params(Family family, int p, int q) {
    auto bad = [&](const std::string& why) {
        throw InvalidFamilyParams(std::string(to_string(family)) + " with p=" + std::to_string(p) +
                                  ", q=" + std::to_string(q) + ": " + why);
    };
    switch (family) {
        case Family::fib:
            return;
        case Family::p4_standard:
        case Family::p4_smaller:
        case Family::p4_sibling_v:
            if (p < 5) bad("requires p >= 5");
            return;
        case Family::pq_even:
            if (q < 4 || q % 2 != 0) bad("requires even q >= 4");
            if (p < 5) bad("requires p >= 5");
            return;
        case Family::pq_odd_v1:
        case Family::pq_odd_v2:
            if (q < 5 || q % 2 == 0) bad("requires odd q >= 5");
            if (p < 5) bad("requires p >= 5");
            return;
    }
}

}  // namespace detail

inline RecurrenceSpec make_spec(
    Family family, int p = 5, int q = 4,
    CoefficientReading reading = CoefficientReading::characteristic_polynomial) {
    detail::check_family_params(family, p, q);
    RecurrenceSpec spec;
    spec.family = family;
    spec.p = family == Family::fib ? 0 : p;
    switch (family) {
        case Family::fib: spec.q = 0; break;
        case Family::p4_standard:
        case Family::p4_smaller:
        case Family::p4_sibling_v: spec.q = 4; break;
        default: spec.q = q;
    }
    spec.polynomial = characteristic_polynomial(family, spec.p, spec.q);
    if (reading == CoefficientReading::characteristic_polynomial) {
        for (std::size_t i = 1; i < spec.polynomial.size(); ++i)
            spec.coefficients.push_back(-spec.polynomial[i]);
    } else {
        spec.coefficients = detail::inline_recurrence(family, spec.p, spec.q);
    }

    switch (family) {
        case Family::fib:  // f_{-1} = 0, f_0 = f_1 = 1
        case Family::p4_standard:
        case Family::pq_even:
        case Family::pq_odd_v2:
            spec.initials = {0, 1};
            break;
        case Family::p4_smaller:
            spec.initials = {1, 1};
            break;
        case Family::p4_sibling_v: {
            // v_0 = 1, v_1 = u_1 - 1; v_{-1} follows from running the
            // recurrence backwards (a_2 = -1 for this family).
            integer u1 = spec.coefficients[0];
            integer v0 = 1, v1 = u1 - 1;
            integer v_minus1 = (spec.coefficients[0] * v0 - v1) / -spec.coefficients[1];
            spec.initials = {v_minus1, v0};
            break;
        }
        case Family::pq_odd_v1:
            spec.initials = {0, 0, 1};
            break;
    }
    return spec;
}

// u_0 .. u_last
inline std::vector<integer> terms(const RecurrenceSpec& spec, int last) {
    const int k = spec.order();
    std::vector<integer> window(spec.initials.begin(), spec.initials.end());
    std::vector<integer> out;
    if (last < 0) return out;
    out.reserve(static_cast<std::size_t>(last) + 1);
    out.push_back(window.back());
    for (int n = 1; n <= last; ++n) {
        integer next = 0;
        for (int i = 0; i < k; ++i) next += spec.coefficients[i] * window[k - 1 - i];
        window.erase(window.begin());
        window.push_back(next);
        out.push_back(std::move(next));
    }
    return out;
}

inline integer term(const RecurrenceSpec& spec, int n) {
    const int k = spec.order();
    if (n < -(k - 1))
        throw InvalidFamilyParams("term index " + std::to_string(n) + " precedes the initial values");
    if (n <= 0) return spec.initials[static_cast<std::size_t>(n + k - 1)];
    return terms(spec, n).back();
}

inline integer cumulative(const RecurrenceSpec& spec, int n) {
    integer sum = 0;
    for (const auto& u : terms(spec, n)) sum += u;
    return sum;
}

struct CumulativeTable {
    RecurrenceSpec spec;
    std::vector<integer> u;  // u_0 .. u_N
    std::vector<integer> U;  // U_0 .. U_N

    static CumulativeTable build(const RecurrenceSpec& spec, int last) {
        CumulativeTable t{spec, terms(spec, last), {}};
        integer running = 0;
        for (const auto& v : t.u) t.U.push_back(running += v);
        return t;
    }
    int size() const { return static_cast<int>(u.size()); }
};

// Largest n >= 0 with U_n <= g.
inline int eta(const RecurrenceSpec& spec, const Budget& g) {
    const int k = spec.order();
    std::vector<integer> window(spec.initials.begin(), spec.initials.end());
    integer total = window.back();
    if (g.value() < total)
        throw BudgetTooSmall("budget " + g.value().str() + " is below U_0 = " + total.str());
    for (int n = 0;; ++n) {
        integer next = 0;
        for (int i = 0; i < k; ++i) next += spec.coefficients[i] * window[k - 1 - i];
        if (next <= 0)
            throw InvalidFamilyParams("sequence stops growing at n=" + std::to_string(n + 1));
        window.erase(window.begin());
        window.push_back(next);
        total += next;
        if (total > g.value()) return n;
    }
}

inline integer observable_W(const RecurrenceSpec& spec, const Budget& g) {
    return cumulative(spec, eta(spec, g));
}

namespace detail {

inline double poly_value(const std::vector<std::int64_t>& poly, double x) {
    double v = 0;
    for (auto c : poly) v = v * x + static_cast<double>(c);
    return v;
}

// Root of a polynomial known to change sign on [lo, hi] and be monotone there.
inline double bisect(const std::vector<std::int64_t>& poly, double lo, double hi) {
    double flo = poly_value(poly, lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = poly_value(poly, mid);
        if ((fm <= 0) == (flo <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Largest real root of the characteristic polynomial (the growth rate beta).
inline double growth_root(const RecurrenceSpec& spec) {
    const auto& poly = spec.polynomial;
    if (poly.size() == 3) {
        double b = static_cast<double>(-poly[1]);
        double c = static_cast<double>(poly[2]);
        return (b + std::sqrt(b * b - 4 * c)) / 2;
    }
    // Monic cubic X^3 + a X^2 + b X + c.
    double a = static_cast<double>(poly[1]);
    double b = static_cast<double>(poly[2]);
    double bound = 1;
    for (std::size_t i = 1; i < poly.size(); ++i)
        bound = std::max(bound, 1 + std::abs(static_cast<double>(poly[i])));
    // Critical points of the cubic: 3X^2 + 2aX + b = 0.
    double disc = 4 * a * a - 12 * b;
    if (disc < 0) return detail::bisect(poly, -bound, bound);
    double hi_crit = (-2 * a + std::sqrt(disc)) / 6;
    double lo_crit = (-2 * a - std::sqrt(disc)) / 6;
    if (detail::poly_value(poly, hi_crit) <= 0) return detail::bisect(poly, hi_crit, bound);
    return detail::bisect(poly, -bound, lo_crit);
}

// Float closed forms.  For fib, f_n = Binet(n + 1) because f_0 = f_1 = 1.
inline double closed_form(const RecurrenceSpec& spec, int n) {
    switch (spec.family) {
        case Family::fib: {
            const double s5 = std::sqrt(5.0);
            const double x = n + 1;
            return (std::pow((1 + s5) / 2, x) - std::pow((1 - s5) / 2, x)) / s5;
        }
        case Family::p4_standard: {
            const double beta = growth_root(spec);
            return beta / (beta * beta - 1) * (std::pow(beta, n + 1) - std::pow(beta, -(n + 1)));
        }
        default:
            throw ClosedFormUnavailable("no closed form for family " +
                                        std::string(to_string(spec.family)));
    }
}

// n,u_n,U_n with CRLF line endings.
inline void write_csv(std::ostream& out, const CumulativeTable& table) {
    out << "n,u_n,U_n\r\n";
    for (int n = 0; n < table.size(); ++n)
        out << n << ',' << table.u[n].str() << ',' << table.U[n].str() << "\r\n";
}

}  // namespace tessella
