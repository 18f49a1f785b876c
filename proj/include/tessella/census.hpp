#pragma once

// Tile counts and observable areas of the even, odd and r-augmented odd
// splittings.  Results come in two modes:
//
//   symbolic   a LinearForm over {W, W1, BR, WR, 1}
//   concrete   the same form with W = U_eta, W1 = U_{eta-1} and the sector
//              sizes substituted, for a finite budget standing in for G
//
// Areas are exact rationals in units of d, the right angle.  The area of a
// regular p-gon with vertex angle 2pi/q is its angle defect 2(p-2) - 4p/q.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "grossone.hpp"
#include "numeric.hpp"
#include "sequences.hpp"

namespace tessella {

struct RadiusExceedsHeight : Error {
    using Error::Error;
};
struct InvalidScheme : Error {
    using Error::Error;
};

// --- LinearForm --------------------------------------------------------------

enum class Symbol { W, W1, BR, WR, UNIT };  // display order
enum class Unit { count, area_d };

inline std::string_view to_string(Symbol s) {
    switch (s) {
        case Symbol::W: return "W";
        case Symbol::W1: return "W1";
        case Symbol::BR: return "BR";
        case Symbol::WR: return "WR";
        case Symbol::UNIT: return "1";
    }
    return "?";
}

struct SymbolValues {
    integer W = 0;
    integer W1 = 0;
    integer BR = 0;
    integer WR = 0;

    const integer& operator[](Symbol s) const {
        static const integer one = 1;
        switch (s) {
            case Symbol::W: return W;
            case Symbol::W1: return W1;
            case Symbol::BR: return BR;
            case Symbol::WR: return WR;
            case Symbol::UNIT: return one;
        }
        return one;
    }
};

class LinearForm {
public:
    using Terms = std::map<Symbol, rational>;

    explicit LinearForm(Unit unit = Unit::count) : unit_(unit) {}

    static LinearForm term(Symbol s, rational coefficient, Unit unit = Unit::count) {
        LinearForm f(unit);
        f.accumulate(s, coefficient);
        return f;
    }
    static LinearForm constant(rational value, Unit unit = Unit::count) {
        return term(Symbol::UNIT, std::move(value), unit);
    }

    Unit unit() const noexcept { return unit_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    rational coefficient(Symbol s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? rational(0) : it->second;
    }

    LinearForm with_unit(Unit unit) const {
        LinearForm f = *this;
        f.unit_ = unit;
        return f;
    }

    LinearForm& operator+=(const LinearForm& other) {
        check_unit(other);
        for (const auto& [s, c] : other.terms_) accumulate(s, c);
        return *this;
    }
    LinearForm& operator-=(const LinearForm& other) {
        check_unit(other);
        for (const auto& [s, c] : other.terms_) accumulate(s, -c);
        return *this;
    }
    LinearForm& operator*=(const rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, c] : terms_) c *= k;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const rational& k) { return a *= k; }
    friend LinearForm operator*(const rational& k, LinearForm a) { return a *= k; }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    rational substitute(const SymbolValues& values) const {
        rational sum = 0;
        for (const auto& [s, c] : terms_) sum += c * rational(values[s]);
        return sum;
    }

private:
    void check_unit(const LinearForm& other) const {
        if (other.unit_ != unit_) throw Error("cannot combine a tile count with an area");
    }
    void accumulate(Symbol s, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    Terms terms_;
    Unit unit_;
};

// "14/3*W + 2/3", "5*W + 1", "0"
inline std::string to_string(const LinearForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : f.terms()) {
        bool negative = c < 0;
        rational magnitude = negative ? rational(-c) : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (s == Symbol::UNIT) {
            out += to_string(magnitude);
        } else {
            if (magnitude != 1) out += to_string(magnitude) + "*";
            out += to_string(s);
        }
    }
    return out;
}

// --- schemes -----------------------------------------------------------------

enum class SchemeFamily { penta, hepta, p4, p23, pq_even, pq_odd_v1, pq_odd_v2 };
enum class Splitting { even, odd, odd_r };

inline std::string_view to_string(SchemeFamily f) {
    switch (f) {
        case SchemeFamily::penta: return "penta";
        case SchemeFamily::hepta: return "hepta";
        case SchemeFamily::p4: return "p4";
        case SchemeFamily::p23: return "p23";
        case SchemeFamily::pq_even: return "pq_even";
        case SchemeFamily::pq_odd_v1: return "pq_odd_v1";
        case SchemeFamily::pq_odd_v2: return "pq_odd_v2";
    }
    return "?";
}

inline std::string_view to_string(Splitting s) {
    switch (s) {
        case Splitting::even: return "even";
        case Splitting::odd: return "odd";
        case Splitting::odd_r: return "odd_r";
    }
    return "?";
}

inline SchemeFamily parse_scheme_family(std::string_view name) {
    for (auto f : {SchemeFamily::penta, SchemeFamily::hepta, SchemeFamily::p4, SchemeFamily::p23,
                   SchemeFamily::pq_even, SchemeFamily::pq_odd_v1, SchemeFamily::pq_odd_v2})
        if (to_string(f) == name) return f;
    throw InvalidScheme("unknown scheme family '" + std::string(name) + "'");
}

inline Splitting parse_splitting(std::string_view name) {
    for (auto s : {Splitting::even, Splitting::odd, Splitting::odd_r})
        if (to_string(s) == name) return s;
    throw InvalidScheme("unknown splitting '" + std::string(name) + "'");
}

// penta and hepta carry their tiling's {p,q}; p23 carries the p of the paired
// {p,4} tiling, its own tiling being {p+2,3}.
struct SplittingScheme {
    SchemeFamily family = SchemeFamily::penta;
    int p = 5;
    int q = 4;
    Splitting splitting = Splitting::even;
    int r = 0;

    static SplittingScheme make(SchemeFamily family, Splitting splitting, int p = 0, int q = 0,
                                int r = 0) {
        SplittingScheme s{family, p, q, splitting, r};
        switch (family) {
            case SchemeFamily::penta: s.p = 5; s.q = 4; break;
            case SchemeFamily::hepta: s.p = 7; s.q = 3; break;
            case SchemeFamily::p4: s.q = 4; break;
            case SchemeFamily::p23: s.q = 3; break;
            default: break;
        }
        if (splitting == Splitting::odd_r) {
            if (family != SchemeFamily::penta && family != SchemeFamily::hepta)
                throw InvalidScheme("the r-augmented odd splitting is only defined for penta and hepta");
            if (r < 0) throw InvalidScheme("radius must be non-negative");
        } else {
            s.r = 0;
        }
        if ((family == SchemeFamily::p4 || family == SchemeFamily::p23) && s.p < 5)
            throw InvalidScheme("p4/p23 schemes require p >= 5");
        s.tree_spec();  // validates pq families
        return s;
    }

    std::pair<int, int> tiling() const {
        if (family == SchemeFamily::p23) return {p + 2, 3};
        return {p, q};
    }

    int h() const { return q / 2; }

    // Spec of the tree spanning the basic region.
    RecurrenceSpec tree_spec() const {
        switch (family) {
            case SchemeFamily::penta:
            case SchemeFamily::hepta: return make_spec(Family::p4_standard, 5);
            case SchemeFamily::p4:
            case SchemeFamily::p23: return make_spec(Family::p4_standard, p);
            case SchemeFamily::pq_even: return make_spec(Family::pq_even, p, q);
            case SchemeFamily::pq_odd_v1: return make_spec(Family::pq_odd_v1, p, q);
            case SchemeFamily::pq_odd_v2: return make_spec(Family::pq_odd_v2, p, q);
        }
        return make_spec(Family::p4_standard, 5);
    }

    // Tiles around the central tile: 5 for penta, 7 for hepta.
    int central_neighbours() const { return family == SchemeFamily::hepta ? 7 : 5; }
};

// --- elementary quantities ---------------------------------------------------

inline rational polygon_area(int p, int q) {
    if (p < 3 || q < 3 || p * q - 2 * (p + q) <= 0)
        throw NotHyperbolic("{" + std::to_string(p) + "," + std::to_string(q) +
                            "} is not a hyperbolic tiling");
    return rational(2 * (p - 2)) - rational(4 * p, q);
}

// f_n with f_{-1} = 0, f_0 = f_1 = 1.
inline integer fib(int n) { return term(make_spec(Family::fib), n); }

// Ball of radius r around a tile.  The default is n0 (f_{2r} - 1) + 1, which
// the reflection-built tilings reproduce; the inline variant n0 f_{2r-1} + 1
// is kept for comparison.
enum class BallFormula { adjacency, inline_text };

inline int central_neighbours(SchemeFamily family) {
    if (family == SchemeFamily::penta) return 5;
    if (family == SchemeFamily::hepta) return 7;
    throw InvalidScheme("balls are only defined for penta and hepta");
}

inline integer ball(SchemeFamily family, int r, BallFormula formula = BallFormula::adjacency) {
    const int n0 = central_neighbours(family);
    if (r < 0) throw InvalidScheme("radius must be non-negative");
    if (r == 0) return 1;
    if (formula == BallFormula::inline_text) return n0 * fib(2 * r - 1) + 1;
    return n0 * (fib(2 * r) - 1) + 1;
}

struct RingBorder {
    integer ring;    // tiles at distance exactly r
    integer border;  // tiles outside the ball sharing an edge with it
};

inline RingBorder ring_and_border(SchemeFamily family, int r) {
    const int n0 = central_neighbours(family);
    if (r < 1) throw InvalidScheme("ring radius must be >= 1");
    return {n0 * fib(2 * r - 1), n0 * fib(2 * r + 1)};
}

// --- heights and sector sizes -------------------------------------------------

struct HeightReport {
    int eta = 0;
    integer W = 0;
    integer W1 = 0;
    bool w1_defined = false;  // false when eta = 0
};

inline HeightReport height_report(const SplittingScheme& scheme, const Budget& g) {
    auto spec = scheme.tree_spec();
    HeightReport out;
    out.eta = eta(spec, g);
    auto table = CumulativeTable::build(spec, out.eta);
    out.W = table.U[out.eta];
    out.w1_defined = out.eta >= 1;
    out.W1 = out.w1_defined ? table.U[out.eta - 1] : integer(0);
    return out;
}

// Sizes of the white and black sectors rooted at distance r of the central
// tile.  `cumulative` sizes them as standard / smaller trees of height eta-r,
// which keeps the r-augmented count equal to 1 + n0 W for every r.  The
// `inline_fibonacci` reading, W_r = f_{2(eta-r)+1} - 1 and B_r = f_{2(eta-r)},
// sits one level lower and is kept for comparison.
enum class SectorIndexing { cumulative, inline_fibonacci };

struct SectorSizes {
    integer white;  // W_r
    integer black;  // B_r
};

inline SectorSizes sector_sizes(int eta_value, int r,
                                SectorIndexing indexing = SectorIndexing::cumulative) {
    const int height = eta_value - r;
    if (height < 0)
        throw RadiusExceedsHeight("radius " + std::to_string(r) + " exceeds the tree height " +
                                  std::to_string(eta_value));
    if (indexing == SectorIndexing::inline_fibonacci)
        return {fib(2 * height + 1) - 1, fib(2 * height)};
    return {cumulative(make_spec(Family::p4_standard, 5), height),
            cumulative(make_spec(Family::p4_smaller, 5), height)};
}

// --- counts and areas -----------------------------------------------------------

inline LinearForm r_augmented_form(SchemeFamily family, int r) {
    const int n0 = central_neighbours(family);
    if (r < 0) throw InvalidScheme("radius must be non-negative");
    LinearForm f = LinearForm::term(Symbol::BR, rational(n0 * fib(2 * r - 1)));
    f += LinearForm::term(Symbol::WR, rational(n0 * fib(2 * r)));
    f += LinearForm::constant(rational(n0 * (fib(2 * r) - 1) + 1));
    return f;
}

inline LinearForm tile_count(const SplittingScheme& s) {
    using LF = LinearForm;
    const bool even = s.splitting == Splitting::even;
    const rational fan = rational(s.p * (s.h() - 1));
    switch (s.family) {
        case SchemeFamily::penta:
            if (s.splitting == Splitting::odd_r) return r_augmented_form(s.family, s.r);
            return even ? LF::term(Symbol::W, 4) : LF::term(Symbol::W, 5) + LF::constant(1);
        case SchemeFamily::hepta:
            if (s.splitting == Splitting::odd_r) return r_augmented_form(s.family, s.r);
            return LF::term(Symbol::W, 7) + LF::constant(1);
        case SchemeFamily::p4:
            return even ? LF::term(Symbol::W, 4) : LF::term(Symbol::W, s.p) + LF::constant(1);
        case SchemeFamily::p23:
            return LF::term(Symbol::W, s.p + 2) + LF::constant(1);
        case SchemeFamily::pq_even:
        case SchemeFamily::pq_odd_v1:
            return even ? LF::term(Symbol::W, s.q) : LF::term(Symbol::W, fan) + LF::constant(1);
        case SchemeFamily::pq_odd_v2:
            if (even) return LF::term(Symbol::W, s.q) + LF::term(Symbol::W1, s.q);
            return LF::term(Symbol::W, fan) + LF::term(Symbol::W1, fan) + LF::constant(1);
    }
    return LF{};
}

inline LinearForm area_total(const SplittingScheme& s) {
    auto [tp, tq] = s.tiling();
    return (tile_count(s) * polygon_area(tp, tq)).with_unit(Unit::area_d);
}

inline SymbolValues symbol_values(const SplittingScheme& s, const Budget& g,
                                  SectorIndexing indexing = SectorIndexing::cumulative) {
    auto hr = height_report(s, g);
    SymbolValues v{hr.W, hr.W1, 0, 0};
    if (s.splitting == Splitting::odd_r) {
        auto sizes = sector_sizes(hr.eta, s.r, indexing);
        v.WR = sizes.white;
        v.BR = sizes.black;
    }
    return v;
}

inline integer tile_count(const SplittingScheme& s, const Budget& g) {
    rational v = tile_count(s).substitute(symbol_values(s, g));
    return boost::multiprecision::numerator(v);
}

inline rational area_total(const SplittingScheme& s, const Budget& g) {
    return area_total(s).substitute(symbol_values(s, g));
}

// --- reports ----------------------------------------------------------------------

enum class Mode { symbolic, concrete };

struct CensusReport {
    SplittingScheme scheme;
    Mode mode = Mode::symbolic;
    std::optional<Budget> budget;
    std::optional<HeightReport> height;
    std::optional<SectorSizes> sectors;  // odd_r, concrete
    LinearForm tiles_symbolic;
    LinearForm area_symbolic{Unit::area_d};
    std::optional<integer> tiles_concrete;
    std::optional<rational> area_concrete;

    bool tiles_exceed_budget() const {
        return tiles_concrete && budget && *tiles_concrete > budget->value();
    }
};

inline CensusReport census(const SplittingScheme& s) {
    CensusReport out;
    out.scheme = s;
    out.tiles_symbolic = tile_count(s);
    out.area_symbolic = area_total(s);
    return out;
}

inline CensusReport census(const SplittingScheme& s, const Budget& g,
                           SectorIndexing indexing = SectorIndexing::cumulative) {
    CensusReport out = census(s);
    out.mode = Mode::concrete;
    out.budget = g;
    out.height = height_report(s, g);
    SymbolValues v{out.height->W, out.height->W1, 0, 0};
    if (s.splitting == Splitting::odd_r) {
        out.sectors = sector_sizes(out.height->eta, s.r, indexing);
        v.WR = out.sectors->white;
        v.BR = out.sectors->black;
    }
    out.tiles_concrete = boost::multiprecision::numerator(out.tiles_symbolic.substitute(v));
    out.area_concrete = out.area_symbolic.substitute(v);
    return out;
}

inline CensusReport r_augmented(SchemeFamily family, int r) {
    return census(SplittingScheme::make(family, Splitting::odd_r, 0, 0, r));
}

inline CensusReport r_augmented(SchemeFamily family, int r, const Budget& g,
                                SectorIndexing indexing = SectorIndexing::cumulative) {
    return census(SplittingScheme::make(family, Splitting::odd_r, 0, 0, r), g, indexing);
}

inline nlohmann::json to_json(const CensusReport& report) {
    nlohmann::json scheme = {
        {"family", std::string(to_string(report.scheme.family))},
        {"p", report.scheme.p},
        {"q", report.scheme.q},
        {"splitting", std::string(to_string(report.scheme.splitting))},
    };
    if (report.scheme.splitting == Splitting::odd_r) scheme["r"] = report.scheme.r;

    nlohmann::json j = {
        {"scheme", scheme},
        {"mode", report.mode == Mode::symbolic ? "symbolic" : "concrete"},
        {"tiles", {{"symbolic", to_string(report.tiles_symbolic)}}},
        {"area_d", {{"symbolic", to_string(report.area_symbolic)}}},
    };
    if (report.mode == Mode::concrete) {
        j["budget"] = report.budget->value().str();
        j["eta"] = std::to_string(report.height->eta);
        j["W"] = report.height->W.str();
        if (report.height->w1_defined) j["W1"] = report.height->W1.str();
        if (report.sectors) {
            j["BR"] = report.sectors->black.str();
            j["WR"] = report.sectors->white.str();
        }
        j["tiles"]["concrete"] = report.tiles_concrete->str();
        j["area_d"]["concrete"] = to_string(*report.area_concrete);
        j["tiles_exceed_budget"] = report.tiles_exceed_budget();
    }
    return j;
}

// --- the H - P_e = 2 (P_o - H) relation ----------------------------------------

enum class RelationPair { penta_hepta, p4_p23 };

struct RelationForms {
    LinearForm even_area;   // P_e
    LinearForm odd_area;    // P_o
    LinearForm paired_area; // H
    LinearForm h_minus_pe;
    LinearForm po_minus_h;
    LinearForm residual;    // (H - P_e) - 2 (P_o - H)
};

inline RelationForms relation_residual(RelationPair pair, int p = 5) {
    const bool ph = pair == RelationPair::penta_hepta;
    auto even = ph ? SplittingScheme::make(SchemeFamily::penta, Splitting::even)
                   : SplittingScheme::make(SchemeFamily::p4, Splitting::even, p);
    auto odd = ph ? SplittingScheme::make(SchemeFamily::penta, Splitting::odd)
                  : SplittingScheme::make(SchemeFamily::p4, Splitting::odd, p);
    auto paired = ph ? SplittingScheme::make(SchemeFamily::hepta, Splitting::odd)
                     : SplittingScheme::make(SchemeFamily::p23, Splitting::odd, p);
    RelationForms out{area_total(even), area_total(odd), area_total(paired),
                      LinearForm(Unit::area_d), LinearForm(Unit::area_d), LinearForm(Unit::area_d)};
    out.h_minus_pe = out.paired_area - out.even_area;
    out.po_minus_h = out.odd_area - out.paired_area;
    out.residual = out.h_minus_pe - out.po_minus_h * rational(2);
    return out;
}

struct RelationValues {
    rational even_area, odd_area, paired_area, h_minus_pe, po_minus_h, residual;
};

inline RelationValues relation_residual(RelationPair pair, int p, const Budget& g) {
    auto forms = relation_residual(pair, p);
    // All three schemes share the same tree, so one substitution serves all.
    auto scheme = pair == RelationPair::penta_hepta
                      ? SplittingScheme::make(SchemeFamily::penta, Splitting::odd)
                      : SplittingScheme::make(SchemeFamily::p4, Splitting::odd, p);
    auto v = symbol_values(scheme, g);
    return {forms.even_area.substitute(v), forms.odd_area.substitute(v),
            forms.paired_area.substitute(v), forms.h_minus_pe.substitute(v),
            forms.po_minus_h.substitute(v), forms.residual.substitute(v)};
}

}  // namespace tessella
