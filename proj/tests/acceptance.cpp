// Acceptance gate: one PASS/FAIL line per criterion, with wall time.  A
// criterion also fails if it runs past its time limit.  Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <tessella/tessella.hpp>

using namespace tessella;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

// f_0 = f_1 = 1, by plain addition.
std::vector<integer> fibonacci(int last) {
    std::vector<integer> f{1, 1};
    while (static_cast<int>(f.size()) <= last) f.push_back(f.end()[-1] + f.end()[-2]);
    return f;
}

std::string q(const rational& v) { return to_string(v); }

Outcome theorem1() {
    Outcome o;
    auto forms = relation_residual(RelationPair::penta_hepta);
    o.pass = forms.residual.is_zero();
    for (const char* g : {"10", "1000", "1000000", "1000000000000"})
        o.pass = o.pass && relation_residual(RelationPair::penta_hepta, 5, Budget::parse(g)).residual == 0;
    auto v = relation_residual(RelationPair::penta_hepta, 5, Budget(100));
    o.pass = o.pass && v.even_area == 352 && v.odd_area == 441 && v.paired_area == rational(1234, 3) &&
             v.h_minus_pe == rational(178, 3) && v.po_minus_h == rational(89, 3) &&
             v.h_minus_pe == 2 * v.po_minus_h;
    o.pass = o.pass && verify_thm1().ok();
    o.detail = "residual = " + to_string(forms.residual) + " symbolically and at g = 10, 10^3, 10^6, 10^12; g = 100: P_e = " +
               q(v.even_area) + "d, P_o = " + q(v.odd_area) + "d, H = " + q(v.paired_area) + "d, H - P_e = " +
               q(v.h_minus_pe) + "d = 2 * " + q(v.po_minus_h) + "d";
    return o;
}

Outcome theorem3() {
    Outcome o;
    int good = 0;
    for (int p = 5; p <= 50; ++p) {
        auto f = relation_residual(RelationPair::p4_p23, p);
        rational k = p - 4;
        bool ok = f.residual.is_zero() &&
                  f.h_minus_pe.terms() == LinearForm::Terms{{Symbol::W, rational(2, 3) * k * k}, {Symbol::UNIT, rational(2, 3) * k}} &&
                  f.po_minus_h.terms() == LinearForm::Terms{{Symbol::W, rational(1, 3) * k * k}, {Symbol::UNIT, rational(1, 3) * k}};
        good += ok;
    }
    o.pass = good == 46;
    o.detail = std::to_string(good) + "/46 values of p with zero residual and differences (2/3)(p-4)^2 W + (2/3)(p-4), (1/3)(p-4)^2 W + (1/3)(p-4)";
    return o;
}

Outcome trees() {
    Outcome o;
    auto f = fibonacci(30);
    std::ostringstream heights;
    for (int p = 5; p <= 9; ++p)
        for (auto kind : {TreeKind::standard, TreeKind::smaller}) {
            auto spec = make_spec(kind == TreeKind::standard ? Family::p4_standard : Family::p4_smaller, p);
            int h = 0;
            while (h < 12 && cumulative(spec, h + 1) <= default_node_cap) ++h;
            auto counts = level_counts(build_tree(p, kind, h));
            auto want = terms(spec, h);
            for (int n = 0; n <= h; ++n) {
                o.pass = o.pass && integer(counts[n]) == want[n];
                if (p == 5) o.pass = o.pass && integer(counts[n]) == f[kind == TreeKind::standard ? 2 * n + 1 : 2 * n];
            }
            heights << ' ' << p << (kind == TreeKind::standard ? "W" : "B") << '=' << h;
            if (h < 12) {
                bool refused = false;
                try {
                    build_tree(p, kind, 12);
                } catch (const TreeTooLarge&) {
                    refused = true;
                }
                o.pass = o.pass && refused;
            }
        }
    o.detail = "levels equal recurrence terms; pentagrid f_{2n+1} / f_{2n}; heights within the 10^7 node cap:" + heights.str();
    return o;
}

Outcome numbering() {
    Outcome o;
    auto f = fibonacci(30);
    for (int n = 0; n <= 12; ++n) {
        auto [lo, hi] = numbering_range(5, n);
        o.pass = o.pass && lo == f[2 * n] && hi == f[2 * n + 2] - 1;
    }
    auto [lo1, hi1] = numbering_range(5, 1);
    o.pass = o.pass && lo1 == 2 && hi1 == 4;
    o.detail = "level n spans f_{2n} .. f_{2n+2} - 1 for n <= 12; level 1 spans " + lo1.str() + " to " + hi1.str();
    return o;
}

Outcome geometry() {
    Outcome o;
    std::ostringstream d;
    for (auto family : {SchemeFamily::penta, SchemeFamily::hepta}) {
        const bool penta = family == SchemeFamily::penta;
        for (int depth = 1; depth <= 3; ++depth) {
            auto census = distance_census(expand(penta ? 5 : 7, penta ? 4 : 3, depth));
            integer running = 0;
            for (std::size_t r = 0; r < census.size(); ++r) {
                running += census[r];
                if (r >= 1) o.pass = o.pass && integer(census[r]) == ring_and_border(family, static_cast<int>(r)).ring;
                o.pass = o.pass && running == ball(family, static_cast<int>(r));
            }
            if (depth == 3) {
                d << (penta ? "{5,4}: " : "; {7,3}: ");
                for (std::size_t r = 0; r < census.size(); ++r) d << (r ? "," : "") << census[r];
                std::vector<std::size_t> want = penta ? std::vector<std::size_t>{1, 5, 15} : std::vector<std::size_t>{1, 7, 21};
                o.pass = o.pass && census == want;
            }
        }
        d << " (inline ball at r=2: " << ball(family, 2, BallFormula::inline_text) << ", built: " << ball(family, 2) << ")";
    }
    o.pass = o.pass && verify_geometry().ok();
    o.detail = d.str();
    return o;
}

Outcome theorem2() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::int64_t> budget(1, 1'000'000'000);
    int pairs = 0;
    for (auto family : {SchemeFamily::penta, SchemeFamily::hepta}) {
        const int n0 = family == SchemeFamily::penta ? 5 : 7;
        for (int i = 0; i < 50; ++i) {
            Budget g(budget(rng));
            auto hr = height_report(SplittingScheme::make(family, Splitting::odd), g);
            for (int r = 0; r <= std::min(hr.eta, 6); ++r) {
                ++pairs;
                o.pass = o.pass && *r_augmented(family, r, g).tiles_concrete == 1 + n0 * hr.W;
            }
        }
        o.pass = o.pass && *r_augmented(family, 0, Budget(100)).tiles_concrete ==
                               tile_count(SplittingScheme::make(family, Splitting::odd), Budget(100));
    }
    o.pass = o.pass && fib(-1) == 0;
    o.detail = std::to_string(pairs) + " (budget, r) pairs equal 1 + n0 W; r = 0 reduces to the odd splitting with f_{-1} = 0";
    return o;
}

Outcome theorems34() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> budget(1, 1'000'000'000);
    for (int p = 5; p <= 12; ++p)
        for (auto sp : {Splitting::even, Splitting::odd}) {
            auto a = SplittingScheme::make(SchemeFamily::pq_even, sp, p, 4);
            auto b = SplittingScheme::make(SchemeFamily::p4, sp, p);
            o.pass = o.pass && tile_count(a) == tile_count(b);
            for (int i = 0; i < 10; ++i) {
                Budget g(budget(rng));
                o.pass = o.pass && tile_count(a, g) == tile_count(b, g);
            }
        }
    int v2 = 0, areas = 0;
    for (int p = 5; p <= 13; ++p)
        for (int qq = 5; qq <= 13; ++qq) {
            for (int i = 0; i < 5; ++i) {
                Budget g(budget(rng));
                if (qq % 2 == 1) {
                    auto spec = make_spec(Family::pq_odd_v2, p, qq);
                    int e = eta(spec, g);
                    auto table = CumulativeTable::build(spec, e);
                    integer W = table.U[e], W1 = e ? table.U[e - 1] : integer(0);
                    const int h = qq / 2;
                    o.pass = o.pass &&
                             tile_count(SplittingScheme::make(SchemeFamily::pq_odd_v2, Splitting::even, p, qq), g) == qq * (W + W1) &&
                             tile_count(SplittingScheme::make(SchemeFamily::pq_odd_v2, Splitting::odd, p, qq), g) ==
                                 p * (h - 1) * (W + W1) + 1;
                    ++v2;
                }
                for (auto family : {SchemeFamily::pq_even, SchemeFamily::pq_odd_v1, SchemeFamily::pq_odd_v2}) {
                    if ((family == SchemeFamily::pq_even) != (qq % 2 == 0)) continue;
                    auto even = area_total(SplittingScheme::make(family, Splitting::even, p, qq), g);
                    auto odd = area_total(SplittingScheme::make(family, Splitting::odd, p, qq), g);
                    o.pass = o.pass && odd > even;
                    ++areas;
                }
            }
        }
    o.detail = "pq_even(q=4) = {p,4} for p = 5..12; " + std::to_string(v2) + " V2 count checks; odd > even area in " +
               std::to_string(areas) + " (family, p, q, budget) cases";
    return o;
}

Outcome grossone() {
    Outcome o;
    auto axioms = verify_axioms();
    o.pass = axioms.ok();
    std::mt19937_64 rng(99);
    int kappa_ok = 0;
    for (int i = 0; i < 1000; ++i) {
        integer g = 0;
        int words = 1 + static_cast<int>(rng() % 4);
        for (int w = 0; w < words; ++w) g = (g << 32) + integer(rng() & 0xFFFFFFFFu);
        g += 1;
        integer k = kappa(Budget(g));
        kappa_ok += k * k <= g && g < (k + 1) * (k + 1);
    }
    o.pass = o.pass && kappa_ok == 1000;
    o.detail = std::to_string(axioms.checks().size()) + " axiom and law checks; kappa contract " + std::to_string(kappa_ok) + "/1000";
    return o;
}

Outcome closed_forms() {
    Outcome o;
    double worst = 0;
    auto f = fibonacci(60);
    auto fs = make_spec(Family::fib);
    for (int n = 0; n <= 60; ++n) {
        double exact = static_cast<double>(f[n]);
        worst = std::max(worst, std::abs(closed_form(fs, n) - exact) / exact);
    }
    for (int p = 5; p <= 9; ++p) {
        auto spec = make_spec(Family::p4_standard, p);
        auto t = terms(spec, 60);
        for (int n = 0; n <= 60; ++n) {
            double exact = static_cast<double>(t[n]);
            worst = std::max(worst, std::abs(closed_form(spec, n) - exact) / exact);
        }
    }
    o.pass = worst < 1e-9;
    std::ostringstream d;
    d << "max relative error " << worst << " (tolerance 1e-9), n <= 60, fib and p4 p = 5..9";
    o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "theorem-1-relation", 1.0, theorem1},
        {2, "theorem-p4-p23-relation", 1.0, theorem3},
        {3, "recurrence-vs-tree", 30.0, trees},
        {4, "tile-numbering", 1.0, numbering},
        {5, "geometric-oracle", 10.0, geometry},
        {6, "theorem-2-r-invariance", 10.0, theorem2},
        {7, "theorems-3-4-consistency", 10.0, theorems34},
        {8, "grossone-axioms", 10.0, grossone},
        {9, "closed-forms", 1.0, closed_forms},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass && secs < c.limit_seconds;
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed
                  << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
                  << " s): " << o.detail << '\n';
        std::cout.unsetf(std::ios::fixed);
        std::cout << std::setprecision(6);
    }
    std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failed << "/" << criteria.size()
              << " criteria\n";
    return failed;
}
