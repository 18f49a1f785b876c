#include <gtest/gtest.h>

#include <tessella/census.hpp>

#include "generators.hpp"

using namespace tessella;

namespace {

// f_{-1} = 0, f_0 = f_1 = 1, indexed as fib[n + 1].
integer F(int n) {
    integer a = 0, b = 1;  // f_{-1}, f_0
    for (int i = -1; i < n; ++i) {
        integer c = a + b;
        a = b;
        b = c;
    }
    return a;
}

LinearForm W(rational c) { return LinearForm::term(Symbol::W, c); }
LinearForm one(rational c) { return LinearForm::constant(c); }

SplittingScheme scheme(SchemeFamily f, Splitting s, int p = 0, int q = 0, int r = 0) {
    return SplittingScheme::make(f, s, p, q, r);
}

// Observable height and sizes by walking the tree, independent of sequences.
struct TreeWalk {
    int eta;
    integer W, W1;
};

TreeWalk walk(int p, const integer& g) {
    integer total = 1, prev = 0;
    int height = 0;
    integer whites = 1, blacks = 0;  // colors on the last level
    for (;;) {
        integer next_whites = whites * (p - 3) + blacks * (p - 4);
        integer next_blacks = whites + blacks;
        integer size = next_whites + next_blacks;
        if (total + size > g) break;
        prev = total;
        total += size;
        whites = next_whites;
        blacks = next_blacks;
        ++height;
    }
    return {height, total, prev};
}

}  // namespace

TEST(PolygonArea, Examples) {
    EXPECT_EQ(polygon_area(5, 4), 1);
    EXPECT_EQ(polygon_area(7, 3), rational(2, 3));
    EXPECT_EQ(polygon_area(6, 4), 2);
    EXPECT_THROW(polygon_area(4, 4), NotHyperbolic);
    EXPECT_THROW(polygon_area(6, 3), NotHyperbolic);
    EXPECT_THROW(polygon_area(3, 5), NotHyperbolic);
}

TEST(PolygonArea, EqualsSOverQ) {
    for (int p = 3; p <= 20; ++p)
        for (int q = 3; q <= 20; ++q) {
            if (p * q - 2 * (p + q) <= 0) continue;
            EXPECT_EQ(polygon_area(p, q), rational(2 * (p * q - 2 * (p + q)), q));
        }
}

TEST(LinearForms, Arithmetic) {
    auto f = W(3) + one(2);
    EXPECT_EQ(to_string(f), "3*W + 2");
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(to_string(f * rational(2, 3)), "2*W + 4/3");
    EXPECT_EQ(to_string(LinearForm::term(Symbol::W1, -1) + one(-1)), "-W1 - 1");
    EXPECT_THROW(f + LinearForm::constant(1, Unit::area_d), Error);
    EXPECT_EQ(f.substitute({10, 0, 0, 0}), 32);
}

TEST(TileCount, SymbolicForms) {
    EXPECT_EQ(tile_count(scheme(SchemeFamily::penta, Splitting::odd)), W(5) + one(1));
    EXPECT_EQ(tile_count(scheme(SchemeFamily::penta, Splitting::even)), W(4));
    EXPECT_EQ(tile_count(scheme(SchemeFamily::hepta, Splitting::even)), W(7) + one(1));
    EXPECT_EQ(tile_count(scheme(SchemeFamily::hepta, Splitting::odd)), W(7) + one(1));
    EXPECT_EQ(tile_count(scheme(SchemeFamily::pq_odd_v1, Splitting::even, 6, 7)), W(7));
    EXPECT_EQ(tile_count(scheme(SchemeFamily::pq_odd_v1, Splitting::odd, 6, 7)), W(12) + one(1));
    EXPECT_EQ(to_string(tile_count(scheme(SchemeFamily::pq_odd_v2, Splitting::even, 5, 7))), "7*W + 7*W1");
    EXPECT_EQ(to_string(tile_count(scheme(SchemeFamily::pq_odd_v2, Splitting::odd, 5, 7))), "10*W + 10*W1 + 1");
}

TEST(TileCount, Concrete) {
    EXPECT_EQ(tile_count(scheme(SchemeFamily::penta, Splitting::odd), Budget(100)), 441);
    EXPECT_EQ(tile_count(scheme(SchemeFamily::hepta, Splitting::even), Budget(100)), 617);
}

TEST(AreaTotal, Table1) {
    EXPECT_EQ(to_string(area_total(scheme(SchemeFamily::hepta, Splitting::odd))), "14/3*W + 2/3");
    EXPECT_EQ(to_string(area_total(scheme(SchemeFamily::penta, Splitting::even))), "4*W");
    EXPECT_EQ(to_string(area_total(scheme(SchemeFamily::penta, Splitting::odd))), "5*W + 1");
    EXPECT_EQ(area_total(scheme(SchemeFamily::penta, Splitting::odd), Budget(100)), 441);
}

TEST(AreaTotal, Table2) {
    for (int p = 5; p <= 20; ++p) {
        rational k = p - 4;
        EXPECT_EQ(area_total(scheme(SchemeFamily::p4, Splitting::even, p)).terms(),
                  (LinearForm::Terms{{Symbol::W, 4 * k}}));
        EXPECT_EQ(area_total(scheme(SchemeFamily::p4, Splitting::odd, p)).terms(),
                  (LinearForm::Terms{{Symbol::W, p * k}, {Symbol::UNIT, k}}));
        EXPECT_EQ(area_total(scheme(SchemeFamily::p23, Splitting::odd, p)).terms(),
                  (LinearForm::Terms{{Symbol::W, rational(2, 3) * (p + 2) * k}, {Symbol::UNIT, rational(2, 3) * k}}));
    }
}

TEST(AreaTotal, PqEvenFiveSix) {
    // s = 2(30 - 22) = 16; 6 W tiles of area 8/3.
    auto s = scheme(SchemeFamily::pq_even, Splitting::even, 5, 6);
    EXPECT_EQ(to_string(tile_count(s)), "6*W");
    EXPECT_EQ(to_string(area_total(s)), "16*W");
    EXPECT_EQ(polygon_area(5, 6), rational(8, 3));
}

TEST(AreaTotal, PqOddForms) {
    for (int p = 5; p <= 11; ++p)
        for (int q = 5; q <= 13; q += 2) {
            rational s = 2 * (p * q - 2 * (p + q));
            int h = q / 2;
            EXPECT_EQ(area_total(scheme(SchemeFamily::pq_odd_v1, Splitting::even, p, q)).terms(),
                      (LinearForm::Terms{{Symbol::W, s}}));
            EXPECT_EQ(area_total(scheme(SchemeFamily::pq_odd_v1, Splitting::odd, p, q)).terms(),
                      (LinearForm::Terms{{Symbol::W, p * (h - 1) * s / q}, {Symbol::UNIT, s / q}}));
            EXPECT_EQ(area_total(scheme(SchemeFamily::pq_odd_v2, Splitting::even, p, q)).terms(),
                      (LinearForm::Terms{{Symbol::W, s}, {Symbol::W1, s}}));
        }
}

TEST(Relation, PentaHepta) {
    auto r = relation_residual(RelationPair::penta_hepta);
    EXPECT_TRUE(r.residual.is_zero());
    auto v = relation_residual(RelationPair::penta_hepta, 5, Budget(100));
    EXPECT_EQ(v.even_area, 352);
    EXPECT_EQ(v.odd_area, 441);
    EXPECT_EQ(v.paired_area, rational(1234, 3));
    EXPECT_EQ(v.h_minus_pe, rational(178, 3));
    EXPECT_EQ(v.po_minus_h, rational(89, 3));
    EXPECT_EQ(v.residual, 0);
}

TEST(Relation, P4P23) {
    for (int p = 5; p <= 50; ++p) {
        auto r = relation_residual(RelationPair::p4_p23, p);
        EXPECT_TRUE(r.residual.is_zero()) << p;
        rational k = p - 4;
        EXPECT_EQ(r.h_minus_pe.coefficient(Symbol::W), rational(2, 3) * k * k);
        EXPECT_EQ(r.h_minus_pe.coefficient(Symbol::UNIT), rational(2, 3) * k);
        EXPECT_EQ(r.po_minus_h.coefficient(Symbol::W), rational(1, 3) * k * k);
        EXPECT_EQ(r.po_minus_h.coefficient(Symbol::UNIT), rational(1, 3) * k);
    }
    EXPECT_EQ(to_string(relation_residual(RelationPair::p4_p23, 9).h_minus_pe), "50/3*W + 10/3");
}

TEST(Ball, Examples) {
    EXPECT_EQ(ball(SchemeFamily::penta, 0), 1);
    EXPECT_EQ(ball(SchemeFamily::penta, 1), 6);
    EXPECT_EQ(ball(SchemeFamily::hepta, 1), 8);
    EXPECT_EQ(ball(SchemeFamily::penta, 2), 21);
    EXPECT_EQ(ball(SchemeFamily::penta, 2, BallFormula::inline_text), 16);
    EXPECT_EQ(ball(SchemeFamily::penta, 1, BallFormula::inline_text), 6);
    EXPECT_THROW(ball(SchemeFamily::p4, 1), InvalidScheme);
}

TEST(RingAndBorder, Examples) {
    auto a = ring_and_border(SchemeFamily::penta, 1);
    EXPECT_EQ(a.ring, 5);
    EXPECT_EQ(a.border, 15);
    auto b = ring_and_border(SchemeFamily::hepta, 2);
    EXPECT_EQ(b.ring, 21);
    EXPECT_EQ(b.border, 56);
    EXPECT_EQ(ring_and_border(SchemeFamily::penta, 2).ring, 15);
}

TEST(RingAndBorder, BallConsistency) {
    for (auto f : {SchemeFamily::penta, SchemeFamily::hepta}) {
        integer n0 = f == SchemeFamily::penta ? 5 : 7;
        integer sum = 1;
        for (int r = 1; r <= 10; ++r) {
            auto rb = ring_and_border(f, r);
            sum += rb.ring;
            EXPECT_EQ(ball(f, r), sum);
            EXPECT_EQ(rb.ring + ball(f, r - 1), ball(f, r));
            EXPECT_EQ(rb.ring, n0 * F(2 * r - 1));
            // Border heads: n0 f_{2r-1} black plus n0 f_{2r} white.
            EXPECT_EQ(rb.border, n0 * F(2 * r - 1) + n0 * F(2 * r));
        }
    }
}

TEST(HeightReport, Examples) {
    auto a = height_report(scheme(SchemeFamily::penta, Splitting::odd), Budget(100));
    EXPECT_EQ(a.eta, 4);
    EXPECT_EQ(a.W, 88);
    auto v2 = height_report(scheme(SchemeFamily::pq_odd_v2, Splitting::even, 5, 5), Budget(1000));
    EXPECT_EQ(v2.eta, 4);  // U = 1, 6, 29, 134, 613, 2798
    EXPECT_EQ(v2.W, 613);
    EXPECT_EQ(v2.W1, 134);
    auto tiny = height_report(scheme(SchemeFamily::penta, Splitting::odd), Budget(1));
    EXPECT_EQ(tiny.eta, 0);
    EXPECT_EQ(tiny.W, 1);
    EXPECT_EQ(tiny.W1, 0);
    EXPECT_FALSE(tiny.w1_defined);
}

TEST(HeightReport, AgreesWithTreeWalk) {
    gen::Source src(41);
    for (int p = 5; p <= 9; ++p)
        for (int i = 0; i < 50; ++i) {
            integer g = src.big(src.between(1, 25));
            auto hr = height_report(scheme(SchemeFamily::p4, Splitting::odd, p), Budget(g));
            auto tw = walk(p, g);
            ASSERT_EQ(hr.eta, tw.eta);
            ASSERT_EQ(hr.W, tw.W);
            if (hr.w1_defined) { ASSERT_EQ(hr.W1, tw.W1); }
        }
}

TEST(RAugmented, Examples) {
    EXPECT_EQ(*r_augmented(SchemeFamily::penta, 0, Budget(100)).tiles_concrete, 441);
    EXPECT_EQ(*r_augmented(SchemeFamily::penta, 1, Budget(100)).tiles_concrete, 441);
    EXPECT_EQ(*r_augmented(SchemeFamily::hepta, 0, Budget(100)).tiles_concrete, 617);
    EXPECT_THROW(r_augmented(SchemeFamily::penta, 5, Budget(100)), RadiusExceedsHeight);
    EXPECT_THROW(scheme(SchemeFamily::p4, Splitting::odd_r, 5, 4, 1), InvalidScheme);
}

TEST(RAugmented, InlineIndexingBreaksInvariance) {
    auto alt = r_augmented(SchemeFamily::penta, 1, Budget(100), SectorIndexing::inline_fibonacci);
    EXPECT_EQ(*alt.tiles_concrete, 271);
}

TEST(RAugmented, SymbolicForm) {
    EXPECT_EQ(to_string(r_augmented_form(SchemeFamily::penta, 2)), "15*BR + 25*WR + 21");
    EXPECT_EQ(to_string(r_augmented_form(SchemeFamily::penta, 0)), "5*WR + 1");
}

TEST(RAugmented, AreaIsCountTimesTileArea) {
    auto rep = r_augmented(SchemeFamily::hepta, 2, Budget(5000));
    EXPECT_EQ(*rep.area_concrete, rational(*rep.tiles_concrete) * rational(2, 3));
}

TEST(Json, ConcreteReport) {
    auto j = to_json(census(scheme(SchemeFamily::penta, Splitting::odd), Budget(100)));
    EXPECT_EQ(j["tiles"]["concrete"], "441");
    EXPECT_EQ(j["tiles"]["symbolic"], "5*W + 1");
    EXPECT_EQ(j["area_d"]["concrete"], "441");
    EXPECT_EQ(j["W"], "88");
    EXPECT_EQ(j["eta"], "4");
    EXPECT_EQ(j["budget"], "100");
    EXPECT_EQ(j["mode"], "concrete");
    EXPECT_EQ(j["scheme"]["family"], "penta");
    EXPECT_FALSE(j["scheme"].contains("r"));
}

TEST(Json, SymbolicReportHasNoConcreteFields) {
    auto j = to_json(census(scheme(SchemeFamily::hepta, Splitting::odd)));
    EXPECT_EQ(j["area_d"]["symbolic"], "14/3*W + 2/3");
    EXPECT_FALSE(j.contains("budget"));
    EXPECT_FALSE(j["tiles"].contains("concrete"));
}

// --- properties ------------------------------------------------------------

TEST(Properties, RInvariance) {
    gen::Source src(51);
    for (auto f : {SchemeFamily::penta, SchemeFamily::hepta}) {
        int n0 = f == SchemeFamily::penta ? 5 : 7;
        for (int i = 0; i < 50; ++i) {
            Budget g(src.up_to(1'000'000'000));
            auto hr = height_report(scheme(f, Splitting::odd), g);
            for (int r = 0; r <= std::min(hr.eta, 6); ++r)
                ASSERT_EQ(*r_augmented(f, r, g).tiles_concrete, 1 + n0 * hr.W) << "r=" << r;
        }
    }
}

TEST(Properties, RInvarianceSymbolically) {
    // With W_r = f_{2(e-r)+2} - 1 and B_r = f_{2(e-r)+1}, the form collapses to
    // 1 + n0 (f_{2e+2} - 1) for every r <= e.
    for (auto f : {SchemeFamily::penta, SchemeFamily::hepta}) {
        int n0 = f == SchemeFamily::penta ? 5 : 7;
        for (int e = 0; e <= 30; ++e)
            for (int r = 0; r <= e; ++r) {
                SymbolValues v{0, 0, F(2 * (e - r) + 1), F(2 * (e - r) + 2) - 1};
                ASSERT_EQ(r_augmented_form(f, r).substitute(v), 1 + n0 * (F(2 * e + 2) - 1));
            }
    }
}

TEST(Properties, SymbolicConcreteCoherence) {
    gen::Source src(52);
    std::vector<SplittingScheme> schemes{
        scheme(SchemeFamily::penta, Splitting::even), scheme(SchemeFamily::penta, Splitting::odd),
        scheme(SchemeFamily::hepta, Splitting::odd),  scheme(SchemeFamily::p4, Splitting::odd, 8),
        scheme(SchemeFamily::p23, Splitting::even, 6), scheme(SchemeFamily::pq_even, Splitting::odd, 7, 8),
        scheme(SchemeFamily::pq_odd_v1, Splitting::odd, 5, 9), scheme(SchemeFamily::pq_odd_v2, Splitting::even, 6, 7),
        scheme(SchemeFamily::penta, Splitting::odd_r, 0, 0, 2)};
    for (const auto& s : schemes)
        for (int i = 0; i < 50; ++i) {
            Budget g(src.big(src.between(3, 30)));
            auto rep = census(s, g);
            SymbolValues v{rep.height->W, rep.height->W1, 0, 0};
            if (rep.sectors) {
                v.BR = rep.sectors->black;
                v.WR = rep.sectors->white;
            }
            ASSERT_EQ(rational(*rep.tiles_concrete), rep.tiles_symbolic.substitute(v));
            ASSERT_EQ(*rep.area_concrete, rep.area_symbolic.substitute(v));
            auto [tp, tq] = s.tiling();
            ASSERT_EQ(*rep.area_concrete, rational(*rep.tiles_concrete) * polygon_area(tp, tq));
        }
}

TEST(Properties, PqEvenAtQ4IsP4) {
    gen::Source src(53);
    for (int p = 5; p <= 12; ++p) {
        EXPECT_EQ(tile_count(scheme(SchemeFamily::pq_even, Splitting::even, p, 4)),
                  tile_count(scheme(SchemeFamily::p4, Splitting::even, p)));
        EXPECT_EQ(tile_count(scheme(SchemeFamily::pq_even, Splitting::odd, p, 4)),
                  tile_count(scheme(SchemeFamily::p4, Splitting::odd, p)));
        for (int i = 0; i < 20; ++i) {
            Budget g(src.big(12));
            EXPECT_EQ(tile_count(scheme(SchemeFamily::pq_even, Splitting::odd, p, 4), g),
                      tile_count(scheme(SchemeFamily::p4, Splitting::odd, p), g));
        }
    }
}

TEST(Properties, OddAreaExceedsEven) {
    gen::Source src(54);
    for (auto f : {SchemeFamily::pq_even, SchemeFamily::pq_odd_v1, SchemeFamily::pq_odd_v2})
        for (int p = 5; p <= 13; ++p)
            for (int q = 5; q <= 13; ++q) {
                if ((f == SchemeFamily::pq_even) != (q % 2 == 0)) continue;
                for (int i = 0; i < 10; ++i) {
                    Budget g(src.big(src.between(1, 20)));
                    auto even = area_total(scheme(f, Splitting::even, p, q), g);
                    auto odd = area_total(scheme(f, Splitting::odd, p, q), g);
                    ASSERT_GT(even, 0);
                    ASSERT_GT(odd, even) << to_string(f) << " p=" << p << " q=" << q;
                }
            }
}

TEST(Properties, HeptagridWEqualsBPlusW1) {
    gen::Source src(55);
    for (int i = 0; i < 100; ++i) {
        Budget g(src.big(src.between(1, 30)));
        auto hr = height_report(scheme(SchemeFamily::hepta, Splitting::odd), g);
        if (!hr.w1_defined) continue;
        integer B = cumulative(make_spec(Family::p4_smaller, 5), hr.eta);
        ASSERT_EQ(hr.W, B + hr.W1);
        // The same in Fibonacci terms: W = f_{2eta+2} - 1, W1 = f_{2eta} - 1, B = f_{2eta+1}.
        ASSERT_EQ(hr.W, F(2 * hr.eta + 2) - 1);
        ASSERT_EQ(B, F(2 * hr.eta + 1));
    }
}
