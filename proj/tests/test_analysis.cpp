#include <catch2/catch_amalgamated.hpp>

#include "sumreg/analysis.hpp"
#include "sumreg/verifier.hpp"

using namespace sumreg;

TEST_CASE("analysis rejects n < 4") {
    CHECK_THROWS_AS(SetAnalysis(NormalFormSet({0, 1, 2})), input_error);
    CHECK_THROWS_AS(sigma(NormalFormSet({0, 1})), input_error);
}

TEST_CASE("hilbert polynomial") {
    const auto h1 = hilbert_polynomial(NormalFormSet({0, 1, 2, 3, 8}));
    CHECK(h1.slope == 8);
    CHECK(h1.intercept == -4);
    const auto h2 = hilbert_polynomial(NormalFormSet({0, 1, 2, 3, 4}));
    CHECK(h2.slope == 4);
    CHECK(h2.intercept == 1);
    const auto h3 = hilbert_polynomial(NormalFormSet({0, 2, 5, 6, 9}));
    CHECK(h3.slope == 9);
    CHECK(h3.intercept == -4);
}

TEST_CASE("rhp on Table 1 and the rational normal curve") {
    CHECK(rhp(NormalFormSet({0, 1, 3, 11, 13})) == 5);
    CHECK(rhp(NormalFormSet({0, 5, 9, 11, 20})) == 3);
    CHECK(rhp(NormalFormSet({0, 1, 2, 3, 4})) == 0);
    CHECK(rhp(NormalFormSet({0, 1, 2, 3, 4, 5})) == 0);
}

TEST_CASE("sigma via the max formula") {
    CHECK(sigma(NormalFormSet({0, 4, 5, 9, 16})) == 3);
    CHECK(sigma(NormalFormSet({0, 1, 3, 5, 6, 12})) == 1);
    CHECK(sigma(NormalFormSet({0, 2, 5, 6, 9})) == 2);
}

TEST_CASE("structure decomposition at single levels") {
    CHECK(structure_decomposition(NormalFormSet({0, 4, 5, 9, 16}), 3).holds);
    CHECK_FALSE(structure_decomposition(NormalFormSet({0, 1, 3, 11, 13}), 4).holds);
    const auto dec = structure_decomposition(NormalFormSet({0, 1, 2, 3}), 1);
    CHECK(dec.holds);
    CHECK(dec.head.empty());
    CHECK(dec.tail.empty());
    CHECK(dec.central_lo == 0);
    CHECK(dec.central_hi == 3);
}

TEST_CASE("sigma_direct can undercut sigma on degenerate levels") {
    CHECK(sigma_direct(NormalFormSet({0, 5, 9, 11, 20})) == 4);
    CHECK(sigma_direct(NormalFormSet({0, 1, 2, 3})) == 0);
    CHECK(sigma_direct(NormalFormSet({0, 4, 5, 9, 16})) == 2); // sigma is 3
    CHECK(sigma_direct(NormalFormSet({0, 1, 2, 3, 8})) == 1);
    CHECK(sigma(NormalFormSet({0, 1, 2, 3, 8})) == 2);
    // at s = 1 the central interval is empty and 8 - C2 = A
    const auto dec = structure_decomposition(NormalFormSet({0, 1, 2, 3, 8}), 1);
    CHECK(dec.holds);
    CHECK(dec.central_hi < dec.central_lo);
}

TEST_CASE("regularity via both routes") {
    CHECK(regularity(NormalFormSet({0, 1, 3, 11, 13})) == 5);
    CHECK(regularity(NormalFormSet({0, 1, 3, 5, 6, 12})) == 2);
    CHECK(regularity(NormalFormSet({0, 5, 9, 11, 20})) == 5);
    CHECK(regularity_via_cohomology(NormalFormSet({0, 1, 2, 3, 8})) == 3);
    CHECK(regularity_via_cohomology(NormalFormSet({0, 1, 2, 3, 4})) == 1);
    CHECK(regularity_via_cohomology(NormalFormSet({0, 1, 3, 11, 13})) == 5);
}

TEST_CASE("Cohen-Macaulay classification") {
    CHECK(is_cm(NormalFormSet({0, 1, 2, 3, 8})));
    CHECK_FALSE(is_cm(NormalFormSet({0, 1, 3, 11, 13})));
    CHECK_FALSE(is_cm(NormalFormSet({0, 5, 9, 11, 20})));
}

TEST_CASE("classification record of the section-4 examples") {
    const auto c1 = classification(NormalFormSet({0, 1, 3, 11, 13}));
    CHECK(c1.D == 0);
    CHECK(c1.last_step);
    const auto c2 = classification(NormalFormSet({0, 6, 9, 13, 22}));
    CHECK(c2.D == 1);
    CHECK_FALSE(c2.cm);
    CHECK_FALSE(c2.last_step);
    const auto c3 = classification(NormalFormSet({0, 5, 9, 11, 20}));
    CHECK(c3.D == 2);
    CHECK_FALSE(c3.last_step);
    const auto c4 = classification(NormalFormSet({0, 2, 5, 6, 9}));
    CHECK(c4.D == 1);
    CHECK(c4.cm);
    CHECK(c4.last_step);
}

TEST_CASE("bounds suite") {
    const auto b = bounds_suite(NormalFormSet({0, 2, 5, 6, 9}));
    CHECK(b.eg == 4);
    CHECK(b.lvovsky == 5);
    CHECK(b.gw == 6);
    CHECK(b.glp == 6);
    CHECK(b.nathanson == 216);
    CHECK(b.gs == 8);
    CHECK(b.wcc == 5 + 6 + 9 - 5 + 1);
    const auto e = bounds_suite(NormalFormSet({0, 1, 2, 3, 8}));
    REQUIRE(e.elias_cm.has_value());
    CHECK(*e.elias_cm == 3);
}

TEST_CASE("Granville-Walker family recognition") {
    const auto p = gw_family_check(NormalFormSet({0, 1, 2, 3, 5, 6, 7, 8, 9}));
    REQUIRE(p.has_value());
    CHECK(p->family == GwFamily::punctured_interval);
    CHECK(p->a == 4);
    CHECK(sigma(NormalFormSet({0, 1, 2, 3, 5, 6, 7, 8, 9})) == 2); // = d - n + 2

    const auto t = gw_family_check(NormalFormSet({0, 1, 5, 6, 7, 8, 9}));
    REQUIRE(t.has_value());
    CHECK(t->family == GwFamily::two_blocks);
    CHECK(t->a == 4);
    CHECK(sigma(NormalFormSet({0, 1, 5, 6, 7, 8, 9})) == 4);

    const auto rt = gw_family_check(NormalFormSet({0, 1, 5, 6, 7, 8, 9}).reflected());
    REQUIRE(rt.has_value());
    CHECK(rt->family == GwFamily::reflected_two_blocks);
    CHECK(rt->a == 4);

    CHECK_FALSE(gw_family_check(NormalFormSet({0, 2, 5, 6, 9})).has_value());
    CHECK_THROWS_AS(gw_family_check(NormalFormSet({0, 1})), input_error);
}

TEST_CASE("special CM case") {
    const auto hit = cm_special_check(NormalFormSet({0, 1, 2, 3, 8}));
    CHECK(hit.applies);
    CHECK(hit.conclusions_hold);
    CHECK_FALSE(cm_special_check(NormalFormSet({0, 1, 3, 11, 13})).applies);
    // rational normal curves: (F1+d, F2+d) never lands in the group
    CHECK_FALSE(cm_special_check(NormalFormSet({0, 1, 2, 3})).applies);
    CHECK_FALSE(cm_special_check(NormalFormSet({0, 1, 2, 3, 4})).applies);
}

TEST_CASE("report invariants over a small family") {
    for (const NormalFormSet& A : enumerate_normal_form(4, 9)) {
        const AnalysisReport r = SetAnalysis(A).report();
        CHECK(r.reg == r.reg_cohomology);
        CHECK(r.rhp <= r.reg);
        CHECK(r.sigma_direct <= r.sigma);
        CHECK(r.D >= 0);
        CHECK(r.reduction_number == r.m_ap);
        if (r.smooth) {
            CHECK(r.sigma == r.rhp);
            CHECK(r.ceil_term == 0);
        }
        if (r.cm)
            CHECK(r.sigma == r.ceil_term);
    }
}

TEST_CASE("normalization bookkeeping in the report") {
    const std::vector<int> raw{3, 5, 7, 9, 19};
    const NormalFormSet A = normalize(raw);
    const AnalysisReport r = SetAnalysis(A, raw).report();
    CHECK_FALSE(r.already_normal);
    CHECK(r.input == raw);
    CHECK(r.elements == std::vector<int>{0, 1, 2, 3, 8});
    CHECK(SetAnalysis(A).report().already_normal);
}
