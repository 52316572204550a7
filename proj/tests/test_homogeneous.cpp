#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sumreg/homogeneous.hpp"
#include "sumreg/verifier.hpp"
#include "test_oracle.hpp"

using namespace sumreg;

namespace {
NumericalSemigroup sg_of(const NormalFormSet& A) {
    std::vector<int> gens;
    for (int a : A)
        if (a > 0)
            gens.push_back(a);
    return NumericalSemigroup::from_generators(gens);
}
} // namespace

TEST_CASE("s_contains reads membership through the sumset table") {
    const SumsetTable t(NormalFormSet({0, 1, 2, 3, 8}), 4);
    CHECK(s_contains(t, {7, 17}));        // 7 = 1+3+3 at level 3
    CHECK_FALSE(s_contains(t, {7, 9}));   // 7 not in 2A
    CHECK(s_contains(t, {0, 8}));         // generator (0, d)
    CHECK_FALSE(s_contains(t, {1, 2}));   // 3 not divisible by 8
    CHECK_FALSE(s_contains(t, {-8, 16})); // negative coordinate
    CHECK_THROWS_AS(s_contains(t, {0, 48}), window_error);
}

TEST_CASE("group membership is divisibility of the coordinate sum") {
    CHECK(group_contains(17, {8, 9}));
    CHECK_FALSE(group_contains(8, {1, 2}));
    CHECK(group_contains(3, {-1, -2}));
}

TEST_CASE("group predicate equals brute-force subgroup closure") {
    for (const std::vector<int>& A :
         {std::vector<int>{0, 1, 3}, {0, 2, 3}, {0, 1, 4}, {0, 3, 4, 5}}) {
        const int d = A.back();
        const int radius = 2 * d;
        const auto closure = test_oracle::group_closure_brute(A, radius);
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y)
                CHECK(group_contains(d, {x, y}) ==
                      (closure.count({x, y}) > 0));
    }
}

TEST_CASE("Apery points of the running example") {
    const SumsetTable t(NormalFormSet({0, 1, 2, 3, 8}), 8);
    const auto ap = apery_levels(t, 8);
    std::vector<std::pair<int, int>> flat;
    for (int s = 0; s <= 8; ++s)
        for (int x : ap[s])
            flat.emplace_back(x, s * 8 - x);
    CHECK(flat == std::vector<std::pair<int, int>>{{0, 0},
                                                   {1, 7},
                                                   {2, 6},
                                                   {3, 5},
                                                   {4, 12},
                                                   {5, 11},
                                                   {6, 10},
                                                   {7, 17}});
    const auto ex = exceptional_levels(t, 8);
    for (const auto& lvl : ex)
        CHECK(lvl.empty());
}

TEST_CASE("Apery and exceptional levels for the interval set") {
    const SumsetTable t(NormalFormSet({0, 1, 2, 3}), 6);
    const auto ap = apery_levels(t, 6);
    CHECK(ap[0] == std::vector<int>{0});
    CHECK(ap[1] == std::vector<int>{1, 2});
    for (int s = 2; s <= 6; ++s)
        CHECK(ap[s].empty());
}

TEST_CASE("exceptional levels of the non-CM examples") {
    const SumsetTable t(NormalFormSet({0, 1, 3, 11, 13}), 13);
    const auto ex = exceptional_levels(t, 13);
    CHECK(ex[0].empty());
    CHECK(ex[1].empty());
    CHECK_FALSE(ex[6].empty());
    for (int s = 7; s <= 13; ++s)
        CHECK(ex[s].empty());
}

TEST_CASE("level sets agree with the brute-force 2-D definition") {
    for (int n = 4; n <= 5; ++n)
        for (int d = n - 1; d <= 9; ++d)
            for (const NormalFormSet& A : enumerate_normal_form(n, d)) {
                const int window = d - n + 4;
                const SumsetTable t(A, window + 1);
                const auto brute = test_oracle::ap_e_brute(A.elements(), window + 1);
                const auto ap = apery_levels(t, window);
                const auto ex = exceptional_levels(t, window);
                for (int s = 0; s <= window; ++s) {
                    CHECK(ap[s] == brute.ap[s]);
                    CHECK(ex[s] == brute.ex[s]);
                }
            }
}

TEST_CASE("m invariants of the pinned sets") {
    {
        const SumsetTable t(NormalFormSet({0, 1, 3, 11, 13}), 13);
        CHECK(m_e(exceptional_levels(t, 13)) == 5);
        CHECK(m_ap(apery_levels(t, 13)) == 4);
        CHECK(m_via_sumsets(t) == std::pair<std::optional<int>, int>{5, 4});
    }
    {
        const NormalFormSet A({0, 5, 9, 11, 20});
        const SumsetTable t(A, 20);
        CHECK(m_e(exceptional_levels(t, 20)) == 4);
        CHECK(m_ap(apery_levels(t, 20)) == 5);
        const auto ls = compute_level_sets(t, sg_of(A), sg_of(A.reflected()), 20);
        CHECK(m_e(ls) == 4);
        CHECK(m_ap(ls) == 5);
        CHECK(end_h1(ls) == 3);
    }
    {
        const SumsetTable t(NormalFormSet({0, 1, 2, 3, 8}), 8);
        CHECK_FALSE(m_e(exceptional_levels(t, 8)).has_value());
        CHECK(m_ap(apery_levels(t, 8)) == 3);
        CHECK(m_via_sumsets(t) ==
              std::pair<std::optional<int>, int>{std::nullopt, 3});
    }
    {
        const SumsetTable t(NormalFormSet({0, 1, 2, 3}), 6);
        CHECK(m_via_sumsets(t) ==
              std::pair<std::optional<int>, int>{std::nullopt, 1});
    }
}

TEST_CASE("m extraction refuses an undersized window") {
    const SumsetTable t(NormalFormSet({0, 1, 3, 11, 13}), 6);
    CHECK_THROWS_AS(m_e(exceptional_levels(t, 6)), window_error);
}

TEST_CASE("sprime gap levels and cohomology endpoints") {
    const NormalFormSet hellus({0, 1, 2, 5, 13, 14, 16, 17});
    const SumsetTable t(hellus, 14);
    const auto s1 = sg_of(hellus);
    const auto s2 = sg_of(hellus.reflected());
    const auto sprime = sprime_gap_levels(t, s1, s2, 14);
    CHECK(std::count(sprime[1].begin(), sprime[1].end(), 8) == 1); // (8,9)
    CHECK_FALSE(s_contains(t, {8, 26}));

    const NormalFormSet cm_set({0, 1, 2, 3, 8});
    const SumsetTable tc(cm_set, 8);
    const auto c1 = sg_of(cm_set);
    const auto c2 = sg_of(cm_set.reflected());
    const auto sp = sprime_gap_levels(tc, c1, c2, 8);
    for (const auto& lvl : sp)
        CHECK(lvl.empty()); // CM: S' = S
    CHECK_FALSE(end_h1(sp).has_value());
    CHECK(end_h2(c1, c2, 8) == 1); // witness x = -1, y = 9

    const NormalFormSet rnc({0, 1, 2, 3});
    const auto r1 = sg_of(rnc);
    const auto r2 = sg_of(rnc.reflected());
    CHECK(end_h2(r1, r2, 3) == -1); // witness (-1, -2)
}

TEST_CASE("h2 level flags match the endpoint") {
    const NormalFormSet A({0, 5, 9, 11, 20});
    const auto s1 = sg_of(A);
    const auto s2 = sg_of(A.reflected());
    const int top = end_h2(s1, s2, 20);
    const auto flags = h2_level_flags(s1, s2, 20, top + 3);
    CHECK(flags[top]);
    CHECK_FALSE(flags[top + 1]);
    CHECK_FALSE(flags[top + 2]);
}

TEST_CASE("reduction numbers") {
    CHECK(reduction_number(SumsetTable(NormalFormSet({0, 5, 9, 11, 20}), 20)) == 5);
    CHECK(reduction_number(SumsetTable(NormalFormSet({0, 1, 2, 3, 8}), 8)) == 3);
    CHECK(reduction_number(SumsetTable(NormalFormSet({0, 1, 2, 3, 4}), 5)) == 1);
    CHECK_THROWS_AS(reduction_number(SumsetTable(NormalFormSet({0, 5, 9, 11, 20}), 3)),
                    window_error);
}

TEST_CASE("level identity and global count over an enumerated family") {
    for (const NormalFormSet& A : enumerate_normal_form(4, 10)) {
        const int d = A.d();
        const int cap = d - A.n() + 5;
        const SumsetTable t(A, cap);
        const auto ap = apery_levels(t, cap);
        const auto ex = exceptional_levels(t, cap);
        long long ap_total = 0;
        long long ex_total = 0;
        for (int s = 0; s <= cap; ++s) {
            const long long lhs =
                static_cast<long long>(ap[s].size()) - static_cast<long long>(ex[s].size());
            const long long rhs = t.size(s) - 2LL * (s >= 1 ? t.size(s - 1) : 0) +
                                  (s >= 2 ? t.size(s - 2) : 0);
            CHECK(lhs == rhs);
            ap_total += static_cast<long long>(ap[s].size());
            ex_total += static_cast<long long>(ex[s].size());
        }
        CHECK(ap_total == ex_total + d);
        CHECK(ex[0].empty());
        CHECK(ex[1].empty());
        CHECK(ap[0] == std::vector<int>{0});
    }
}

TEST_CASE("Apery pairing: constructive form of the pairing lemma") {
    for (const NormalFormSet& A : enumerate_normal_form(4, 9)) {
        const int d = A.d();
        const int cap = d - A.n() + 5;
        const SumsetTable t(A, cap);
        const auto s1 = sg_of(A);
        const auto s2 = sg_of(A.reflected());
        const AperyTable ap1(s1, d);
        const AperyTable ap2(s2, d);
        const auto ap = apery_levels(t, cap);
        auto in_ap = [&](long long x, long long y) {
            if ((x + y) % d != 0)
                return false;
            const long long s = (x + y) / d;
            if (s < 0 || s > cap)
                return false;
            const auto& lvl = ap[static_cast<std::size_t>(s)];
            return std::binary_search(lvl.begin(), lvl.end(), static_cast<int>(x));
        };
        for (int i = 1; i < d; ++i) {
            const int ri = ap1.entry(i);
            const int ti = ap2.entry(d - i);
            if (s_contains(t, {ri, ti})) {
                CHECK(in_ap(ri, ti));
            } else {
                CHECK_FALSE(in_ap(ri, ti));
                bool right = false;
                bool up = false;
                for (int s = 0; s <= cap && !(right && up); ++s) {
                    for (int x : ap[static_cast<std::size_t>(s)]) {
                        const int y = s * d - x;
                        if (y == ti && x > ri)
                            right = true;
                        if (x == ri && y > ti)
                            up = true;
                    }
                }
                CHECK(right);
                CHECK(up);
            }
        }
    }
}
