#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sumreg/errors.hpp"
#include "sumreg/numerical_semigroup.hpp"
#include "sumreg/sumset_table.hpp"

namespace sumreg {

// The homogeneous semigroup S in N^2 generated by the points (a_i, d - a_i).
// S is graded by level s = (x + y)/d, and its level-s slice is exactly
// {(x, s*d - x) : x in sA}, so every query below reduces to sumset
// membership. Points are handled as (first coordinate, level); the second
// coordinate is redundant on a fixed level line.

struct LatticePoint {
    long long x = 0;
    long long y = 0;
};

// Membership in the subgroup G of Z^2 generated by S. Since gcd(A) = 1, G
// is generated by (0, d) and (1, -1), which is exactly the divisibility
// condition d | (x + y).
inline bool group_contains(int d, LatticePoint p) {
    return (p.x + p.y) % d == 0;
}

// Membership of (x, y) in S. Throws window_error when the level of the
// point exceeds the table cap.
inline bool s_contains(const SumsetTable& table, LatticePoint p) {
    const int d = table.d();
    if (p.x < 0 || p.y < 0 || (p.x + p.y) % d != 0)
        return false;
    const long long s = (p.x + p.y) / d;
    if (s > table.cap())
        throw window_error("point level " + std::to_string(s) +
                           " beyond table cap " + std::to_string(table.cap()));
    return table.contains(static_cast<int>(s), p.x);
}

// Apery points of S per level, stored by first coordinate:
//   AP_s = { x in sA : x not in (s-1)A and x - d not in (s-1)A }.
inline std::vector<std::vector<int>> apery_levels(const SumsetTable& table,
                                                  int window_end) {
    if (window_end > table.cap())
        throw window_error("apery window exceeds table cap");
    const int d = table.d();
    std::vector<std::vector<int>> ap(static_cast<std::size_t>(window_end) + 1);
    ap[0].push_back(0);
    for (int s = 1; s <= window_end; ++s)
        for (int x : table.members(s))
            if (!table.contains(s - 1, x) && !table.contains(s - 1, x - d))
                ap[s].push_back(x);
    return ap;
}

// Exceptional points of S per level, stored by first coordinate:
//   E_s = { x in sA : x in (s-1)A, x - d in (s-1)A, x - d not in (s-2)A }.
// E_0 = E_1 = 0 automatically.
inline std::vector<std::vector<int>> exceptional_levels(const SumsetTable& table,
                                                        int window_end) {
    if (window_end > table.cap())
        throw window_error("exceptional window exceeds table cap");
    const int d = table.d();
    std::vector<std::vector<int>> ex(static_cast<std::size_t>(window_end) + 1);
    for (int s = 2; s <= window_end; ++s)
        for (int x : table.members(s))
            if (table.contains(s - 1, x) && table.contains(s - 1, x - d) &&
                !table.contains(s - 2, x - d))
                ex[s].push_back(x);
    return ex;
}

// Per-level slices of S' \ S where S' = G cap (S1 x S2). These are the
// points (x, s*d - x) with x in S1 and s*d - x in S2 that are not in S; the
// graded support of H^1.
inline std::vector<std::vector<int>> sprime_gap_levels(const SumsetTable& table,
                                                       const NumericalSemigroup& sg1,
                                                       const NumericalSemigroup& sg2,
                                                       int window_end) {
    if (window_end > table.cap())
        throw window_error("sprime window exceeds table cap");
    const int d = table.d();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(window_end) + 1);
    for (int s = 0; s <= window_end; ++s)
        for (int x = 0; x <= s * d; ++x)
            if (sg1.contains(x) && sg2.contains(s * d - x) && !table.contains(s, x))
                out[s].push_back(x);
    return out;
}

// Non-emptiness flags of G cap ((Z\S1) x (Z\S2)) on levels 0..window_end
// (the graded support of H^2 restricted to non-negative levels).
inline std::vector<bool> h2_level_flags(const NumericalSemigroup& sg1,
                                        const NumericalSemigroup& sg2, int d,
                                        int window_end) {
    std::vector<bool> flags(static_cast<std::size_t>(window_end) + 1, false);
    const long long f1 = sg1.frobenius();
    const long long f2 = sg2.frobenius();
    for (int s = 0; s <= window_end; ++s) {
        const long long lvl = static_cast<long long>(s) * d;
        for (long long x = lvl - f2; x <= f1; ++x) {
            if (!sg1.contains(x) && !sg2.contains(lvl - x)) {
                flags[s] = true;
                break;
            }
        }
    }
    return flags;
}

// Per-level point sets of the homogeneous semigroup, all stored by first
// coordinate over a common window.
struct LevelSets {
    std::vector<std::vector<int>> ap;
    std::vector<std::vector<int>> ex;
    std::vector<std::vector<int>> sprime_gap;
    std::vector<bool> h2_nonempty;

    int window_end() const { return static_cast<int>(ap.size()) - 1; }
};

inline LevelSets compute_level_sets(const SumsetTable& table,
                                    const NumericalSemigroup& sg1,
                                    const NumericalSemigroup& sg2, int window_end) {
    LevelSets ls;
    ls.ap = apery_levels(table, window_end);
    ls.ex = exceptional_levels(table, window_end);
    ls.sprime_gap = sprime_gap_levels(table, sg1, sg2, window_end);
    ls.h2_nonempty = h2_level_flags(sg1, sg2, table.d(), window_end);
    return ls;
}

// m(AP_S) = max{ s : AP_s nonempty }. The window must reach past the last
// nonempty level, otherwise the maximum cannot be certified.
inline int m_ap(const std::vector<std::vector<int>>& ap) {
    if (!ap.empty() && !ap.back().empty())
        throw window_error("apery window too small: top level still nonempty");
    for (int s = static_cast<int>(ap.size()) - 1; s >= 0; --s)
        if (!ap[s].empty())
            return s;
    throw invariant_violation("AP_0 must contain the origin");
}

// m(E_S) = max{ s : E_{s+1} nonempty }, one less than the top nonempty
// exceptional level; nullopt stands for -infinity when E_S is empty.
inline std::optional<int> m_e(const std::vector<std::vector<int>>& ex) {
    if (!ex.empty() && !ex.back().empty())
        throw window_error("exceptional window too small: top level still nonempty");
    for (int s = static_cast<int>(ex.size()) - 1; s >= 0; --s)
        if (!ex[s].empty())
            return s - 1;
    return std::nullopt;
}

inline int m_ap(const LevelSets& levels) { return m_ap(levels.ap); }
inline std::optional<int> m_e(const LevelSets& levels) { return m_e(levels.ex); }

// Independent recomputation of (m(E_S), m(AP_S)) straight from the sumset
// characterizations:
//   m(E_S)  = max{ s : exists a in sA with a - d in sA \ (s-1)A }
//   m(AP_S) = max{ s : exists a in sA with a, a - d both outside (s-1)A }.
inline std::pair<std::optional<int>, int> m_via_sumsets(const SumsetTable& table) {
    const int d = table.d();
    const int cap = table.cap();
    std::optional<int> me;
    int map = -1;
    for (int s = 0; s <= cap; ++s) {
        bool e_here = false;
        bool ap_here = false;
        for (int x : table.members(s)) {
            if (x >= d && table.contains(s, x - d) && !(s >= 1 && table.contains(s - 1, x - d)))
                e_here = true;
            if (!(s >= 1 && table.contains(s - 1, x)) &&
                !(s >= 1 && x >= d && table.contains(s - 1, x - d)))
                ap_here = true;
        }
        if (e_here) {
            if (s == cap)
                throw window_error("table cap too small for m(E_S) recomputation");
            me = s;
        }
        if (ap_here) {
            if (s == cap)
                throw window_error("table cap too small for m(AP_S) recomputation");
            map = s;
        }
    }
    return {me, map};
}

// end(H^1): top level on which S' \ S is nonempty; nullopt = -infinity
// (exactly the Cohen-Macaulay case).
inline std::optional<int> end_h1(const std::vector<std::vector<int>>& sprime_gap) {
    if (!sprime_gap.empty() && !sprime_gap.back().empty())
        throw window_error("sprime window too small: top level still nonempty");
    for (int s = static_cast<int>(sprime_gap.size()) - 1; s >= 0; --s)
        if (!sprime_gap[s].empty())
            return s;
    return std::nullopt;
}

inline std::optional<int> end_h1(const LevelSets& levels) {
    return end_h1(levels.sprime_gap);
}

// end(H^2): the largest s admitting integers x not in S1 and y not in S2
// with x + y = s*d. Any witness has x <= F(S1) and y <= F(S2), so the scan
// descends from floor((F1+F2)/d); a witness always exists by s = -2 (both
// coordinates negative), so the value is finite though possibly negative.
inline int end_h2(const NumericalSemigroup& sg1, const NumericalSemigroup& sg2,
                  int d) {
    const long long f1 = sg1.frobenius();
    const long long f2 = sg2.frobenius();
    const long long num = f1 + f2;
    long long s = num >= 0 ? num / d : -((-num + d - 1) / d);
    for (; s >= -2; --s) {
        const long long lvl = s * d;
        for (long long x = lvl - f2; x <= f1; ++x)
            if (!sg1.contains(x) && !sg2.contains(lvl - x))
                return static_cast<int>(s);
    }
    throw invariant_violation("end(H^2) search must succeed by level -2");
}

// Reduction number: the least s with (s+1)A = sA union (d + sA), checked to
// persist through the table window; equals m(AP_S).
inline int reduction_number(const SumsetTable& table) {
    const int d = table.d();
    const int cap = table.cap();
    if (cap < 1)
        throw window_error("table cap too small for reduction number");
    auto holds = [&](int s) {
        for (int x = 0; x <= (s + 1) * d; ++x) {
            const bool member = table.contains(s + 1, x);
            const bool built = table.contains(s, x) || (x >= d && table.contains(s, x - d));
            if (member != built)
                return false;
        }
        return true;
    };
    if (!holds(cap - 1))
        throw window_error("table cap too small: reduction not reached");
    int least = cap - 1;
    while (least > 0 && holds(least - 1))
        --least;
    return least;
}

} // namespace sumreg
