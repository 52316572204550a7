#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sumreg/errors.hpp"
#include "sumreg/homogeneous.hpp"
#include "sumreg/normal_form.hpp"
#include "sumreg/numerical_semigroup.hpp"
#include "sumreg/sumset_table.hpp"

namespace sumreg {

inline int ceil_div(long long a, long long b) {
    return static_cast<int>(a >= 0 ? (a + b - 1) / b : -((-a) / b));
}

// HP(s) = slope * s + intercept, the Hilbert polynomial of the coordinate
// ring; slope is always d and the intercept is 1 - genus1 - genus2.
struct HilbertPolynomial {
    int slope = 0;
    int intercept = 0;
    long long operator()(long long s) const { return slope * s + intercept; }
};

struct BoundsRecord {
    long long nathanson = 0;            // (n-2)(d-1)d
    long long wcc = 0;                  // sum a_2..a_{n-2} + d - n + 1
    long long gs = 0;                   // 2*floor(d/2)
    long long gw = 0;                   // d - n + 2
    long long eg = 0;                   // Erdos-Graham derived bound
    long long lvovsky = 0;              // max gap-pair sum minus 1
    std::optional<long long> elias_cm;  // ceil((d-1)/(n-2)), CM only
    long long glp = 0;                  // d - n + 2
};

enum class GwFamily {
    punctured_interval,
    two_blocks,
    reflected_punctured,
    reflected_two_blocks,
};

struct GwFamilyTag {
    GwFamily family;
    int a = 0;
    bool operator==(const GwFamilyTag&) const = default;
};

inline const char* to_string(GwFamily f) {
    switch (f) {
        case GwFamily::punctured_interval: return "punctured_interval";
        case GwFamily::two_blocks: return "two_blocks";
        case GwFamily::reflected_punctured: return "reflected_punctured";
        case GwFamily::reflected_two_blocks: return "reflected_two_blocks";
    }
    return "?";
}

struct CmSpecialCheck {
    bool applies = false;
    bool conclusions_hold = false;
};

struct Classification {
    int D = 0;
    bool last_step = false;
    bool smooth = false;
    bool cm = false;
};

// One set's full invariant suite; value object, serializable.
struct AnalysisReport {
    std::vector<int> input;
    std::vector<int> elements;
    bool already_normal = true;
    int n = 0;
    int d = 0;
    int c1 = 0;
    int c2 = 0;
    int genus1 = 0;
    int genus2 = 0;
    std::vector<int> C1;
    std::vector<int> C2;
    HilbertPolynomial hp;
    int rhp = 0;
    int ceil_term = 0;
    int sigma = 0;
    int sigma_direct = 0;
    std::optional<int> m_e; // nullopt = -infinity
    int m_ap = 0;
    int reg = 0;
    int reg_cohomology = 0;
    std::optional<int> end_h1; // nullopt = -infinity
    int end_h2 = 0;
    bool cm = false;
    bool smooth = false;
    int D = 0;
    bool last_step = false;
    int reduction_number = 0;
    BoundsRecord bounds;
    std::optional<GwFamilyTag> gw_extremal;
    CmSpecialCheck cm_special;
};

// Recognize the Granville-Walker extremal families: A or d-A equal to
// [0,d] \ {a} or [0,1] u [a+1,d] for some 2 <= a <= d-2. These are exactly
// the sets with sigma = d - n + 2.
inline std::optional<GwFamilyTag> gw_family_check(const NormalFormSet& A) {
    if (A.n() < 3)
        throw input_error("family recognition needs n >= 3");
    auto punctured = [](const NormalFormSet& B) -> std::optional<int> {
        const int d = B.d();
        if (B.n() != d)
            return std::nullopt;
        int expected = 0;
        int missing = -1;
        for (int v : B) {
            if (v != expected) {
                missing = expected;
                ++expected;
            }
            ++expected;
        }
        if (missing >= 2 && missing <= d - 2)
            return missing;
        return std::nullopt;
    };
    auto two_blocks = [](const NormalFormSet& B) -> std::optional<int> {
        const int d = B.d();
        const int n = B.n();
        const int a = d - n + 2;
        if (a < 2 || a > d - 2)
            return std::nullopt;
        if (B[1] != 1)
            return std::nullopt;
        for (int i = 2; i < n; ++i)
            if (B[i] != a + i - 1)
                return std::nullopt;
        return a;
    };
    if (auto a = punctured(A))
        return GwFamilyTag{GwFamily::punctured_interval, *a};
    if (auto a = two_blocks(A))
        return GwFamilyTag{GwFamily::two_blocks, *a};
    const NormalFormSet refl = A.reflected();
    if (auto a = punctured(refl))
        return GwFamilyTag{GwFamily::reflected_punctured, *a};
    if (auto a = two_blocks(refl))
        return GwFamilyTag{GwFamily::reflected_two_blocks, *a};
    return std::nullopt;
}

// The Structure Theorem decomposition of sA:
//   sA  =?  C1  u  [c1, sd - c2]  u  (sd - C2)
// holds() is true iff the three parts are pairwise disjoint and their union
// is exactly sA; the central interval may be empty.
struct StructureDecomposition {
    std::vector<int> head;    // C1
    int central_lo = 0;       // c1
    int central_hi = 0;       // sd - c2
    std::vector<int> tail;    // sd - C2, ascending
    bool holds = false;
};

namespace detail {

inline StructureDecomposition decompose(const SumsetTable& table, int s,
                                        const std::vector<int>& C1,
                                        const std::vector<int>& C2, int c1, int c2) {
    const int d = table.d();
    StructureDecomposition out;
    out.head = C1;
    out.central_lo = c1;
    out.central_hi = s * d - c2;
    out.tail.reserve(C2.size());
    for (auto it = C2.rbegin(); it != C2.rend(); ++it)
        out.tail.push_back(s * d - *it);
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(s) * d + 1, 0);
    long long claimed = 0;
    bool ok = true;
    auto claim = [&](int x) {
        if (x < 0 || x > s * d || seen[x]) {
            ok = false;
            return;
        }
        seen[x] = 1;
        ++claimed;
        if (!table.contains(s, x))
            ok = false;
    };
    for (int x : out.head)
        claim(x);
    for (int x = out.central_lo; x <= out.central_hi && ok; ++x)
        claim(x);
    for (int x : out.tail)
        claim(x);
    out.holds = ok && claimed == table.size(s);
    return out;
}

inline std::vector<int> positive_part(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v)
        if (x > 0)
            out.push_back(x);
    return out;
}

} // namespace detail

// Everything the paper derives from one normal-form set A, computed once
// over a shared sumset table. Requires n >= 4 (below that the associated
// variety is not a curve in the intended sense and the invariant suite is
// not defined by the results used here).
class SetAnalysis {
  public:
    explicit SetAnalysis(const NormalFormSet& A, std::vector<int> original_input = {})
        : set_(checked(A)),
          table_(A, A.d() - A.n() + 5),
          sg1_(NumericalSemigroup::from_generators(detail::positive_part(A.elements()))),
          sg2_(NumericalSemigroup::from_generators(
              detail::positive_part(A.reflected().elements()))),
          ap1_(sg1_, A.d()),
          ap2_(sg2_, A.d()),
          levels_(compute_level_sets(table_, sg1_, sg2_, table_.cap())) {
        build_report(std::move(original_input));
    }

    const NormalFormSet& set() const { return set_; }
    const SumsetTable& table() const { return table_; }
    const NumericalSemigroup& sg1() const { return sg1_; }
    const NumericalSemigroup& sg2() const { return sg2_; }
    const AperyTable& apery1() const { return ap1_; }
    const AperyTable& apery2() const { return ap2_; }
    const LevelSets& levels() const { return levels_; }
    const AnalysisReport& report() const { return report_; }

    StructureDecomposition decomposition(int s) const {
        return detail::decompose(table_, s, report_.C1, report_.C2, report_.c1,
                                 report_.c2);
    }

  private:
    static const NormalFormSet& checked(const NormalFormSet& A) {
        if (A.n() < 4)
            throw input_error("analysis requires n >= 4, got n = " +
                              std::to_string(A.n()));
        return A;
    }

    void build_report(std::vector<int> original_input) {
        AnalysisReport& r = report_;
        const int n = set_.n();
        const int d = set_.d();
        r.elements = set_.elements();
        r.input = original_input.empty() ? r.elements : std::move(original_input);
        r.already_normal = (r.input == r.elements);
        r.n = n;
        r.d = d;
        r.c1 = sg1_.conductor();
        r.c2 = sg2_.conductor();
        r.genus1 = sg1_.genus();
        r.genus2 = sg2_.genus();
        r.C1 = sg1_.small_part();
        r.C2 = sg2_.small_part();
        r.hp = {d, 1 - r.genus1 - r.genus2};
        r.ceil_term = ceil_div(r.c1 + r.c2, d);

        // rhp: least s from which |sA| agrees with HP. Agreement is
        // guaranteed from sigma on, and sigma <= d - n + 2, so scanning
        // down from that bound is exhaustive.
        const int upper = d - n + 2;
        if (table_.size(upper) != r.hp(upper))
            throw invariant_violation("Hilbert function must match HP at d-n+2");
        r.rhp = 0;
        for (int s = upper; s >= 0; --s) {
            if (table_.size(s) != r.hp(s)) {
                r.rhp = s + 1;
                break;
            }
        }
        r.sigma = std::max(r.rhp, r.ceil_term);
        if (!decomposition(r.sigma).holds)
            throw invariant_violation("decomposition must hold at sigma");
        r.sigma_direct = r.sigma;
        while (r.sigma_direct > 0 && decomposition(r.sigma_direct - 1).holds)
            --r.sigma_direct;

        r.m_ap = m_ap(levels_.ap);
        r.m_e = m_e(levels_.ex);
        r.end_h1 = end_h1(levels_.sprime_gap);
        r.end_h2 = end_h2(sg1_, sg2_, d);
        r.reg = std::max(r.m_e.value_or(r.m_ap), r.m_ap);
        r.reg_cohomology =
            std::max(r.end_h1 ? *r.end_h1 + 1 : r.end_h2 + 2, r.end_h2 + 2);

        // Cohen-Macaulay, decided by three routes that must agree:
        // E_S empty, |AP_S| = d, and all (r_i, t_{d-i}) in S.
        const bool cm_via_e = !r.m_e.has_value();
        long long ap_total = 0;
        for (const auto& lvl : levels_.ap)
            ap_total += static_cast<long long>(lvl.size());
        const bool cm_via_count = (ap_total == d);
        bool cm_via_pairs = true;
        for (int i = 1; i < d && cm_via_pairs; ++i)
            cm_via_pairs = s_contains(table_, {ap1_.entry(i), ap2_.entry(d - i)});
        if (cm_via_e != cm_via_count || cm_via_e != cm_via_pairs)
            throw invariant_violation("Cohen-Macaulay routes disagree");
        r.cm = cm_via_e;

        r.smooth = (r.c1 == 0 && r.c2 == 0);
        r.D = r.reg - r.rhp;
        r.last_step = r.cm || (r.m_e && *r.m_e >= r.m_ap);
        r.reduction_number = reduction_number(table_);

        BoundsRecord& b = r.bounds;
        b.nathanson = static_cast<long long>(n - 2) * (d - 1) * d;
        long long mid = 0;
        for (int i = 2; i <= n - 2; ++i)
            mid += set_[i];
        b.wcc = mid + d - n + 1;
        b.gs = 2 * (d / 2);
        b.gw = d - n + 2;
        // s0^EG = ceil(2 * (floor(d/(n-1)) * (1 + (a_{n-2} - a_1)/d) - 1 + 1/d)),
        // evaluated in exact integer arithmetic over denominator d.
        const long long q = d / (n - 1);
        const long long eg_num = q * (d + set_[n - 2] - set_[1]) - d + 1;
        b.eg = ceil_div(2 * eg_num, d);
        long long best = 0;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                best = std::max(best, static_cast<long long>(set_[i] - set_[i - 1]) +
                                          (set_[j] - set_[j - 1]));
        b.lvovsky = best - 1;
        if (r.cm)
            b.elias_cm = ceil_div(d - 1, n - 2);
        b.glp = d - n + 2;

        r.gw_extremal = gw_family_check(set_);

        // Special CM case: (F1+d, F2+d) an Apery point of S forces
        // sigma = ceil term, rhp = sigma, reg = sigma + 1.
        const long long fx = sg1_.frobenius() + d;
        const long long fy = sg2_.frobenius() + d;
        if (r.cm && group_contains(d, {fx, fy})) {
            const int lvl = static_cast<int>((fx + fy) / d);
            const auto& ap_lvl = levels_.ap[lvl];
            r.cm_special.applies =
                std::binary_search(ap_lvl.begin(), ap_lvl.end(), static_cast<int>(fx));
        }
        if (r.cm_special.applies)
            r.cm_special.conclusions_hold = (r.sigma == r.ceil_term &&
                                             r.rhp == r.sigma && r.reg == r.sigma + 1);
    }

    NormalFormSet set_;
    SumsetTable table_;
    NumericalSemigroup sg1_;
    NumericalSemigroup sg2_;
    AperyTable ap1_;
    AperyTable ap2_;
    LevelSets levels_;
    AnalysisReport report_;
};

inline AnalysisReport analyze(const NormalFormSet& A) { return SetAnalysis(A).report(); }

// Single-quantity entry points. Each builds the shared analysis; use
// SetAnalysis directly when more than one invariant is needed.
inline HilbertPolynomial hilbert_polynomial(const NormalFormSet& A) {
    return SetAnalysis(A).report().hp;
}
inline int rhp(const NormalFormSet& A) { return SetAnalysis(A).report().rhp; }
inline int sigma(const NormalFormSet& A) { return SetAnalysis(A).report().sigma; }
inline int sigma_direct(const NormalFormSet& A) {
    return SetAnalysis(A).report().sigma_direct;
}
inline int regularity(const NormalFormSet& A) { return SetAnalysis(A).report().reg; }
inline int regularity_via_cohomology(const NormalFormSet& A) {
    return SetAnalysis(A).report().reg_cohomology;
}
inline bool is_cm(const NormalFormSet& A) { return SetAnalysis(A).report().cm; }
inline Classification classification(const NormalFormSet& A) {
    const AnalysisReport r = SetAnalysis(A).report();
    return {r.D, r.last_step, r.smooth, r.cm};
}
inline BoundsRecord bounds_suite(const NormalFormSet& A) {
    return SetAnalysis(A).report().bounds;
}
inline CmSpecialCheck cm_special_check(const NormalFormSet& A) {
    return SetAnalysis(A).report().cm_special;
}

// Decomposition of sA at a single level, without requiring n >= 4.
inline StructureDecomposition structure_decomposition(const NormalFormSet& A, int s) {
    const NumericalSemigroup sg1 =
        NumericalSemigroup::from_generators(detail::positive_part(A.elements()));
    const NumericalSemigroup sg2 = NumericalSemigroup::from_generators(
        detail::positive_part(A.reflected().elements()));
    const SumsetTable table(A, s);
    return detail::decompose(table, s, sg1.small_part(), sg2.small_part(),
                             sg1.conductor(), sg2.conductor());
}

} // namespace sumreg
