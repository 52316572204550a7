#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>

#include "sumreg/analysis.hpp"
#include "sumreg/homogeneous.hpp"
#include "sumreg/normal_form.hpp"
#include "sumreg/numerical_semigroup.hpp"
#include "sumreg/sumset_table.hpp"

namespace sumreg {

// ASCII picture of the semigroup levels. One line per level s, one glyph
// per integer point on the line x + y = s*d:
//   '#' member of sA, 'A' Apery point, 'E' exceptional point, '.' gap.
// Works for any normal-form set (n >= 2); the default window runs to two
// levels past the sumsets regularity, where AP and E are already empty.

struct RenderOptions {
    std::optional<std::pair<int, int>> window; // [lo, hi]; default 0..sigma+2
    bool wide = false;
    int width_limit = 200;
};

inline void render_levels(std::ostream& os, const NormalFormSet& A,
                          const RenderOptions& opt = {}) {
    const int n = A.n();
    const int d = A.d();
    const int cap = d - n + 5;
    const SumsetTable table(A, cap);
    const auto ap = apery_levels(table, cap);
    const auto ex = exceptional_levels(table, cap);

    int lo = 0;
    int hi;
    if (opt.window) {
        lo = opt.window->first;
        hi = opt.window->second;
        if (lo < 0 || hi < lo)
            throw input_error("bad level window");
        if (hi > cap)
            throw window_error("level " + std::to_string(hi) +
                               " beyond computed cap " + std::to_string(cap));
    } else {
        // sigma = max(rhp, ceil((c1+c2)/d)); past sigma+2 nothing is marked.
        const NumericalSemigroup sg1 =
            NumericalSemigroup::from_generators(detail::positive_part(A.elements()));
        const NumericalSemigroup sg2 = NumericalSemigroup::from_generators(
            detail::positive_part(A.reflected().elements()));
        const HilbertPolynomial hp{d, 1 - sg1.genus() - sg2.genus()};
        const int upper = d - n + 2;
        int r = 0;
        for (int s = upper; s >= 0; --s) {
            if (table.size(s) != hp(s)) {
                r = s + 1;
                break;
            }
        }
        int sigma = std::max(r, ceil_div(sg1.conductor() + sg2.conductor(), d));
        for (int s = 0; s <= cap; ++s)
            if (!ap[s].empty() || !ex[s].empty())
                sigma = std::max(sigma, s - 2);
        hi = std::min(sigma + 2, cap);
    }

    const long long width = static_cast<long long>(hi) * d + 1;
    if (width > opt.width_limit && !opt.wide)
        throw input_error("diagram width " + std::to_string(width) + " exceeds " +
                          std::to_string(opt.width_limit) +
                          " columns; pass --wide to render anyway");

    os << "legend: '#' member of sA  'A' Apery point  'E' exceptional point  '.' gap\n";
    for (int s = lo; s <= hi; ++s) {
        std::string line(static_cast<std::size_t>(s) * d + 1, '.');
        for (int x : table.members(s))
            line[static_cast<std::size_t>(x)] = '#';
        for (int x : ap[s])
            line[static_cast<std::size_t>(x)] = 'A';
        for (int x : ex[s])
            line[static_cast<std::size_t>(x)] = 'E';
        os << line << '\n';
    }
}

} // namespace sumreg
