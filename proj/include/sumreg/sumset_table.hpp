#pragma once

#include <cstdint>
#include <vector>

#include "sumreg/errors.hpp"
#include "sumreg/normal_form.hpp"

namespace sumreg {

// Cached s-fold sumsets sA for s = 0..s_cap. Level s is kept as a dense
// membership mask over [0, s*d], since sA is always contained in that
// interval. Levels are built incrementally as (s-1)A + A, which agrees with
// the s-fold definition because 0 is an element of A.
class SumsetTable {
  public:
    SumsetTable(NormalFormSet base, int s_cap) : base_(std::move(base)) {
        if (s_cap < 0)
            throw input_error("s_cap must be non-negative");
        masks_.reserve(static_cast<std::size_t>(s_cap) + 1);
        sizes_.reserve(static_cast<std::size_t>(s_cap) + 1);
        masks_.push_back({1}); // 0A = {0}
        sizes_.push_back(1);
        const int d = base_.d();
        for (int s = 1; s <= s_cap; ++s) {
            const std::vector<std::uint8_t>& prev = masks_.back();
            std::vector<std::uint8_t> cur(static_cast<std::size_t>(s) * d + 1, 0);
            for (int x = 0; x < static_cast<int>(prev.size()); ++x) {
                if (!prev[x])
                    continue;
                for (int a : base_)
                    cur[static_cast<std::size_t>(x) + a] = 1;
            }
            int count = 0;
            for (std::uint8_t m : cur)
                count += m;
            masks_.push_back(std::move(cur));
            sizes_.push_back(count);
        }
    }

    const NormalFormSet& base() const { return base_; }
    int d() const { return base_.d(); }
    int cap() const { return static_cast<int>(masks_.size()) - 1; }

    // Membership of x in sA.
    bool contains(int s, long long x) const {
        check_level(s);
        if (x < 0 || x >= static_cast<long long>(masks_[s].size()))
            return false;
        return masks_[s][static_cast<std::size_t>(x)] != 0;
    }

    // |sA|
    int size(int s) const {
        check_level(s);
        return sizes_[s];
    }

    // sA as a sorted vector.
    std::vector<int> members(int s) const {
        check_level(s);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(sizes_[s]));
        for (int x = 0; x < static_cast<int>(masks_[s].size()); ++x)
            if (masks_[s][x])
                out.push_back(x);
        return out;
    }

  private:
    void check_level(int s) const {
        if (s < 0 || s > cap())
            throw window_error("level " + std::to_string(s) +
                               " beyond table cap " + std::to_string(cap()));
    }

    NormalFormSet base_;
    std::vector<std::vector<std::uint8_t>> masks_;
    std::vector<int> sizes_;
};

inline SumsetTable build_table(const NormalFormSet& base, int s_cap) {
    return SumsetTable(base, s_cap);
}

// The s-fold sumset of A as a sorted vector; 0A = {0}.
inline std::vector<int> fold_sumset(const NormalFormSet& base, int s) {
    if (s < 0)
        throw input_error("fold index must be non-negative");
    return SumsetTable(base, s).members(s);
}

// (|sA| - |(s-1)A|) for s = 0..s_max, with |(-1)A| taken to be 0, so the
// first term is always 1. The sequence stabilizes at d once s exceeds the
// sumsets regularity.
inline std::vector<int> growth_sequence(const NormalFormSet& base, int s_max) {
    SumsetTable table(base, s_max);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s_max) + 1);
    for (int s = 0; s <= s_max; ++s)
        out.push_back(table.size(s) - (s == 0 ? 0 : table.size(s - 1)));
    return out;
}

} // namespace sumreg
