#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sumreg/errors.hpp"

namespace sumreg {

// A numerical semigroup <gens> with gcd(gens) = 1: membership, conductor c,
// Frobenius number F = c - 1, gaps and genus. For the full semigroup N we
// take c = 0 and F = -1.
//
// Membership is decided once by dynamic programming up to
// max(gens)*min(gens) + max(gens), which is past every gap; everything else
// is derived from the gap list.
class NumericalSemigroup {
  public:
    static NumericalSemigroup from_generators(std::vector<int> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        while (!gens.empty() && gens.front() <= 0) {
            if (gens.front() < 0)
                throw input_error("generators must be positive");
            gens.erase(gens.begin());
        }
        if (gens.empty())
            throw input_error("need at least one positive generator");
        int g = 0;
        for (int x : gens)
            g = std::gcd(g, x);
        if (g != 1)
            throw input_error("generators must have gcd 1 (gcd is " +
                              std::to_string(g) + ")");
        return NumericalSemigroup(std::move(gens));
    }

    const std::vector<int>& generators() const { return generators_; }
    int conductor() const { return conductor_; }
    int frobenius() const { return conductor_ - 1; }
    const std::vector<int>& gaps() const { return gaps_; }
    int genus() const { return static_cast<int>(gaps_.size()); }

    bool contains(long long x) const {
        if (x < 0)
            return false;
        if (x >= conductor_)
            return true;
        return !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(x));
    }

    // S intersected with [0, c-2]: the small part C_i of the Structure
    // Theorem. Empty when c = 0.
    std::vector<int> small_part() const {
        std::vector<int> out;
        for (int x = 0; x <= conductor_ - 2; ++x)
            if (contains(x))
                out.push_back(x);
        return out;
    }

  private:
    explicit NumericalSemigroup(std::vector<int> gens) : generators_(std::move(gens)) {
        const int lo = generators_.front();
        const int hi = generators_.back();
        const int bound = hi * lo + hi;
        std::vector<std::uint8_t> member(static_cast<std::size_t>(bound) + 1, 0);
        member[0] = 1;
        for (int g : generators_)
            for (int x = g; x <= bound; ++x)
                if (member[x - g])
                    member[x] = 1;
        int frob = -1;
        for (int x = bound; x >= 0; --x) {
            if (!member[x]) {
                frob = x;
                break;
            }
        }
        conductor_ = frob + 1;
        for (int x = 1; x < conductor_; ++x)
            if (!member[x])
                gaps_.push_back(x);
    }

    std::vector<int> generators_;
    int conductor_ = 0;
    std::vector<int> gaps_;
};

// The Apery set of a numerical semigroup with respect to d, indexed by
// residue class: entry(r) is the least member congruent to r mod d. It is a
// complete set of residues; entry(r) - d is never a member, and the largest
// entry is F + d.
class AperyTable {
  public:
    AperyTable(const NumericalSemigroup& sg, int d) : modulus_(d) {
        if (d < 1 || !sg.contains(d))
            throw input_error("Apery modulus must be a positive member");
        entries_.resize(static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r) {
            int x = r;
            while (!sg.contains(x))
                x += d;
            entries_[r] = x;
        }
    }

    int modulus() const { return modulus_; }
    int entry(int residue) const { return entries_[static_cast<std::size_t>(residue)]; }
    const std::vector<int>& entries() const { return entries_; }
    int max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

  private:
    int modulus_;
    std::vector<int> entries_;
};

inline AperyTable apery(const NumericalSemigroup& sg, int d) { return AperyTable(sg, d); }

} // namespace sumreg
