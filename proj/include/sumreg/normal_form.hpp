#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sumreg/errors.hpp"

namespace sumreg {

// A finite set of non-negative integers in normal form:
//   0 = a_0 < a_1 < ... < a_{n-1} = d,  gcd(a_1, ..., a_{n-1}) = 1.
// Immutable after construction; every other module reads its input set
// through this type.
class NormalFormSet {
  public:
    // Validating constructor: the vector must already be in normal form.
    explicit NormalFormSet(std::vector<int> elements)
        : elements_(std::move(elements)) {
        if (elements_.size() < 2)
            throw input_error("normal form set needs at least 2 elements");
        if (elements_.front() != 0)
            throw input_error("normal form set must start at 0");
        int g = 0;
        for (std::size_t i = 1; i < elements_.size(); ++i) {
            if (elements_[i] <= elements_[i - 1])
                throw input_error("elements must be strictly increasing");
            g = std::gcd(g, elements_[i]);
        }
        if (g != 1)
            throw input_error("normal form set must have gcd 1");
    }

    int n() const { return static_cast<int>(elements_.size()); }
    int d() const { return elements_.back(); }
    int operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& elements() const { return elements_; }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool operator==(const NormalFormSet& o) const { return elements_ == o.elements_; }

    // The reflected set d - A, again in normal form.
    NormalFormSet reflected() const {
        std::vector<int> r(elements_.rbegin(), elements_.rend());
        for (int& a : r)
            a = d() - a;
        return NormalFormSet(std::move(r));
    }

  private:
    std::vector<int> elements_;
};

// Translate so the minimum is 0 and divide by the gcd. Accepts any finite
// collection with at least 2 distinct values; idempotent on normal-form
// input. Duplicates are collapsed.
inline NormalFormSet normalize(std::vector<int> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.size() < 2)
        throw input_error("need at least 2 distinct elements");
    if (raw.front() < 0)
        throw input_error("elements must be non-negative");
    const int lo = raw.front();
    int g = 0;
    for (int& a : raw) {
        a -= lo;
        g = std::gcd(g, a);
    }
    for (int& a : raw)
        a /= g;
    return NormalFormSet(std::move(raw));
}

inline bool is_normal_form(const std::vector<int>& raw) {
    if (raw.size() < 2 || raw.front() != 0)
        return false;
    int g = 0;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i] <= raw[i - 1])
            return false;
        g = std::gcd(g, raw[i]);
    }
    return g == 1;
}

} // namespace sumreg
