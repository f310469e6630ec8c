#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "axisrep/hypergraph.hpp"

namespace axisrep {

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

/// All ell-element subsets of {1..d}, each sorted, in lexicographic order.
inline std::vector<std::vector<int>> all_axis_subsets(int d, int ell) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == ell) {
            out.push_back(cur);
            return;
        }
        for (int a = next; a <= d; ++a) {
            if (d - a + 1 < ell - static_cast<int>(cur.size())) break;
            cur.push_back(a);
            self(self, a + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// ════════════════════════════════════════════════════════════════════
//  PartLabeling
// ════════════════════════════════════════════════════════════════════

/// Bijection from hypergraph parts to ell-element subsets of {1..d}: the
/// set of free coordinates of the subspaces in each part. Requires
/// d >= 2 and 1 <= ell <= d-1, hence part count C(d, ell).
struct PartLabeling {
    int d = 0;
    int ell = 0;
    std::vector<std::vector<int>> free_sets;  // [part] -> sorted 1-based axes

    /// Part i maps to the i-th ell-subset in lexicographic order.
    /// For ell = 1 this is part i <-> {i+1} (parts 0-based, axes 1-based).
    static PartLabeling canonical(int d, int ell) {
        return from_free_sets(d, ell, all_axis_subsets(d, ell));
    }

    static PartLabeling from_free_sets(int d, int ell, std::vector<std::vector<int>> sets) {
        if (d < 2) throw validation_error("labeling requires dimension d >= 2");
        if (ell < 1 || ell > d - 1)
            throw validation_error("labeling requires 1 <= ell <= d-1");
        const long long k = binomial(d, ell);
        if (static_cast<long long>(sets.size()) != k)
            throw validation_error("labeling must assign all " + std::to_string(k) +
                                   " axis subsets, got " + std::to_string(sets.size()));
        std::vector<std::vector<int>> sorted = sets;
        for (auto& s : sorted) {
            if (static_cast<int>(s.size()) != ell)
                throw validation_error("labeling entry is not an ell-subset");
            if (!std::is_sorted(s.begin(), s.end()))
                throw validation_error("labeling entry is not sorted");
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw validation_error("labeling entry has repeated axes");
            if (s.front() < 1 || s.back() > d)
                throw validation_error("labeling axis out of range 1..d");
        }
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw validation_error("labeling assigns one axis subset to two parts");
        PartLabeling lab;
        lab.d = d;
        lab.ell = ell;
        lab.free_sets = std::move(sets);
        return lab;
    }

    int part_count() const { return static_cast<int>(free_sets.size()); }

    const std::vector<int>& free_set(int part) const { return free_sets.at(part); }

    /// Is `axis` (1-based) a free coordinate of `part`?
    bool is_free(int part, int axis) const {
        const auto& s = free_sets.at(part);
        return std::binary_search(s.begin(), s.end(), axis);
    }

    /// Axes of {1..d} outside the part's free set, ascending.
    std::vector<int> fixed_axes(int part) const {
        std::vector<int> out;
        out.reserve(d - ell);
        for (int a = 1; a <= d; ++a)
            if (!is_free(part, a)) out.push_back(a);
        return out;
    }

    /// Parts whose free set contains `axis`: removing them cuts every path
    /// that could carry the axis across the hypergraph.
    std::vector<int> parts_sharing_axis(int axis) const {
        std::vector<int> out;
        for (int p = 0; p < part_count(); ++p)
            if (is_free(p, axis)) out.push_back(p);
        return out;
    }

    friend bool operator==(const PartLabeling&, const PartLabeling&) = default;
};

}  // namespace axisrep
