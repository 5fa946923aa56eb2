#pragma once

// Which orbit-length distributions a composite automorphism group can have
// on the 121 points of a biplane of order 14.  Orbits are coset actions of
// the group, so the possible lengths are the subgroup indices; a candidate
// multiset of lengths survives if the fixed-point count of every element of
// prime order lands in the admissible set for that order.
//
// Admissible counts per prime order, for a 2-(121,16,2) design:
//   2 -> 9 or 13, 3 -> 1 or 7, 5 -> 1, 7 -> 2, 11 -> 0, 13 -> 4.
// For orders 5 and 7 the count is forced to a single value and those fixed
// points are fixed by the full automorphism group, so they must appear as
// orbits of length 1 (points_are_global below).

#include <map>
#include <utility>

#include "omf/design.hpp"
#include "omf/groups.hpp"

namespace omf {

struct PrimeFixRule {
    int prime = 0;
    std::vector<int> allowed;
    bool points_are_global = false;
};

inline std::vector<PrimeFixRule> biplane14_fix_rules() {
    return {
        {2, {9, 13}, false}, {3, {1, 7}, false}, {5, {1}, true},
        {7, {2}, true},      {11, {0}, false},   {13, {4}, false},
    };
}

struct FeasibleDistribution {
    std::vector<int> point_sizes;                    // ascending, sums to v
    std::vector<std::pair<int, int>> fixed_points;   // prime order -> count
};

namespace detail {

struct LengthInfo {
    int length = 0;
    std::vector<std::vector<int>> fix;  // [prime index][element index]
};

}  // namespace detail

inline std::vector<FeasibleDistribution> feasible_distributions(
    const Group& g, const std::vector<PrimeFixRule>& rules, int v = 121) {
    // Primes dividing the group order, with all their elements.
    std::vector<const PrimeFixRule*> active;
    std::vector<std::vector<int>> elems;
    for (const PrimeFixRule& r : rules) {
        if (g.order % r.prime != 0) continue;
        std::vector<int> of_order;
        for (int x = 1; x < g.order; ++x)
            if (g.element_order(x) == r.prime) of_order.push_back(x);
        if (of_order.empty()) continue;
        active.push_back(&r);
        elems.push_back(std::move(of_order));
    }

    // One coset action per subgroup conjugacy class.  The groups handled
    // here have at most one class per index, which keeps a length's fixed
    // counts well defined.
    std::vector<detail::LengthInfo> lengths;
    for (const auto& cls : subgroup_classes(g)) {
        const std::vector<int>& H = cls.front();
        detail::LengthInfo info;
        info.length = g.order / static_cast<int>(H.size());
        for (std::size_t pi = 0; pi < active.size(); ++pi) {
            std::vector<int> fx;
            for (int x : elems[pi]) fx.push_back(fixed_cosets(g, H, x));
            info.fix.push_back(std::move(fx));
        }
        for (const detail::LengthInfo& prev : lengths)
            if (prev.length == info.length && prev.fix != info.fix)
                throw std::logic_error(
                    "conflicting coset actions of equal length in " + g.name);
        lengths.push_back(std::move(info));
    }
    std::sort(lengths.begin(), lengths.end(),
              [](const auto& a, const auto& b) { return a.length > b.length; });
    lengths.erase(std::unique(lengths.begin(), lengths.end(),
                              [](const auto& a, const auto& b) {
                                  return a.length == b.length;
                              }),
                  lengths.end());

    std::vector<FeasibleDistribution> out;
    std::vector<int> counts(lengths.size(), 0);
    auto leaf = [&]() {
        FeasibleDistribution fd;
        for (std::size_t li = 0; li < lengths.size(); ++li)
            for (int c = 0; c < counts[li]; ++c)
                fd.point_sizes.push_back(lengths[li].length);
        std::sort(fd.point_sizes.begin(), fd.point_sizes.end());
        for (std::size_t pi = 0; pi < active.size(); ++pi) {
            int common = -1;
            for (std::size_t xi = 0; xi < elems[pi].size(); ++xi) {
                long long total = 0, moving = 0;
                for (std::size_t li = 0; li < lengths.size(); ++li) {
                    long long f = static_cast<long long>(counts[li]) *
                                  lengths[li].fix[pi][xi];
                    total += f;
                    if (lengths[li].length > 1) moving += f;
                }
                bool ok = false;
                for (int a : active[pi]->allowed) ok = ok || (total == a);
                if (!ok) return;
                if (active[pi]->points_are_global && moving != 0) return;
                // Elements of one prime order generate conjugate subgroups
                // here, so the totals agree; report the shared value.
                if (common < 0) common = static_cast<int>(total);
            }
            fd.fixed_points.emplace_back(active[pi]->prime, common);
        }
        out.push_back(std::move(fd));
    };
    // Multisets of lengths summing to v, largest length first.
    auto rec = [&](auto&& self, std::size_t li, int left) -> void {
        if (li == lengths.size()) {
            if (left == 0) leaf();
            return;
        }
        int L = lengths[li].length;
        for (int c = 0; c * L <= left; ++c) {
            counts[li] = c;
            self(self, li + 1, left - c * L);
        }
        counts[li] = 0;
    };
    rec(rec, 0, v);
    std::sort(out.begin(), out.end(),
              [](const FeasibleDistribution& a, const FeasibleDistribution& b) {
                  return a.point_sizes < b.point_sizes;
              });
    return out;
}

}  // namespace omf
