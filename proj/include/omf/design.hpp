#pragma once

// Core types for tactical decompositions (orbit matrices) of symmetric
// 2-(v,k,lambda) designs.  An orbit matrix is a t x t integer matrix
// (gamma_ir) indexed by block orbits (rows) and point orbits (columns);
// gamma_ir counts the points of point orbit r on one block of block orbit i.
//
// All arithmetic in this library is exact.  Fractional coefficients of the
// form Omega/omega are handled by scaling with L = lcm(omega_1..omega_t),
// so every intermediate value is an integer.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace omf {

using Entry = int;
using Row = std::vector<Entry>;

struct DesignParams {
    long long v = 0;
    long long k = 0;
    long long lambda = 0;

    long long order() const { return k - lambda; }

    // 2-(v,k,lambda) admissibility: lambda*(v-1) = k*(k-1).
    bool admissible() const {
        return v > k && k > lambda && lambda > 0 &&
               lambda * (v - 1) == k * (k - 1);
    }
};

inline bool operator==(const DesignParams& a, const DesignParams& b) {
    return a.v == b.v && a.k == b.k && a.lambda == b.lambda;
}

// A contiguous run of equal-size orbits.  Point-orbit classes define which
// columns are interchangeable; block-orbit classes do the same for rows.
struct OrbitClass {
    int begin = 0;  // first index of the run
    int end = 0;    // one past the last index
    int size = 0;   // common orbit length within the run

    int count() const { return end - begin; }
};

namespace detail {

inline std::vector<OrbitClass> runs_of(const std::vector<int>& sizes) {
    std::vector<OrbitClass> out;
    for (int i = 0; i < static_cast<int>(sizes.size());) {
        int j = i;
        while (j < static_cast<int>(sizes.size()) && sizes[j] == sizes[i]) ++j;
        out.push_back(OrbitClass{i, j, sizes[i]});
        i = j;
    }
    return out;
}

}  // namespace detail

// Orbit size distributions for points (columns) and blocks (rows), plus the
// global scaling constant L = lcm over point-orbit sizes.  Sizes are kept in
// non-decreasing order so that equal-size classes are contiguous; fixed
// points/blocks (size 1) come first.
struct OrbitDistribution {
    std::vector<int> point_sizes;  // omega_r, one per column
    std::vector<int> block_sizes;  // Omega_i, one per row of a complete matrix
    long long scale = 1;           // L = lcm(omega_1..omega_t)

    int num_point_orbits() const { return static_cast<int>(point_sizes.size()); }
    int num_block_orbits() const { return static_cast<int>(block_sizes.size()); }

    std::vector<OrbitClass> point_classes() const { return detail::runs_of(point_sizes); }
    std::vector<OrbitClass> block_classes() const { return detail::runs_of(block_sizes); }

    // L/omega_r, an integer by construction.
    long long coeff(int col) const { return scale / point_sizes[col]; }
};

// Builds a distribution, checking that both sides partition v.  Throws
// std::invalid_argument on malformed input; sizes are sorted ascending.
inline OrbitDistribution make_distribution(const DesignParams& params,
                                           std::vector<int> point_sizes,
                                           std::vector<int> block_sizes) {
    if (point_sizes.empty() || block_sizes.empty())
        throw std::invalid_argument("orbit distribution must be nonempty");
    for (int w : point_sizes)
        if (w <= 0) throw std::invalid_argument("point orbit sizes must be positive");
    for (int W : block_sizes)
        if (W <= 0) throw std::invalid_argument("block orbit sizes must be positive");
    long long pv = std::accumulate(point_sizes.begin(), point_sizes.end(), 0LL);
    long long bv = std::accumulate(block_sizes.begin(), block_sizes.end(), 0LL);
    if (pv != params.v)
        throw std::invalid_argument("point orbit sizes sum to " + std::to_string(pv) +
                                    ", expected v = " + std::to_string(params.v));
    if (bv != params.v)
        throw std::invalid_argument("block orbit sizes sum to " + std::to_string(bv) +
                                    ", expected v = " + std::to_string(params.v));
    std::sort(point_sizes.begin(), point_sizes.end());
    std::sort(block_sizes.begin(), block_sizes.end());
    OrbitDistribution dist;
    dist.point_sizes = std::move(point_sizes);
    dist.block_sizes = std::move(block_sizes);
    dist.scale = 1;
    for (int w : dist.point_sizes) dist.scale = std::lcm(dist.scale, static_cast<long long>(w));
    return dist;
}

// Convenience for the common symmetric case (same distribution on both sides).
inline OrbitDistribution make_distribution(const DesignParams& params,
                                           const std::vector<int>& sizes) {
    return make_distribution(params, sizes, sizes);
}

// A row type: the admissible multiset of entries per point-orbit class for a
// row of block-orbit length Omega.  Entries are stored full-width with each
// class segment sorted non-increasing, which is the canonical representative
// of the per-class multisets.
struct RowType {
    Row entries;
    int block_len = 0;  // Omega
};

inline bool operator==(const RowType& a, const RowType& b) {
    return a.block_len == b.block_len && a.entries == b.entries;
}

// A partially built orbit matrix: the first rows.size() rows of a would-be
// t x t orbit matrix.  row_lens[i] is the block-orbit length Omega_i of row i.
struct PartialOrbitMatrix {
    DesignParams params;
    OrbitDistribution dist;
    std::vector<Row> rows;
    std::vector<int> row_lens;

    int depth() const { return static_cast<int>(rows.size()); }

    // A matrix is complete when every block orbit has its row; column
    // equality is then enforced by verification, not by this flag.
    bool complete() const { return depth() == dist.num_block_orbits(); }
};

}  // namespace omf
