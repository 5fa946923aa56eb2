#pragma once

// Exact integer constraint kernel for orbit matrices.
//
// A t x t matrix (gamma_ir) with row orbit lengths Omega_i and column orbit
// lengths omega_r is an orbit matrix of a symmetric 2-(v,k,lambda) design iff
//
//   (R1)  sum_r gamma_ir                              = k            for all i
//   (R2)  sum_r (Omega_j/omega_r) gamma_ir gamma_jr   = lambda*Omega_j
//                                                       + delta_ij*(k-lambda)
//   (C1)  sum_i Omega_i gamma_ir                      = k*omega_r    for all r
//   (D)   omega_r divides Omega_i * gamma_ir          for all i, r
//
// The i = j case of (R2) is the row quadratic condition
// sum_r (Omega_i/omega_r) gamma_ir^2 = lambda*(Omega_i - 1) + k.
//
// Every quantity here is scaled by L = lcm(omega) so the arithmetic stays in
// the integers; callers compare against the matching *_target value.  While a
// row is being filled left to right, the partial sums of (R2) can only grow,
// which gives the prefix bound used for pruning.

#include "omf/design.hpp"

namespace omf {

inline bool check_row_sum(const Row& row, const DesignParams& params) {
    long long s = 0;
    for (Entry e : row) s += e;
    return s == params.k;
}

// L * sum_r (Omega/omega_r) * gamma_r^2 for a full-width row.
inline long long row_quadratic(const Row& row, const OrbitDistribution& dist,
                               int block_len) {
    long long s = 0;
    for (int r = 0; r < static_cast<int>(row.size()); ++r)
        s += dist.coeff(r) * row[r] * row[r];
    return s * block_len;
}

// L * (lambda*(Omega-1) + k), the value row_quadratic must attain.
inline long long row_quadratic_target(const DesignParams& params,
                                      const OrbitDistribution& dist,
                                      int block_len) {
    return dist.scale * (params.lambda * (block_len - 1) + params.k);
}

// L * sum_r (Omega_j/omega_r) * gamma_ir * gamma_jr for two distinct rows.
inline long long pair_product(const Row& row_i, const Row& row_j,
                              const OrbitDistribution& dist, int block_len_j) {
    long long s = 0;
    for (int r = 0; r < static_cast<int>(row_i.size()); ++r)
        s += dist.coeff(r) * row_i[r] * row_j[r];
    return s * block_len_j;
}

// L * lambda * Omega_j, the value pair_product must attain for i != j.
inline long long pair_product_target(const DesignParams& params,
                                     const OrbitDistribution& dist,
                                     int block_len_j) {
    return dist.scale * params.lambda * block_len_j;
}

// Prefix form of (R2): the scaled partial sum over the first m columns may
// not exceed L * (lambda*Omega_j + delta*(k-lambda)).  Entries are
// non-negative, so a violated prefix can never recover.
inline bool prefix_bound_ok(const Row& row_i, const Row& row_j, int m,
                            const DesignParams& params,
                            const OrbitDistribution& dist, int block_len_j,
                            bool same_row) {
    long long s = 0;
    for (int r = 0; r < m; ++r)
        s += dist.coeff(r) * row_i[r] * row_j[r];
    long long bound = dist.scale * params.lambda * block_len_j +
                      (same_row ? dist.scale * (params.k - params.lambda) : 0);
    return s * block_len_j <= bound;
}

// (D): transposing an orbit matrix must again yield integer entries
// Omega_i * gamma_ir / omega_r.
inline bool dual_integrality_ok(const Row& row, const OrbitDistribution& dist,
                                int block_len) {
    for (int r = 0; r < static_cast<int>(row.size()); ++r)
        if ((static_cast<long long>(block_len) * row[r]) % dist.point_sizes[r] != 0)
            return false;
    return true;
}

// (C1) for the stacked rows of a partial matrix: every column must satisfy
// sum_i Omega_i gamma_ir <= k*omega_r, with equality when the matrix is
// complete.  No scaling needed; the inequality is already integral.
inline bool column_sums_ok(const std::vector<Row>& rows,
                           const std::vector<int>& row_lens,
                           const DesignParams& params,
                           const OrbitDistribution& dist, bool complete) {
    for (int r = 0; r < dist.num_point_orbits(); ++r) {
        long long s = 0;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            s += static_cast<long long>(row_lens[i]) * rows[i][r];
        long long cap = params.k * dist.point_sizes[r];
        if (complete ? s != cap : s > cap) return false;
    }
    return true;
}

}  // namespace omf
