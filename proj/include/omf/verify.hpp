#pragma once

// Standalone re-checking of finished or partial orbit matrices.  The checks
// recompute every condition from scratch so they can vet matrices produced
// by the search, read from disk, or transcribed by hand.

#include <string>

#include "omf/design.hpp"
#include "omf/kernel.hpp"

namespace omf {

struct Violation {
    std::string condition;  // "row-sum", "row-quadratic", "pair", "column-sum",
                            // "dual-integrality", "entry-range", "shape"
    int i = -1;             // row index, -1 when not row-specific
    int j = -1;             // second row or column index, -1 when unused
    long long lhs = 0;
    long long rhs = 0;
};

namespace detail {

inline void check_shape(const PartialOrbitMatrix& m, std::vector<Violation>& out) {
    int s = m.depth();
    if (static_cast<int>(m.row_lens.size()) != s) {
        out.push_back(Violation{"shape", -1, -1, static_cast<long long>(m.row_lens.size()),
                                static_cast<long long>(s)});
        return;
    }
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(m.rows[i].size()) != m.dist.num_point_orbits())
            out.push_back(Violation{"shape", i, -1,
                                    static_cast<long long>(m.rows[i].size()),
                                    static_cast<long long>(m.dist.num_point_orbits())});
    }
}

inline void check_rows(const PartialOrbitMatrix& m, std::vector<Violation>& out) {
    int s = m.depth();
    const std::vector<int>& omega = m.dist.point_sizes;
    for (int i = 0; i < s; ++i) {
        const Row& r = m.rows[i];
        int W = m.row_lens[i];
        long long sum = 0;
        for (int c = 0; c < m.dist.num_point_orbits(); ++c) {
            Entry e = r[c];
            long long cap = std::min<long long>(omega[c], m.params.k);
            if (e < 0 || e > cap)
                out.push_back(Violation{"entry-range", i, c, e, cap});
            sum += e;
        }
        if (sum != m.params.k)
            out.push_back(Violation{"row-sum", i, -1, sum, m.params.k});
        long long q = row_quadratic(r, m.dist, W);
        long long qt = row_quadratic_target(m.params, m.dist, W);
        if (q != qt) out.push_back(Violation{"row-quadratic", i, -1, q, qt});
        if (!dual_integrality_ok(r, m.dist, W)) {
            for (int c = 0; c < m.dist.num_point_orbits(); ++c)
                if ((static_cast<long long>(W) * r[c]) % omega[c] != 0)
                    out.push_back(Violation{"dual-integrality", i, c,
                                            static_cast<long long>(W) * r[c],
                                            omega[c]});
        }
    }
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            long long p = pair_product(m.rows[i], m.rows[j], m.dist, m.row_lens[j]);
            long long pt = pair_product_target(m.params, m.dist, m.row_lens[j]);
            if (p != pt) out.push_back(Violation{"pair", i, j, p, pt});
        }
}

inline void check_columns(const PartialOrbitMatrix& m, bool complete,
                          std::vector<Violation>& out) {
    for (int c = 0; c < m.dist.num_point_orbits(); ++c) {
        long long sum = 0;
        for (int i = 0; i < m.depth(); ++i)
            sum += static_cast<long long>(m.row_lens[i]) * m.rows[i][c];
        long long cap = static_cast<long long>(m.params.k) * m.dist.point_sizes[c];
        if (sum > cap || (complete && sum != cap))
            out.push_back(Violation{"column-sum", -1, c, sum, cap});
    }
}

}  // namespace detail

// Every condition a finished orbit matrix must satisfy; empty result means
// the matrix is valid.
inline std::vector<Violation> verify_complete(const PartialOrbitMatrix& m) {
    std::vector<Violation> out;
    detail::check_shape(m, out);
    if (!out.empty()) return out;
    if (!m.complete()) {
        out.push_back(Violation{"shape", -1, -1, static_cast<long long>(m.depth()),
                                static_cast<long long>(m.dist.num_block_orbits())});
        return out;
    }
    detail::check_rows(m, out);
    detail::check_columns(m, true, out);
    return out;
}

// Same conditions with column sums only bounded, for matrices still under
// construction.
inline std::vector<Violation> verify_partial(const PartialOrbitMatrix& m) {
    std::vector<Violation> out;
    detail::check_shape(m, out);
    if (!out.empty()) return out;
    detail::check_rows(m, out);
    detail::check_columns(m, false, out);
    return out;
}

// Orbit matrix of the dual design: entry (r, i) becomes Omega_i * gamma_ir /
// omega_r, which dual integrality keeps integral.  Applying it twice returns
// the original matrix.
inline PartialOrbitMatrix transpose_dual(const PartialOrbitMatrix& m) {
    if (!m.complete())
        throw std::invalid_argument("transpose dual needs a complete matrix");
    PartialOrbitMatrix d;
    d.params = m.params;
    d.dist = make_distribution(m.params, m.dist.block_sizes, m.dist.point_sizes);
    d.row_lens = m.dist.point_sizes;
    d.rows.assign(m.dist.num_point_orbits(), Row(m.dist.num_block_orbits(), 0));
    for (int i = 0; i < m.dist.num_block_orbits(); ++i)
        for (int r = 0; r < m.dist.num_point_orbits(); ++r) {
            long long v = static_cast<long long>(m.row_lens[i]) * m.rows[i][r];
            d.rows[r][i] = static_cast<Entry>(v / m.dist.point_sizes[r]);
        }
    return d;
}

}  // namespace omf
