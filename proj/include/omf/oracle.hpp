#pragma once

// Independent cross-checks for the search kernel.  Everything here takes
// the slow, obvious route on purpose: exact rational arithmetic instead of
// the scaled integer kernel, odometer enumeration instead of the pruned
// type search, and explicit small designs built from difference sets whose
// quotient matrices the main code must reproduce.

#include <boost/rational.hpp>

#include "omf/design.hpp"
#include "omf/row_types.hpp"

namespace omf {

using Rat = boost::rational<long long>;

struct Incidence {
    int v = 0;
    std::vector<std::vector<int>> blocks;  // sorted point lists
};

// Development of a difference set: block i is {d + i mod v}.
inline Incidence from_difference_set(int v, const std::vector<int>& base) {
    Incidence inc;
    inc.v = v;
    for (int i = 0; i < v; ++i) {
        std::vector<int> b;
        for (int d : base) b.push_back((d + i) % v);
        std::sort(b.begin(), b.end());
        inc.blocks.push_back(std::move(b));
    }
    return inc;
}

// Checks the 2-design property directly: every point pair lies in exactly
// lambda blocks and every block has k points.
inline bool is_design(const Incidence& inc, const DesignParams& p) {
    if (inc.v != p.v || static_cast<int>(inc.blocks.size()) != p.v) return false;
    for (const std::vector<int>& b : inc.blocks)
        if (static_cast<int>(b.size()) != p.k) return false;
    for (int x = 0; x < p.v; ++x)
        for (int y = x + 1; y < p.v; ++y) {
            int n = 0;
            for (const std::vector<int>& b : inc.blocks) {
                bool hx = std::find(b.begin(), b.end(), x) != b.end();
                bool hy = std::find(b.begin(), b.end(), y) != b.end();
                if (hx && hy) ++n;
            }
            if (n != p.lambda) return false;
        }
    return true;
}

// Cycle decomposition of a permutation given as an image table.
inline std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& img) {
    int n = static_cast<int>(img.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> orb;
        int x = s;
        while (!seen[x]) {
            seen[x] = 1;
            orb.push_back(x);
            x = img[x];
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return orbits;
}

// Orbit matrix of a design under an automorphism given by its action on
// points and blocks: entry (i, r) counts the points of point-orbit r on any
// block of block-orbit i.  Throws if that count is not constant over the
// orbit, i.e. if the permutation is not an automorphism.
inline PartialOrbitMatrix quotient_orbit_matrix(const DesignParams& params,
                                                const Incidence& inc,
                                                const std::vector<int>& point_img,
                                                const std::vector<int>& block_img) {
    std::vector<std::vector<int>> porbs = permutation_orbits(point_img);
    std::vector<std::vector<int>> borbs = permutation_orbits(block_img);
    std::vector<int> psizes, bsizes;
    for (const auto& o : porbs) psizes.push_back(static_cast<int>(o.size()));
    for (const auto& o : borbs) bsizes.push_back(static_cast<int>(o.size()));
    PartialOrbitMatrix m;
    m.params = params;
    m.dist = make_distribution(params, psizes, bsizes);
    m.row_lens = m.dist.block_sizes;
    for (const auto& borb : borbs) {
        Row row(porbs.size(), 0);
        for (std::size_t r = 0; r < porbs.size(); ++r) {
            int common = -1;
            for (int bi : borb) {
                int n = 0;
                for (int pt : porbs[r])
                    if (std::find(inc.blocks[bi].begin(), inc.blocks[bi].end(), pt) !=
                        inc.blocks[bi].end())
                        ++n;
                if (common < 0) common = n;
                if (common != n)
                    throw std::invalid_argument(
                        "orbit intersection is not constant; not an automorphism");
            }
            row[r] = common;
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

// Re-derivation of the row conditions with rational arithmetic and no
// pruning beyond the row-sum cap.  Must agree entry for entry with
// enumerate_types.
inline std::vector<RowType> brute_force_row_types(const DesignParams& params,
                                                  const OrbitDistribution& dist,
                                                  int block_len,
                                                  const std::vector<ClassPin>& pins = {}) {
    std::vector<OrbitClass> classes = dist.point_classes();
    int nc = dist.num_point_orbits();
    std::vector<RowType> out;
    Row cur(nc, 0);
    auto admissible = [&]() {
        long long sum = 0;
        Rat quad(0);
        for (int c = 0; c < nc; ++c) {
            sum += cur[c];
            quad += Rat(block_len, dist.point_sizes[c]) * cur[c] * cur[c];
            Rat d = Rat(block_len, dist.point_sizes[c]) * cur[c];
            if (d.denominator() != 1) return false;
        }
        if (sum != params.k) return false;
        if (quad != Rat(params.lambda) * (block_len - 1) + params.k) return false;
        for (std::size_t ci = 0; ci < classes.size() && ci < pins.size(); ++ci) {
            long long csum = 0;
            for (int c = classes[ci].begin; c < classes[ci].end; ++c) {
                if (pins[ci].cap >= 0 && cur[c] > pins[ci].cap) return false;
                csum += cur[c];
            }
            if (pins[ci].exact_sum >= 0 && csum != pins[ci].exact_sum) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int c, long long sum) -> void {
        if (c == nc) {
            if (admissible()) out.push_back(RowType{cur, block_len});
            return;
        }
        int cls_begin = 0;
        for (const OrbitClass& cls : classes)
            if (c >= cls.begin && c < cls.end) cls_begin = cls.begin;
        int hi = static_cast<int>(std::min<long long>(dist.point_sizes[c], params.k));
        if (c > cls_begin) hi = std::min(hi, static_cast<int>(cur[c - 1]));
        for (int e = hi; e >= 0; --e) {
            if (sum + e > params.k) continue;
            cur[c] = e;
            self(self, c + 1, sum + e);
        }
        cur[c] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const RowType& a, const RowType& b) { return a.entries > b.entries; });
    return out;
}

// Full condition re-check with rational arithmetic, no scaling anywhere.
inline bool rational_verify(const PartialOrbitMatrix& m, bool complete) {
    int s = m.depth();
    int nc = m.dist.num_point_orbits();
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(m.rows[i].size()) != nc) return false;
        long long sum = 0;
        Rat quad(0);
        for (int c = 0; c < nc; ++c) {
            if (m.rows[i][c] < 0 || m.rows[i][c] > std::min<long long>(m.dist.point_sizes[c], m.params.k))
                return false;
            sum += m.rows[i][c];
            quad += Rat(m.row_lens[i], m.dist.point_sizes[c]) * m.rows[i][c] * m.rows[i][c];
            Rat d = Rat(m.row_lens[i], m.dist.point_sizes[c]) * m.rows[i][c];
            if (d.denominator() != 1) return false;
        }
        if (sum != m.params.k) return false;
        if (quad != Rat(m.params.lambda) * (m.row_lens[i] - 1) + m.params.k) return false;
        for (int j = 0; j < i; ++j) {
            Rat pair(0);
            for (int c = 0; c < nc; ++c)
                pair += Rat(m.row_lens[i], m.dist.point_sizes[c]) * m.rows[j][c] *
                        m.rows[i][c];
            if (pair != Rat(m.params.lambda) * m.row_lens[i]) return false;
        }
    }
    for (int c = 0; c < nc; ++c) {
        long long colsum = 0;
        for (int i = 0; i < s; ++i)
            colsum += static_cast<long long>(m.row_lens[i]) * m.rows[i][c];
        long long cap = static_cast<long long>(m.params.k) * m.dist.point_sizes[c];
        if (colsum > cap) return false;
        if (complete && colsum != cap) return false;
    }
    return true;
}

}  // namespace omf
