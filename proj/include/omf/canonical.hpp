#pragma once

// Canonical labeling of (partial) orbit matrices.
//
// Two partial orbit matrices are equivalent when one maps to the other by
// permuting rows inside equal-length row groups and columns inside
// equal-length point-orbit classes.  The canonical representative of a class
// is the lexicographically minimal row-major matrix in the orbit.
//
// The minimality test walks output positions row by row.  Columns start
// partitioned into their orbit classes; placing a row refines the partition
// by entry value, so later rows see only the column symmetry that is still
// unbroken.  Branching happens only on ties, which keeps the test cheap on
// the instance sizes at hand even when a class contains two dozen columns.

#include <cstdint>

#include "omf/design.hpp"

namespace omf {

// Half-open row ranges inside which rows may be permuted.  Search nodes use
// their stage segments; equivalence keys use the equal-length row groups.
using RowSegments = std::vector<std::pair<int, int>>;

inline RowSegments segments_from_lengths(const std::vector<int>& row_lens) {
    RowSegments segs;
    for (int i = 0; i < static_cast<int>(row_lens.size());) {
        int j = i;
        while (j < static_cast<int>(row_lens.size()) && row_lens[j] == row_lens[i]) ++j;
        segs.emplace_back(i, j);
        i = j;
    }
    return segs;
}

namespace detail {

// An ordered partition cell: original column indices occupying a contiguous
// range of output positions.  Cells never cross orbit-class boundaries.
struct ColCell {
    std::vector<int> cols;
};

struct CanonState {
    const std::vector<Row>* rows;
    const RowSegments* segs;
    int nrows = 0;
    int ncols = 0;
    std::vector<char> used;

    // Projection of row r under the current partition: per cell, the entries
    // sorted ascending (the smallest arrangement the cell symmetry allows).
    Row project(const std::vector<ColCell>& cells, int r) const {
        Row out;
        out.reserve(ncols);
        Row tmp;
        for (const ColCell& cell : cells) {
            tmp.clear();
            for (int c : cell.cols) tmp.push_back((*rows)[r][c]);
            std::sort(tmp.begin(), tmp.end());
            out.insert(out.end(), tmp.begin(), tmp.end());
        }
        return out;
    }

    // Splits every cell by the entries of row r, ascending.
    std::vector<ColCell> refine(const std::vector<ColCell>& cells, int r) const {
        std::vector<ColCell> out;
        out.reserve(cells.size());
        for (const ColCell& cell : cells) {
            if (cell.cols.size() == 1) {
                out.push_back(cell);
                continue;
            }
            std::vector<std::pair<Entry, int>> keyed;
            keyed.reserve(cell.cols.size());
            for (int c : cell.cols) keyed.emplace_back((*rows)[r][c], c);
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t i = 0;
            while (i < keyed.size()) {
                std::size_t j = i;
                ColCell sub;
                while (j < keyed.size() && keyed[j].first == keyed[i].first) {
                    sub.cols.push_back(keyed[j].second);
                    ++j;
                }
                out.push_back(std::move(sub));
                i = j;
            }
        }
        return out;
    }

    int segment_of(int pos) const {
        for (std::size_t s = 0; s < segs->size(); ++s)
            if (pos >= (*segs)[s].first && pos < (*segs)[s].second)
                return static_cast<int>(s);
        return -1;
    }

    // True if no relabeling is lexicographically smaller than the input.
    bool min_test(const std::vector<ColCell>& cells, int pos) {
        if (pos == nrows) return true;
        auto [sb, se] = (*segs)[segment_of(pos)];
        Row best;
        std::vector<int> arg;
        for (int r = sb; r < se; ++r) {
            if (used[r]) continue;
            Row p = project(cells, r);
            if (best.empty() || p < best) {
                best = std::move(p);
                arg.assign(1, r);
            } else if (p == best) {
                arg.push_back(r);
            }
        }
        // Trichotomy against the input row: a larger forced row means every
        // labeling below this branch is larger, so nothing here can win.
        const Row& input = (*rows)[pos];
        if (best < input) return false;
        if (input < best) return true;
        for (std::size_t ai = 0; ai < arg.size(); ++ai) {
            int r = arg[ai];
            if (ai > 0 && (*rows)[r] == (*rows)[arg[ai - 1]]) continue;
            used[r] = 1;
            bool ok = min_test(refine(cells, r), pos + 1);
            used[r] = 0;
            if (!ok) return false;
        }
        return true;
    }

    // Branch-and-bound construction of the minimal relabeling.
    void min_form(const std::vector<ColCell>& cells, int pos,
                  std::vector<Row>& current, std::vector<Row>& best_rows) {
        if (pos == nrows) {
            if (best_rows.empty() || current < best_rows) best_rows = current;
            return;
        }
        auto [sb, se] = (*segs)[segment_of(pos)];
        Row best;
        std::vector<int> arg;
        for (int r = sb; r < se; ++r) {
            if (used[r]) continue;
            Row p = project(cells, r);
            if (best.empty() || p < best) {
                best = std::move(p);
                arg.assign(1, r);
            } else if (p == best) {
                arg.push_back(r);
            }
        }
        if (!best_rows.empty()) {
            // current == best_rows prefix so far; compare the forced next row.
            if (best > best_rows[pos]) return;
            if (best < best_rows[pos]) best_rows.clear();
        }
        current.push_back(best);
        for (std::size_t ai = 0; ai < arg.size(); ++ai) {
            int r = arg[ai];
            if (ai > 0 && (*rows)[r] == (*rows)[arg[ai - 1]]) continue;
            used[r] = 1;
            min_form(refine(cells, r), pos + 1, current, best_rows);
            used[r] = 0;
        }
        current.pop_back();
    }
};

inline std::vector<ColCell> initial_cells(const OrbitDistribution& dist) {
    std::vector<ColCell> cells;
    for (const OrbitClass& cls : dist.point_classes()) {
        ColCell cell;
        for (int c = cls.begin; c < cls.end; ++c) cell.cols.push_back(c);
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace detail

// True iff the matrix equals the lexicographically minimal member of its
// equivalence orbit under the given row segments and the column classes.
inline bool is_minimal(const std::vector<Row>& rows, const RowSegments& segs,
                       const OrbitDistribution& dist) {
    if (rows.empty()) return true;
    detail::CanonState st;
    st.rows = &rows;
    st.segs = &segs;
    st.nrows = static_cast<int>(rows.size());
    st.ncols = dist.num_point_orbits();
    st.used.assign(st.nrows, 0);
    return st.min_test(detail::initial_cells(dist), 0);
}

// The minimal member itself.  Idempotent: applying it to its own output
// returns the same matrix.
inline std::vector<Row> minimal_rows(const std::vector<Row>& rows,
                                     const RowSegments& segs,
                                     const OrbitDistribution& dist) {
    if (rows.empty()) return rows;
    detail::CanonState st;
    st.rows = &rows;
    st.segs = &segs;
    st.nrows = static_cast<int>(rows.size());
    st.ncols = dist.num_point_orbits();
    st.used.assign(st.nrows, 0);
    std::vector<Row> current, best;
    current.reserve(rows.size());
    st.min_form(detail::initial_cells(dist), 0, current, best);
    return best;
}

inline uint64_t fnv1a64(const void* data, std::size_t n, uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t hash_rows(const std::vector<Row>& rows) {
    uint64_t h = 0xcbf29ce484222325ULL;
    uint32_t dims[2] = {static_cast<uint32_t>(rows.size()),
                        rows.empty() ? 0u : static_cast<uint32_t>(rows[0].size())};
    h = fnv1a64(dims, sizeof dims, h);
    for (const Row& r : rows)
        for (Entry e : r) {
            int32_t v = e;
            h = fnv1a64(&v, sizeof v, h);
        }
    return h;
}

// Identifier of an equivalence class: the canonical matrix plus a hash of it.
struct EquivalenceClassKey {
    std::vector<Row> canonical_rows;
    uint64_t hash = 0;
};

inline bool operator==(const EquivalenceClassKey& a, const EquivalenceClassKey& b) {
    return a.hash == b.hash && a.canonical_rows == b.canonical_rows;
}

inline bool operator<(const EquivalenceClassKey& a, const EquivalenceClassKey& b) {
    if (a.canonical_rows != b.canonical_rows) return a.canonical_rows < b.canonical_rows;
    return a.hash < b.hash;
}

// Canonical form of a partial matrix under the row-group convention (rows
// permute within equal block-orbit-length groups).
inline PartialOrbitMatrix canonical_form(const PartialOrbitMatrix& m) {
    PartialOrbitMatrix out = m;
    out.rows = minimal_rows(m.rows, segments_from_lengths(m.row_lens), m.dist);
    return out;
}

inline EquivalenceClassKey equivalence_key(const PartialOrbitMatrix& m) {
    EquivalenceClassKey key;
    key.canonical_rows = minimal_rows(m.rows, segments_from_lengths(m.row_lens), m.dist);
    key.hash = hash_rows(key.canonical_rows);
    return key;
}

}  // namespace omf
