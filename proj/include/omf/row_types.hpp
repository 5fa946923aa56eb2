#pragma once

// Enumeration of admissible row types.
//
// A row of block-orbit length Omega is determined up to column relabeling by
// the multiset of entries it places on each point-orbit class.  A multiset
// qualifies as a type when it satisfies the row sum (R1), the row quadratic
// condition (R2 with i = j), the entry bound gamma <= min(omega, k) and dual
// integrality.  Searches instantiate concrete rows from types, so the
// enumeration must be exhaustive; an empty result is a legitimate
// infeasibility signal.

#include "omf/design.hpp"
#include "omf/kernel.hpp"

namespace omf {

// Optional per-class restrictions: a cap on individual entries and/or an
// exact sum over the class (e.g. "no fixed point on these blocks" is cap 0,
// "exactly one fixed point" is cap 1 with sum 1).
struct ClassPin {
    int cap = -1;        // max entry value, -1 = unconstrained
    int exact_sum = -1;  // required sum over the class, -1 = unconstrained
};

struct TypeQuery {
    DesignParams params;
    OrbitDistribution dist;
    int block_len = 0;              // Omega of the prospective rows
    std::vector<ClassPin> pins;     // one per point class, may be empty
};

namespace detail {

struct TypeEnumState {
    const TypeQuery* q;
    std::vector<OrbitClass> classes;
    std::vector<RowType>* out;
    Row current;
    long long sum = 0;     // running sum of entries
    long long quad = 0;    // running scaled quadratic sum
    long long quad_target = 0;
};

// Largest admissible entry for a class: bounded by the orbit size, by k, by
// the pin cap, and stepped to satisfy omega | Omega*gamma.
inline int entry_step(const TypeQuery& q, int omega) {
    long long g = std::gcd(static_cast<long long>(q.block_len), static_cast<long long>(omega));
    return static_cast<int>(omega / g);
}

inline void enum_class(TypeEnumState& st, std::size_t ci, int slot, int prev_entry,
                       long long class_sum);

inline void enum_next_class(TypeEnumState& st, std::size_t ci) {
    if (ci == st.classes.size()) {
        if (st.sum == st.q->params.k && st.quad == st.quad_target)
            st.out->push_back(RowType{st.current, st.q->block_len});
        return;
    }
    const OrbitClass& cls = st.classes[ci];
    int cap = std::min<long long>(cls.size, st.q->params.k);
    if (ci < st.q->pins.size() && st.q->pins[ci].cap >= 0)
        cap = std::min(cap, st.q->pins[ci].cap);
    enum_class(st, ci, cls.begin, cap, 0);
}

inline void enum_class(TypeEnumState& st, std::size_t ci, int slot, int prev_entry,
                       long long class_sum) {
    const OrbitClass& cls = st.classes[ci];
    const TypeQuery& q = *st.q;
    if (slot == cls.end) {
        if (ci < q.pins.size() && q.pins[ci].exact_sum >= 0 &&
            class_sum != q.pins[ci].exact_sum)
            return;
        enum_next_class(st, ci + 1);
        return;
    }
    int step = entry_step(q, cls.size);
    long long coeff = (q.dist.scale / cls.size) * q.block_len;
    // Non-increasing within the class keeps one representative per multiset;
    // trying large values first yields descending lexicographic output.
    for (int e = (prev_entry / step) * step; e >= 0; e -= step) {
        long long nsum = st.sum + e;
        if (nsum > q.params.k) continue;
        long long nquad = st.quad + coeff * e * e;
        if (nquad > st.quad_target) continue;
        // Remaining slots (this class non-increasing, later classes free).
        long long max_rest = static_cast<long long>(e) * (cls.end - slot - 1);
        for (std::size_t cj = ci + 1; cj < st.classes.size(); ++cj) {
            int rc = std::min<long long>(st.classes[cj].size, q.params.k);
            if (cj < q.pins.size() && q.pins[cj].cap >= 0)
                rc = std::min(rc, q.pins[cj].cap);
            max_rest += static_cast<long long>(rc) * st.classes[cj].count();
        }
        if (nsum + max_rest < q.params.k) break;  // even max entries fall short
        st.current[slot] = static_cast<Entry>(e);
        st.sum = nsum;
        st.quad = nquad;
        enum_class(st, ci, slot + 1, e, class_sum + e);
        st.sum -= e;
        st.quad -= coeff * e * e;
        st.current[slot] = 0;
    }
}

}  // namespace detail

// All admissible row types for the query, sorted by descending lexicographic
// entry vector (classes in distribution order, entries non-increasing within
// each class).  Deterministic; empty means no row of this shape can exist.
inline std::vector<RowType> enumerate_types(const TypeQuery& q) {
    if (q.block_len <= 0) throw std::invalid_argument("block orbit length must be positive");
    std::vector<RowType> out;
    detail::TypeEnumState st;
    st.q = &q;
    st.classes = q.dist.point_classes();
    st.out = &out;
    st.current.assign(q.dist.num_point_orbits(), 0);
    st.quad_target = row_quadratic_target(q.params, q.dist, q.block_len);
    detail::enum_next_class(st, 0);
    return out;
}

// Types available to fixed blocks (block orbit length 1).
inline std::vector<RowType> fixed_block_types(const DesignParams& params,
                                              const OrbitDistribution& dist) {
    TypeQuery q;
    q.params = params;
    q.dist = dist;
    q.block_len = 1;
    return enumerate_types(q);
}

}  // namespace omf
