#pragma once

// Finite group tables for the composite automorphism candidates of a
// 2-(121,16,2) design: cyclic, dihedral and the Frobenius group of order 21.
// Everything is computed from the multiplication table, which is small
// enough here (order at most 35) that brute force is the clearest tool:
// subgroup lattices come from closures of generator pairs, orbit lengths
// from coset actions, fixed points from conjugacy into the stabilizer.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace omf {

struct Group {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b], identity is element 0

    int inverse(int a) const {
        for (int b = 0; b < order; ++b)
            if (mul[a][b] == 0) return b;
        throw std::logic_error("element without inverse");
    }

    int element_order(int a) const {
        int x = a, n = 1;
        while (x != 0) {
            x = mul[x][a];
            ++n;
        }
        return n;
    }
};

inline Group cyclic_group(int n) {
    Group g;
    g.name = "Z" + std::to_string(n);
    g.order = n;
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    return g;
}

// Dihedral group of order 2n: rotations r^i and reflections r^i s with
// s r s = r^-1.  Element r^i s^e is encoded as i + n*e.
inline Group dihedral_group(int n) {
    Group g;
    g.name = "D" + std::to_string(2 * n);
    g.order = 2 * n;
    g.mul.assign(2 * n, std::vector<int>(2 * n));
    for (int e = 0; e < 2; ++e)
        for (int i = 0; i < n; ++i)
            for (int f = 0; f < 2; ++f)
                for (int j = 0; j < n; ++j) {
                    int a = i + n * e, b = j + n * f;
                    int k = e == 0 ? (i + j) % n : ((i - j) % n + n) % n;
                    g.mul[a][b] = k + n * ((e + f) % 2);
                }
    return g;
}

// Frobenius group of order 21: generators a of order 7, b of order 3 with
// b a b^-1 = a^2.  Element a^i b^j is encoded as i + 7*j.
inline Group frobenius_group_21() {
    Group g;
    g.name = "F21";
    g.order = 21;
    g.mul.assign(21, std::vector<int>(21));
    int pow2[3] = {1, 2, 4};  // 2^j mod 7
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 7; ++i)
            for (int l = 0; l < 3; ++l)
                for (int k = 0; k < 7; ++k)
                    g.mul[i + 7 * j][k + 7 * l] =
                        (i + k * pow2[j]) % 7 + 7 * ((j + l) % 3);
    return g;
}

inline Group group_by_name(const std::string& name) {
    if (name == "Z10") return cyclic_group(10);
    if (name == "D10") return dihedral_group(5);
    if (name == "Z14") return cyclic_group(14);
    if (name == "D14") return dihedral_group(7);
    if (name == "Z15") return cyclic_group(15);
    if (name == "Z21") return cyclic_group(21);
    if (name == "F21" || name == "Frob21") return frobenius_group_21();
    if (name == "Z35") return cyclic_group(35);
    throw std::invalid_argument("unknown group: " + name);
}

inline std::vector<Group> group_catalog() {
    return {cyclic_group(10),  dihedral_group(5), cyclic_group(14),
            dihedral_group(7), cyclic_group(15),  cyclic_group(21),
            frobenius_group_21(), cyclic_group(35)};
}

inline std::vector<int> closure(const Group& g, std::vector<int> seed) {
    std::set<int> elems(seed.begin(), seed.end());
    elems.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(elems.begin(), elems.end());
        for (int a : cur)
            for (int b : cur)
                if (elems.insert(g.mul[a][b]).second) grew = true;
    }
    return std::vector<int>(elems.begin(), elems.end());
}

// All subgroups, as sorted element lists.  Every subgroup of the groups
// handled here is generated by at most two elements, so closing all pairs
// is exhaustive.
inline std::vector<std::vector<int>> subgroups(const Group& g) {
    std::set<std::vector<int>> found;
    found.insert(closure(g, {}));
    for (int a = 0; a < g.order; ++a) {
        found.insert(closure(g, {a}));
        for (int b = a + 1; b < g.order; ++b) found.insert(closure(g, {a, b}));
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

inline std::vector<int> conjugate_subgroup(const Group& g, const std::vector<int>& H,
                                           int x) {
    std::set<int> out;
    int xi = g.inverse(x);
    for (int h : H) out.insert(g.mul[g.mul[xi][h]][x]);
    return std::vector<int>(out.begin(), out.end());
}

// Subgroups grouped into conjugacy classes; each class is a list of
// subgroups, classes sorted by subgroup size then by representative.
inline std::vector<std::vector<std::vector<int>>> subgroup_classes(const Group& g) {
    std::vector<std::vector<int>> subs = subgroups(g);
    std::vector<std::vector<std::vector<int>>> classes;
    std::set<std::vector<int>> seen;
    for (const std::vector<int>& H : subs) {
        if (seen.count(H)) continue;
        std::vector<std::vector<int>> cls;
        std::set<std::vector<int>> members;
        for (int x = 0; x < g.order; ++x) members.insert(conjugate_subgroup(g, H, x));
        for (const std::vector<int>& K : members) {
            cls.push_back(K);
            seen.insert(K);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Number of cosets Hy fixed by right multiplication with x, i.e. with
// y x y^-1 in H.
inline int fixed_cosets(const Group& g, const std::vector<int>& H, int x) {
    std::set<int> Hs(H.begin(), H.end());
    int cnt = 0;
    for (int y = 0; y < g.order; ++y) {
        int yx = g.mul[y][x];
        if (Hs.count(g.mul[yx][g.inverse(y)])) ++cnt;
    }
    return cnt / static_cast<int>(H.size());
}

}  // namespace omf
