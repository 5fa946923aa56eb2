#pragma once

// Plain-text storage for orbit matrices.  A file holds one matrix:
//
//   #121 16 2
//   #omega: 1 1 1 1 13 13 13 13 13 13 13 13 13
//   #Omega: 1 1 1 1 13 13 13 13 13 13 13 13 13
//   3 3 3 3 1 0 0 1 0 0 1 0 1
//   ...
//
// The omega line lists every point-orbit size, the Omega line every
// block-orbit size of the full distribution, both ascending; the data lines
// are the rows present, which may stop short of a complete matrix.  The
// writer emits exactly this shape, so write/read round-trips are identical
// byte for byte.

#include <fstream>
#include <sstream>
#include <string>

#include "omf/design.hpp"

namespace omf {

inline void write_matrix(std::ostream& os, const PartialOrbitMatrix& m) {
    os << '#' << m.params.v << ' ' << m.params.k << ' ' << m.params.lambda << '\n';
    os << "#omega:";
    for (int w : m.dist.point_sizes) os << ' ' << w;
    os << '\n';
    os << "#Omega:";
    for (int W : m.dist.block_sizes) os << ' ' << W;
    os << '\n';
    for (const Row& r : m.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) os << ' ';
            os << r[c];
        }
        os << '\n';
    }
}

inline void write_matrix_file(const std::string& path, const PartialOrbitMatrix& m) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_matrix(os, m);
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::istringstream is(s);
    std::vector<int> out;
    int x;
    while (is >> x) out.push_back(x);
    std::string rest;
    if (is.bad() || (is.clear(), is >> rest))
        throw std::runtime_error("malformed " + what + " line");
    return out;
}

}  // namespace detail

inline PartialOrbitMatrix read_matrix(std::istream& is, const std::string& name = "matrix") {
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error(name + ": " + msg);
    };
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#')
        throw fail("missing parameter line");
    std::vector<int> pkl = detail::parse_int_list(line.substr(1), "parameter");
    if (pkl.size() != 3) throw fail("parameter line needs v k lambda");
    DesignParams params{pkl[0], pkl[1], pkl[2]};
    if (!std::getline(is, line) || line.rfind("#omega:", 0) != 0)
        throw fail("missing #omega line");
    std::vector<int> omega = detail::parse_int_list(line.substr(7), "#omega");
    if (!std::getline(is, line) || line.rfind("#Omega:", 0) != 0)
        throw fail("missing #Omega line");
    std::vector<int> Omega = detail::parse_int_list(line.substr(7), "#Omega");
    if (!std::is_sorted(omega.begin(), omega.end()) ||
        !std::is_sorted(Omega.begin(), Omega.end()))
        throw fail("orbit sizes must be ascending");

    PartialOrbitMatrix m;
    m.params = params;
    m.dist = make_distribution(params, omega, Omega);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<int> vals = detail::parse_int_list(line, "row");
        if (vals.size() != omega.size())
            throw fail("row " + std::to_string(m.rows.size() + 1) + " has " +
                       std::to_string(vals.size()) + " entries, expected " +
                       std::to_string(omega.size()));
        m.rows.push_back(Row(vals.begin(), vals.end()));
    }
    if (static_cast<int>(m.rows.size()) > m.dist.num_block_orbits())
        throw fail("more rows than block orbits");
    m.row_lens.assign(Omega.begin(), Omega.begin() + m.rows.size());
    return m;
}

inline PartialOrbitMatrix read_matrix_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    return read_matrix(is, path);
}

}  // namespace omf
