#ifndef TREELAB_CERTIFICATES_HPP
#define TREELAB_CERTIFICATES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "treelab/graph.hpp"

namespace treelab {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> entries; // row-major, rows*cols

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    BigInt& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

IntegerMatrix transpose(const IntegerMatrix& m);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

std::string serialize(const IntegerMatrix& m); // "rows cols" then rows of integers
IntegerMatrix deserialize_matrix(const std::string& text);

// Rank over the rationals by fraction-free (Bareiss) elimination.
int integer_rank(IntegerMatrix m);

// n x m vertex-edge incidence matrix; column order is g.edges().
IntegerMatrix incidence_matrix(const Graph& g);

struct GramChecks {
    bool pattern_matches = false;   // off-diagonal support of M equals E(G^triangle)
    bool rank_is_m = false;         // exact rank of M equals m
    bool independent_set = false;   // edge-vertices independent in G^triangle
    int rank = 0;
    int m = 0;
    bool certified() const { return pattern_matches && rank_is_m && independent_set; }
};

struct GramCertificate {
    // M = X X^T with X = [I_m; B]: row i < m is edge-vertex n+i of
    // triangle_augment(g), row m+v is vertex v.
    IntegerMatrix matrix;
    GramChecks checks;
};

// Certifies mr_+(G^triangle) <= m and alpha(G^triangle) >= m for connected G.
GramCertificate incidence_gram(const Graph& g);

} // namespace treelab

#endif
