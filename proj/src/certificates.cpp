#include "treelab/certificates.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace treelab {

IntegerMatrix transpose(const IntegerMatrix& m) {
    IntegerMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    }
    return t;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: inner dimensions differ");
    IntegerMatrix p(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& e = a.at(r, k);
            if (e == 0) continue;
            for (int c = 0; c < b.cols; ++c) p.at(r, c) += e * b.at(k, c);
        }
    }
    return p;
}

std::string serialize(const IntegerMatrix& m) {
    std::ostringstream out;
    out << m.rows << ' ' << m.cols << '\n';
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << ' ';
            out << m.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

IntegerMatrix deserialize_matrix(const std::string& text) {
    std::istringstream in(text);
    int rows = 0;
    int cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("deserialize_matrix: bad header");
    IntegerMatrix m(rows, cols);
    for (BigInt& e : m.entries) {
        if (!(in >> e)) throw std::invalid_argument("deserialize_matrix: too few entries");
    }
    std::string tail;
    if (in >> tail) throw std::invalid_argument("deserialize_matrix: trailing data");
    return m;
}

int integer_rank(IntegerMatrix m) {
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        }
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
            }
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

IntegerMatrix incidence_matrix(const Graph& g) {
    const auto edges = g.edges();
    IntegerMatrix b(g.n(), static_cast<int>(edges.size()));
    for (int e = 0; e < b.cols; ++e) {
        b.at(edges[static_cast<std::size_t>(e)].first, e) = 1;
        b.at(edges[static_cast<std::size_t>(e)].second, e) = 1;
    }
    return b;
}

GramCertificate incidence_gram(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("incidence_gram: graph must be connected");
    const int n = g.n();
    const int m = g.m();

    IntegerMatrix x(m + n, m);
    for (int i = 0; i < m; ++i) x.at(i, i) = 1;
    const IntegerMatrix b = incidence_matrix(g);
    for (int v = 0; v < n; ++v) {
        for (int e = 0; e < m; ++e) x.at(m + v, e) = b.at(v, e);
    }

    GramCertificate cert;
    cert.matrix = multiply(x, transpose(x));
    cert.checks.m = m;
    cert.checks.rank = integer_rank(cert.matrix);
    cert.checks.rank_is_m = cert.checks.rank == m;

    // row i < m is edge-vertex n+i of G^triangle, row m+v is vertex v
    const TriangleAugment aug = triangle_augment(g);
    const auto to_aug = [&](int row) { return row < m ? n + row : row - m; };
    bool pattern = true;
    for (int r = 0; r < m + n && pattern; ++r) {
        for (int c = 0; c < m + n && pattern; ++c) {
            if (r == c) continue;
            const bool filled = cert.matrix.at(r, c) != 0;
            if (filled != aug.graph.has_edge(to_aug(r), to_aug(c))) pattern = false;
        }
    }
    cert.checks.pattern_matches = pattern;

    bool indep = vs::count(aug.edge_vertices) == m;
    vs::for_each(aug.edge_vertices, [&](int v) {
        if (aug.graph.adj(v) & aug.edge_vertices) indep = false;
    });
    cert.checks.independent_set = indep;
    return cert;
}

} // namespace treelab
