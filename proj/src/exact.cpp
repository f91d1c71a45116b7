#include "normlap/exact.hpp"

#include <stdexcept>

namespace normlap {

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in mul");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in add");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in sub");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

bool commutes_with_transpose(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    IntMatrix t = m.transposed();
    return mul(m, t) == mul(t, m);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; divisions are exact.
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    int n = m.rows();
    RatMatrix a = m;
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (a.at(r, k) != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
            det = -det;
        }
        det *= a.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

IntMatrix adjacency(const Digraph& g) {
    IntMatrix a(g.n(), g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (g.arc(u, v)) a.at(u, v) = 1;
    return a;
}

IntMatrix out_degree_diagonal(const Digraph& g) {
    IntMatrix d(g.n(), g.n());
    for (int u = 0; u < g.n(); ++u) d.at(u, u) = g.out_degree(u);
    return d;
}

IntMatrix laplacian(const Digraph& g) {
    IntMatrix l(g.n(), g.n());
    for (int u = 0; u < g.n(); ++u) {
        l.at(u, u) = g.out_degree(u);
        for (int v = 0; v < g.n(); ++v)
            if (g.arc(u, v)) l.at(u, v) = -1;
    }
    return l;
}

bool is_normal_laplacian(const Digraph& g) { return commutes_with_transpose(laplacian(g)); }

bool is_normal_adjacency(const Digraph& g) { return commutes_with_transpose(adjacency(g)); }

bool normality_combinatorial(const Digraph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int delta = g.common_in(u, v) - g.common_out(u, v);
            bool uv = g.arc(u, v), vu = g.arc(v, u);
            int expected = 0;
            if (uv && !vu)
                expected = g.out_degree(u) - g.out_degree(v);
            else if (vu && !uv)
                expected = g.out_degree(v) - g.out_degree(u);
            if (delta != expected) return false;
        }
    return true;
}

QuotientProfile quotient_profile(int n, int y, int z) {
    if (y < 1 || z < 1 || y + z > n)
        throw std::invalid_argument("quotient_profile requires y,z >= 1 and y+z <= n");
    RatMatrix q(4, 4);
    Rat yr(y), zr(z);
    Rat nz(n - z), ny(n - y);
    q.at(0, 2) = 1;
    q.at(1, 2) = 1 - yr / nz;
    q.at(1, 3) = yr / nz;
    q.at(2, 0) = zr / ny;
    q.at(2, 1) = 1 - zr / ny;
    q.at(3, 1) = 1;
    return QuotientProfile{q, yr * zr / (ny * nz)};
}

std::pair<IntMatrix, IntMatrix> incidence_matrices(const Digraph& g) {
    auto arcs = g.arcs();
    IntMatrix dt(g.n(), static_cast<int>(arcs.size()));
    IntMatrix dh(g.n(), static_cast<int>(arcs.size()));
    for (int e = 0; e < static_cast<int>(arcs.size()); ++e) {
        dt.at(arcs[e].first, e) = 1;
        dh.at(arcs[e].second, e) = 1;
    }
    return {std::move(dt), std::move(dh)};
}

}  // namespace normlap
