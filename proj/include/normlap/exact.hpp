#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "normlap/digraph.hpp"

namespace normlap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    IntMatrix transposed() const;
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
bool commutes_with_transpose(const IntMatrix& m);  // M M^T == M^T M
Int determinant(const IntMatrix& m);               // fraction-free elimination

/// Dense matrix over exact rationals (canonical reduced form).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

Rat determinant(const RatMatrix& m);

IntMatrix adjacency(const Digraph& g);
IntMatrix out_degree_diagonal(const Digraph& g);
/// A-Laplacian: out-degree diagonal minus adjacency. Every row sums to 0.
IntMatrix laplacian(const Digraph& g);

/// Exact normality tests (M M^T == M^T M in integer arithmetic).
bool is_normal_laplacian(const Digraph& g);
bool is_normal_adjacency(const Digraph& g);

/// Arc-counting criterion equivalent to Laplacian normality: for each pair
/// u != v, d^-(u,v) - d^+(u,v) must be 0 when uv,vu are both present or both
/// absent, d(u)-d(v) when only uv is present, and d(v)-d(u) when only vu is
/// (d = out-degree).
bool normality_combinatorial(const Digraph& g);

/// Shape of the 4x4 quotient matrix arising from a separation of sizes (y,z)
/// in an order-n eulerian digraph: B = alpha * Q, det(B) = alpha^4 * det_coeff.
struct QuotientProfile {
    RatMatrix Q;        // 4x4
    Rat det_coeff;      // y*z / ((n-y)*(n-z))
};
QuotientProfile quotient_profile(int n, int y, int z);

/// Tail/head incidence matrices with columns in row-major arc order.
/// (D_t)(u,e) = 1 iff u is the tail of arc e; (D_h)(u,e) = 1 iff u is its head.
std::pair<IntMatrix, IntMatrix> incidence_matrices(const Digraph& g);

}  // namespace normlap
