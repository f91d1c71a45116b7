#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace normlap {

using Arc = std::pair<int, int>;

/// Loop-free digraph on vertices 0..n-1 with a dense boolean arc relation.
/// A digon (both uv and vu present) plays the role of an undirected edge.
/// Instances are immutable after construction and safe to share across threads.
class Digraph {
public:
    /// Builds a digraph with exactly the listed arcs; duplicates collapse.
    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);
    static Digraph from_arcs(int n, std::initializer_list<Arc> arcs);

    int n() const { return n_; }
    bool arc(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }

    int arc_count() const { return arc_count_; }
    std::vector<Arc> arcs() const;  // row-major order

    int out_degree(int u) const;
    int in_degree(int u) const;

    /// Common out-neighbours |{w : uw, vw in E}|; requires u != v.
    int common_out(int u, int v) const;
    /// Common in-neighbours |{w : wu, wv in E}|; requires u != v.
    int common_in(int u, int v) const;

    bool is_weakly_connected() const;
    bool is_strongly_connected() const;
    /// Weakly connected and in-degree = out-degree at every vertex.
    bool is_eulerian() const;
    /// in-degree = out-degree at every vertex (components need not be connected).
    bool is_degree_balanced() const;
    /// All out-degrees equal and all in-degrees equal.
    bool is_regular() const;
    /// Arc relation symmetric: every arc lies in a digon.
    bool is_undirected() const;

    /// True iff Y, Z are nonempty, disjoint, and no arc runs from Z to Y.
    bool is_separation(std::span<const int> Y, std::span<const int> Z) const;
    /// Bitmask variant; valid for n <= 64.
    bool is_separation(std::uint64_t Y, std::uint64_t Z) const;

    Digraph converse() const;  // all arcs reversed

    bool operator==(const Digraph&) const = default;

private:
    Digraph(int n, std::vector<std::uint8_t> adj, int arc_count)
        : n_(n), adj_(std::move(adj)), arc_count_(arc_count) {}

    int n_ = 0;
    std::vector<std::uint8_t> adj_;  // row-major, adj_[u*n+v] = 1 iff uv is an arc
    int arc_count_ = 0;
};

}  // namespace normlap
