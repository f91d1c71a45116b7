#include "normlap/digraph.hpp"

#include <stdexcept>
#include <string>

namespace normlap {

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    if (n <= 0) throw std::invalid_argument("digraph order must be positive");
    std::vector<std::uint8_t> adj(static_cast<size_t>(n) * n, 0);
    for (const auto& [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("loops are not allowed: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        adj[static_cast<size_t>(u) * n + v] = 1;
    }
    int m = 0;
    for (auto b : adj) m += b;
    return Digraph(n, std::move(adj), m);
}

Digraph Digraph::from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (arc(u, v)) out.emplace_back(u, v);
    return out;
}

int Digraph::out_degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += arc(u, v);
    return d;
}

int Digraph::in_degree(int u) const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += arc(v, u);
    return d;
}

int Digraph::common_out(int u, int v) const {
    if (u == v) throw std::invalid_argument("common_out requires distinct vertices");
    int c = 0;
    for (int w = 0; w < n_; ++w) c += arc(u, w) && arc(v, w);
    return c;
}

int Digraph::common_in(int u, int v) const {
    if (u == v) throw std::invalid_argument("common_in requires distinct vertices");
    int c = 0;
    for (int w = 0; w < n_; ++w) c += arc(w, u) && arc(w, v);
    return c;
}

namespace {

// Reachable set from vertex 0 following arcs selected by `forward`/`backward`.
std::vector<std::uint8_t> reach(const Digraph& g, bool forward, bool backward) {
    std::vector<std::uint8_t> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < g.n(); ++v) {
            if (seen[v]) continue;
            if ((forward && g.arc(u, v)) || (backward && g.arc(v, u))) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

bool all(const std::vector<std::uint8_t>& s) {
    for (auto b : s)
        if (!b) return false;
    return true;
}

}  // namespace

bool Digraph::is_weakly_connected() const { return all(reach(*this, true, true)); }

bool Digraph::is_strongly_connected() const {
    return all(reach(*this, true, false)) && all(reach(*this, false, true));
}

bool Digraph::is_degree_balanced() const {
    for (int u = 0; u < n_; ++u)
        if (out_degree(u) != in_degree(u)) return false;
    return true;
}

bool Digraph::is_eulerian() const { return is_weakly_connected() && is_degree_balanced(); }

bool Digraph::is_regular() const {
    int dout = out_degree(0), din = in_degree(0);
    for (int u = 1; u < n_; ++u)
        if (out_degree(u) != dout || in_degree(u) != din) return false;
    return true;
}

bool Digraph::is_undirected() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (arc(u, v) != arc(v, u)) return false;
    return true;
}

bool Digraph::is_separation(std::span<const int> Y, std::span<const int> Z) const {
    if (Y.empty() || Z.empty()) return false;
    std::vector<std::uint8_t> inY(n_, 0);
    for (int y : Y) {
        if (y < 0 || y >= n_) throw std::invalid_argument("separation vertex out of range");
        inY[y] = 1;
    }
    for (int z : Z) {
        if (z < 0 || z >= n_) throw std::invalid_argument("separation vertex out of range");
        if (inY[z]) return false;  // not disjoint
    }
    for (int z : Z)
        for (int y : Y)
            if (arc(z, y)) return false;
    return true;
}

bool Digraph::is_separation(std::uint64_t Y, std::uint64_t Z) const {
    if (n_ > 64) throw std::invalid_argument("bitmask separation limited to n <= 64");
    if (Y == 0 || Z == 0 || (Y & Z) != 0) return false;
    for (int z = 0; z < n_; ++z) {
        if (!(Z >> z & 1)) continue;
        for (int y = 0; y < n_; ++y)
            if ((Y >> y & 1) && arc(z, y)) return false;
    }
    return true;
}

Digraph Digraph::converse() const {
    std::vector<Arc> rev;
    rev.reserve(arc_count_);
    for (auto [u, v] : arcs()) rev.emplace_back(v, u);
    return from_arcs(n_, rev);
}

}  // namespace normlap
