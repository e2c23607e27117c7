#include "distspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace distspec {

DisconnectedGraphError::DisconnectedGraphError(int from, int unreached)
    : GraphError("graph is disconnected: vertex " + std::to_string(unreached) +
                 " is unreachable from vertex " + std::to_string(from)),
      from_(from), unreached_(unreached)
{
}

Graph::Graph(int n)
{
    if (n < 1) throw GraphError("graph needs at least one vertex, got n = " + std::to_string(n));
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v / 64] >> (v % 64)) & 1u;
}

void Graph::set(int u, int v, bool on)
{
    const std::uint64_t mu = std::uint64_t{1} << (v % 64);
    const std::uint64_t mv = std::uint64_t{1} << (u % 64);
    std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
    std::uint64_t& wv = bits_[static_cast<std::size_t>(v) * words_ + u / 64];
    const bool was = wu & mu;
    if (was == on) return;
    if (on) {
        wu |= mu;
        wv |= mv;
        ++m_;
    } else {
        wu &= ~mu;
        wv &= ~mv;
        --m_;
    }
}

int Graph::degree(int v) const
{
    check_vertex(v);
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const
{
    check_vertex(v);
    std::vector<int> out;
    const auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has a vertex out of range for n = " + std::to_string(n));
        if (u == v) throw GraphError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g.set(u, v, true);
    }
    return g;
}

Graph complement(const Graph& g)
{
    Graph h(g.n_);
    for (int u = 0; u < g.n_; ++u)
        for (int v = u + 1; v < g.n_; ++v)
            if (!g.adjacent(u, v)) h.set(u, v, true);
    return h;
}

Graph add_edge(const Graph& g, int u, int v)
{
    if (u == v) throw GraphError("cannot add self-loop at " + std::to_string(u));
    if (g.adjacent(u, v))
        throw GraphError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is already an edge");
    Graph h = g;
    h.set(u, v, true);
    return h;
}

Graph delete_edge(const Graph& g, int u, int v)
{
    if (u == v || !g.adjacent(u, v))
        throw GraphError("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
    Graph h = g;
    h.set(u, v, false);
    return h;
}

bool is_connected(const Graph& g)
{
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

DegreeSummary degree_summary(const Graph& g)
{
    if (g.order() < 2) throw GraphError("second-order degrees need at least two vertices");
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    const auto n = deg.size();
    return {deg[n - 1], deg[n - 2], deg[0], deg[1]};
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(n, -1);
    for (int start = 0; start < n; ++start) {
        if (colour[start] >= 0) continue;
        colour[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u)) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    queue.push(v);
                } else if (colour[v] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }

    Bipartition b;
    b.side.resize(n);
    b.min_a = b.min_b = n;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (colour[v] == 0) {
            b.side[v] = Side::a;
            ++b.p;
            b.max_a = std::max(b.max_a, d);
            b.min_a = std::min(b.min_a, d);
        } else {
            b.side[v] = Side::b;
            ++b.q;
            b.max_b = std::max(b.max_b, d);
            b.min_b = std::min(b.min_b, d);
        }
    }
    if (b.q == 0) b.min_b = 0;
    return b;
}

bool is_regular(const Graph& g)
{
    const int d0 = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d0) return false;
    return true;
}

bool is_semiregular(const Graph& g)
{
    const auto b = bipartition(g);
    return b && b->q > 0 && b->max_a == b->min_a && b->max_b == b->min_b;
}

long long zagreb_m1(const Graph& g)
{
    long long s = 0;
    for (int d : g.degrees()) s += static_cast<long long>(d) * d;
    return s;
}

bool is_triangle_and_quadrangle_free(const Graph& g)
{
    // BFS to depth 2 from every root. A triangle or quadrangle through the root
    // shows up as an edge inside the first layer, or as a second-layer vertex
    // reached from two different first-layer vertices.
    const int n = g.order();
    std::vector<int> depth(n);
    for (int root = 0; root < n; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[root] = 0;
        const auto layer1 = g.neighbors(root);
        for (int v : layer1) depth[v] = 1;
        for (int v : layer1)
            for (int w : g.neighbors(v)) {
                if (w == root) continue;
                if (depth[w] == 1 || depth[w] == 2) return false;
                depth[w] = 2;
            }
    }
    return true;
}

}  // namespace distspec
