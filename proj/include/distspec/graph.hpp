#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace distspec {

using Edge = std::pair<int, int>;

/// Raised when a graph is built or edited in violation of its preconditions.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by metric operations that need a connected graph.
class DisconnectedGraphError : public GraphError {
public:
    DisconnectedGraphError(int from, int unreached);

    int from() const noexcept { return from_; }
    int unreached() const noexcept { return unreached_; }

private:
    int from_;
    int unreached_;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is kept as one packed bit row per vertex. Instances are immutable;
 * the edit operations return modified copies.
 */
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<int> neighbors(int v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    std::span<const std::uint64_t> row(int v) const noexcept
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    template <typename Scalar = int>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const
    {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
            Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n_, n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) a(u, v) = a(v, u) = Scalar(1);
        return a;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph from_edges(int n, std::span<const Edge> edges);
    friend Graph complement(const Graph& g);
    friend Graph add_edge(const Graph& g, int u, int v);
    friend Graph delete_edge(const Graph& g, int u, int v);

    void set(int u, int v, bool on);
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph from_edges(int n, std::span<const Edge> edges);
inline Graph from_edges(int n, std::initializer_list<Edge> edges)
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g);
Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

/// Maximum/second maximum and minimum/second minimum degree. The second
/// extremes are taken over the remaining n-1 degrees after removing one
/// occurrence of the extreme, so ties give max2 == max1.
struct DegreeSummary {
    int max1 = 0;
    int max2 = 0;
    int min1 = 0;
    int min2 = 0;
};

DegreeSummary degree_summary(const Graph& g);

enum class Side : std::uint8_t { a, b };

struct Bipartition {
    std::vector<Side> side;
    int p = 0;  // |A|, vertex 0 is always in A
    int q = 0;  // |B|
    int max_a = 0;
    int max_b = 0;
    int min_a = 0;
    int min_b = 0;
};

/// BFS two-colouring; nullopt iff the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_regular(const Graph& g);
bool is_semiregular(const Graph& g);

/// First Zagreb index, the sum of squared degrees.
long long zagreb_m1(const Graph& g);

/// True iff g has no cycle of length 3 or 4.
bool is_triangle_and_quadrangle_free(const Graph& g);

}  // namespace distspec
