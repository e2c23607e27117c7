#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// Side A is {0..p-1}, side B is {p..p+q-1}.
Graph complete_bipartite(int p, int q);
Graph star(int n);

/// Path P_{n-delta+1} on 0..n-delta with delta-1 pendant vertices hung on vertex 0.
Graph broom(int n, int delta);

/// K_{2a} minus the perfect matching {2i, 2i+1}. CP(1) is two isolated vertices.
Graph cocktail_party(int a);

/// Vertices are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);

/// L(g) followed by blocks CP(a_0), CP(a_1), ...; every line-graph vertex
/// {u, v} is joined to all of CP(a_u) and CP(a_v).
Graph generalized_line_graph(const Graph& g, std::span<const int> a);

/// Independent edges with probability p, redrawn until connected.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);

/// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Decodes a Pruefer sequence of length n-2 over {0..n-1}.
Graph tree_from_pruefer(int n, std::span<const int> sequence);

class FamilySpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct NamedGraph {
    std::string name;
    Graph graph;
};

/**
 * Builds a graph from a `family:p1,p2[:seed]` string.
 *
 * Families: complete:n, path:n, cycle:n, kpq:p,q, star:n, broom:n,delta,
 * cp:a, random:n,prob:seed, tree:n:seed, line:<spec>, glg:a0,a1,...@<spec>.
 * The returned name is a short label (K4, P5, C6, K2_3, ...).
 */
NamedGraph parse_family(std::string_view spec);

}  // namespace distspec
