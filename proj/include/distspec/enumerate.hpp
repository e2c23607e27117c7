#pragma once

#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

inline constexpr int kMaxEnumeratedOrder = 8;
inline constexpr int kMaxEnumeratedTreeOrder = 9;

/// One representative per isomorphism class, connected or not, 1 <= n <= 8.
/// Representatives are in canonical labelling, sorted by canonical form.
std::vector<Graph> all_graphs(int n);

/// Connected classes only, 2 <= n <= 8.
std::vector<Graph> all_connected_graphs(int n);

/// Unlabelled trees, 2 <= n <= 9.
std::vector<Graph> all_trees(int n);

}  // namespace distspec
