#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Isomorphism-class key: the smallest upper-triangle bit string (column
/// order (0,1),(0,2),(1,2),(0,3),...) reachable by relabelling. Packed into
/// 64 bits, so it exists for n <= 11.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// position -> original vertex for the canonical relabelling.
std::vector<int> canonical_labeling(const Graph& g);

/// g relabelled so that vertex k is canonical_labeling(g)[k].
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Relabels g: vertex perm[k] of g becomes vertex k.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace distspec
