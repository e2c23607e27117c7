#include "distspec/enumerate.hpp"

#include <map>
#include <string>

#include "distspec/canonical.hpp"

namespace distspec {

namespace {

// Extends every class on n-1 vertices by one new vertex with each possible
// neighbourhood and keeps one canonical representative per class.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller)
{
    const int n = smaller.front().order() + 1;
    std::map<std::uint64_t, Graph> classes;
    for (const auto& h : smaller) {
        const auto base = h.edges();
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            auto edges = base;
            for (int v = 0; v < n - 1; ++v)
                if (mask >> v & 1u) edges.emplace_back(v, n - 1);
            const Graph g = from_edges(n, edges);
            const auto perm = canonical_labeling(g);
            std::uint64_t code = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
            if (!classes.contains(code)) classes.emplace(code, relabel(g, perm));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n)
{
    if (n < 1 || n > kMaxEnumeratedOrder)
        throw GraphError("graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedOrder));
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) level = extend_by_vertex(level);
    return level;
}

std::vector<Graph> all_connected_graphs(int n)
{
    if (n < 2 || n > kMaxEnumeratedOrder)
        throw GraphError("connected graph enumeration supports 2 <= n <= " + std::to_string(kMaxEnumeratedOrder));
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_trees(int n)
{
    if (n < 2 || n > kMaxEnumeratedTreeOrder)
        throw GraphError("tree enumeration supports 2 <= n <= " + std::to_string(kMaxEnumeratedTreeOrder));
    std::vector<Graph> level{from_edges(2, {{0, 1}})};
    for (int k = 3; k <= n; ++k) {
        // Every tree on k vertices is a tree on k-1 vertices plus a leaf.
        std::map<std::uint64_t, Graph> classes;
        for (const auto& t : level)
            for (int attach = 0; attach < k - 1; ++attach) {
                auto edges = t.edges();
                edges.emplace_back(attach, k - 1);
                const Graph g = from_edges(k, edges);
                const auto form = canonical_form(g);
                if (!classes.contains(form.code)) classes.emplace(form.code, canonical_graph(g));
            }
        level.clear();
        for (auto& [code, g] : classes) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace distspec
