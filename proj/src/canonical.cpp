#include "distspec/canonical.hpp"

#include <algorithm>

namespace distspec {

namespace {

// Branch and bound for the lexicographically smallest column-order code.
// Column k only depends on the first k+1 positions, so position k can only
// hold a vertex whose column is minimal given the prefix. Twins (vertices with
// the same neighbourhood apart from each other) are interchangeable by an
// automorphism that fixes everything else, so only one of them is tried.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order())
    {
        twin_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                bool same = true;
                for (int w = 0; w < n_ && same; ++w)
                    if (w != u && w != v) same = g.adjacent(u, w) == g.adjacent(v, w);
                twin_[u * n_ + v] = twin_[v * n_ + u] = same;
            }
        perm_.assign(n_, -1);
        used_.assign(n_, 0);
        column_.assign(n_, 0);
        best_column_.assign(n_, 0);
        cols_.assign(static_cast<std::size_t>(n_) * n_, 0);
        tried_.assign(static_cast<std::size_t>(n_) * n_, 0);
    }

    std::vector<int> run()
    {
        search(0, false);
        return best_perm_;
    }

private:
    // below: the prefix is already strictly smaller than the best code.
    void search(int k, bool below)
    {
        if (k == n_) {
            if (!have_best_ || below) {
                have_best_ = true;
                best_perm_ = perm_;
                best_column_ = column_;
            }
            return;
        }
        // Columns extend the parent's by one bit for the vertex placed last.
        std::uint64_t* col = &cols_[static_cast<std::size_t>(k) * n_];
        const std::uint64_t* parent = k > 0 ? &cols_[static_cast<std::size_t>(k - 1) * n_] : nullptr;
        std::uint64_t lowest = ~std::uint64_t{0};
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            col[v] = k > 0 ? (parent[v] << 1) | (g_.adjacent(perm_[k - 1], v) ? 1u : 0u) : 0;
            lowest = std::min(lowest, col[v]);
        }
        bool next_below = below;
        if (have_best_ && !below) {
            if (lowest > best_column_[k]) return;
            next_below = lowest < best_column_[k];
        }
        int* tried = &tried_[static_cast<std::size_t>(k) * n_];
        int tried_count = 0;
        for (int v = 0; v < n_; ++v) {
            if (used_[v] || col[v] != lowest) continue;
            if (std::any_of(tried, tried + tried_count, [&](int u) { return twin_[u * n_ + v]; })) continue;
            tried[tried_count++] = v;
            perm_[k] = v;
            column_[k] = lowest;
            used_[v] = 1;
            // A new best found deeper down resets the comparison for siblings.
            const bool had_best = have_best_;
            search(k + 1, next_below);
            used_[v] = 0;
            if (!had_best || next_below) next_below = false;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<char> twin_;
    std::vector<int> perm_;
    std::vector<char> used_;
    std::vector<std::uint64_t> column_;
    bool have_best_ = false;
    std::vector<int> best_perm_;
    std::vector<std::uint64_t> best_column_;
    std::vector<std::uint64_t> cols_;  // cols_[k * n + v]: column of v at position k
    std::vector<int> tried_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g)
{
    if (g.order() > 64) throw GraphError("canonical labelling supports n <= 64");
    return CanonicalSearch(g).run();
}

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    std::vector<int> position(n);
    for (int k = 0; k < n; ++k) position[perm[k]] = k;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
    return from_edges(n, edges);
}

Graph canonical_graph(const Graph& g)
{
    return relabel(g, canonical_labeling(g));
}

CanonicalForm canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > 11) throw GraphError("packed canonical form supports n <= 11");
    const auto perm = canonical_labeling(g);
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return {n, code};
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_graph(a) == canonical_graph(b);
}

}  // namespace distspec
