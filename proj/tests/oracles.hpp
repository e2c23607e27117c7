#pragma once

// Independent reference implementations used to check the library. None of
// these share code paths with the implementations they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Core>

#include "distspec/graph.hpp"

namespace oracle {

using distspec::Graph;

/// Cyclic Jacobi rotations; slow but simple and unconditionally convergent.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a)
{
    const Eigen::Index n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30) break;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> values(n);
    for (Eigen::Index i = 0; i < n; ++i) values[i] = a(i, i);
    std::sort(values.rbegin(), values.rend());
    return values;
}

inline constexpr int kUnreachable = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreachable));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Upper triangle in column order under the relabelling position k -> perm[k].
inline std::uint64_t code_under(const Graph& g, const std::vector<int>& perm)
{
    std::uint64_t code = 0;
    const int n = g.order();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

/// Minimum code over all n! relabellings.
inline std::uint64_t brute_canonical_code(const Graph& g)
{
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, code_under(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Automorphism group order by backtracking over partial maps that preserve adjacency.
inline long long automorphism_count(const Graph& g)
{
    const int n = g.order();
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    long long count = 0;
    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
        }
    };
    extend(extend, 0);
    return count;
}

inline long long factorial(int n)
{
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline long long binomial(int n, int k)
{
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

/// Number of labelled connected graphs on n vertices, by the standard recurrence.
inline long long labelled_connected_count(int n)
{
    std::vector<long long> c(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        long long total = 1LL << (k * (k - 1) / 2);
        for (int j = 1; j < k; ++j) total -= binomial(k - 1, j - 1) * c[j] * (1LL << ((k - j) * (k - j - 1) / 2));
        c[k] = total;
    }
    return c[n];
}

/// Bipartite iff no closed walk of odd length: trace(A^k) = 0 for every odd k <= n.
inline bool has_odd_cycle(const Graph& g)
{
    const Eigen::MatrixXd a = g.adjacency_matrix<double>();
    Eigen::MatrixXd power = a;
    const Eigen::MatrixXd a2 = a * a;
    for (int k = 1; k <= g.order(); k += 2) {
        if (power.trace() > 0.5) return true;
        power = power * a2;
    }
    return false;
}

inline bool has_triangle_or_quadrangle(const Graph& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.adjacent(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b || !g.adjacent(b, c)) continue;
                if (g.adjacent(c, a)) return true;
                for (int d = 0; d < n; ++d)
                    if (d != a && d != b && d != c && g.adjacent(c, d) && g.adjacent(d, a)) return true;
            }
        }
    return false;
}

/// Every labelled tree on n vertices via its Pruefer sequence, decoded by the
/// classic O(n^2) smallest-leaf scan.
template <class Fn>
void for_each_labelled_tree(int n, Fn&& fn)
{
    std::vector<int> seq(std::max(0, n - 2), 0);
    for (;;) {
        std::vector<int> degree(n, 1);
        for (int v : seq) ++degree[v];
        std::vector<distspec::Edge> edges;
        for (int v : seq) {
            int leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
            --degree[leaf];
            --degree[v];
        }
        int u = -1, w = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) (u < 0 ? u : w) = v;
        edges.emplace_back(u, w);
        fn(distspec::from_edges(n, edges));

        int k = static_cast<int>(seq.size()) - 1;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) return;
        ++seq[k];
    }
}

inline Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) x(i, j) = x(j, i) = u(rng);
    return x;
}

/// Random graph with each pair present independently; may be disconnected.
inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<distspec::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return distspec::from_edges(n, edges);
}

}  // namespace oracle
