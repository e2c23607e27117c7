#include "distspec/families.hpp"

#include <charconv>
#include <random>
#include <set>

namespace distspec {

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edges(n, edges);
}

Graph path(int n)
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edges(n, edges);
}

Graph cycle(int n)
{
    if (n < 3) throw GraphError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return from_edges(n, edges);
}

Graph complete_bipartite(int p, int q)
{
    if (p < 1 || q < 1) throw GraphError("complete bipartite graph needs p, q >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < p; ++u)
        for (int v = p; v < p + q; ++v) edges.emplace_back(u, v);
    return from_edges(p + q, edges);
}

Graph star(int n)
{
    if (n < 2) throw GraphError("star needs n >= 2");
    return complete_bipartite(1, n - 1);
}

Graph broom(int n, int delta)
{
    if (delta < 2 || delta > n - 1)
        throw GraphError("broom needs 2 <= delta <= n - 1, got n = " + std::to_string(n) +
                         ", delta = " + std::to_string(delta));
    const int spine = n - delta + 1;
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
    for (int v = spine; v < n; ++v) edges.emplace_back(0, v);
    return from_edges(n, edges);
}

Graph cocktail_party(int a)
{
    if (a < 1) throw GraphError("cocktail party graph needs a >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < 2 * a; ++u)
        for (int v = u + 1; v < 2 * a; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    return from_edges(2 * a, edges);
}

Graph line_graph(const Graph& g)
{
    const auto e = g.edges();
    if (e.empty()) throw GraphError("line graph needs at least one edge");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                e[i].second == e[j].second)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return from_edges(static_cast<int>(e.size()), edges);
}

Graph generalized_line_graph(const Graph& g, std::span<const int> a)
{
    if (static_cast<int>(a.size()) != g.order())
        throw GraphError("generalized line graph needs one multiplicity per vertex");
    const auto e = g.edges();
    if (e.empty()) throw GraphError("generalized line graph needs at least one edge");

    const Graph base = line_graph(g);
    std::vector<int> block_start(g.order());
    int n = static_cast<int>(e.size());
    for (int v = 0; v < g.order(); ++v) {
        if (a[v] < 0) throw GraphError("cocktail party multiplicities must be non-negative");
        block_start[v] = n;
        n += 2 * a[v];
    }

    auto edges = base.edges();
    for (int v = 0; v < g.order(); ++v) {
        const int s = block_start[v];
        for (int x = 0; x < 2 * a[v]; ++x)
            for (int y = x + 1; y < 2 * a[v]; ++y)
                if (x / 2 != y / 2) edges.emplace_back(s + x, s + y);
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int endpoint : {e[i].first, e[i].second})
            for (int x = 0; x < 2 * a[endpoint]; ++x)
                edges.emplace_back(static_cast<int>(i), block_start[endpoint] + x);
    return from_edges(n, edges);
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed)
{
    if (n < 2) throw GraphError("random_connected needs n >= 2");
    if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw GraphError("edge probability must lie in (0, 1]");
    constexpr int kAttempts = 10000;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g = from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw GraphError("no connected sample after " + std::to_string(kAttempts) + " attempts at p = " +
                     std::to_string(edge_prob));
}

Graph tree_from_pruefer(int n, std::span<const int> sequence)
{
    if (n < 2) throw GraphError("a tree code needs n >= 2");
    if (static_cast<int>(sequence.size()) != n - 2) throw GraphError("Pruefer sequence must have length n - 2");
    std::vector<int> remaining(n, 1);
    for (int v : sequence) {
        if (v < 0 || v >= n) throw GraphError("Pruefer entry out of range");
        ++remaining[v];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (remaining[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int v : sequence) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--remaining[v] == 1) leaves.insert(v);
    }
    const int u = *leaves.begin();
    const int w = *std::next(leaves.begin());
    edges.emplace_back(u, w);
    return from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed)
{
    if (n < 2) throw GraphError("random_tree needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (int& c : code) c = pick(rng);
    return tree_from_pruefer(n, code);
}

namespace {

std::vector<long long> parse_numbers(std::string_view text, std::string_view spec)
{
    std::vector<long long> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
            throw FamilySpecError("bad number '" + std::string(token) + "' in family spec '" + std::string(spec) +
                                  "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

double parse_real(std::string_view token, std::string_view spec)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw FamilySpecError("bad real '" + std::string(token) + "' in family spec '" + std::string(spec) + "'");
    return value;
}

void expect_count(const std::vector<long long>& v, std::size_t count, std::string_view spec)
{
    if (v.size() != count)
        throw FamilySpecError("family spec '" + std::string(spec) + "' expects " + std::to_string(count) +
                              " parameter(s)");
}

}  // namespace

NamedGraph parse_family(std::string_view spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw FamilySpecError("family spec '" + std::string(spec) + "' is missing ':'");
    const auto family = spec.substr(0, colon);
    auto rest = spec.substr(colon + 1);

    try {
        if (family == "line") {
            auto inner = parse_family(rest);
            return {"L(" + inner.name + ")", line_graph(inner.graph)};
        }
        if (family == "glg") {
            const auto at = rest.find('@');
            if (at == std::string_view::npos) throw FamilySpecError("glg spec needs 'a0,a1,...@<base spec>'");
            const auto counts = parse_numbers(rest.substr(0, at), spec);
            auto inner = parse_family(rest.substr(at + 1));
            std::vector<int> a(counts.begin(), counts.end());
            return {"GLG(" + inner.name + ")", generalized_line_graph(inner.graph, a)};
        }

        // Optional trailing seed.
        std::uint64_t seed = 0;
        bool has_seed = false;
        if (const auto second = rest.find(':'); second != std::string_view::npos) {
            const auto s = parse_numbers(rest.substr(second + 1), spec);
            expect_count(s, 1, spec);
            seed = static_cast<std::uint64_t>(s[0]);
            has_seed = true;
            rest = rest.substr(0, second);
        }

        if (family == "random") {
            const auto comma = rest.find(',');
            if (comma == std::string_view::npos) throw FamilySpecError("random spec needs 'n,prob[:seed]'");
            const auto n = parse_numbers(rest.substr(0, comma), spec);
            expect_count(n, 1, spec);
            const double p = parse_real(rest.substr(comma + 1), spec);
            return {std::string(spec), random_connected(static_cast<int>(n[0]), p, seed)};
        }

        const auto v = parse_numbers(rest, spec);
        const auto i = [&](std::size_t k) { return static_cast<int>(v[k]); };
        if (family == "tree") {
            expect_count(v, 1, spec);
            return {std::string(spec), random_tree(i(0), seed)};
        }
        if (has_seed) throw FamilySpecError("family '" + std::string(family) + "' takes no seed");
        if (family == "complete") {
            expect_count(v, 1, spec);
            return {"K" + std::to_string(i(0)), complete(i(0))};
        }
        if (family == "path") {
            expect_count(v, 1, spec);
            return {"P" + std::to_string(i(0)), path(i(0))};
        }
        if (family == "cycle") {
            expect_count(v, 1, spec);
            return {"C" + std::to_string(i(0)), cycle(i(0))};
        }
        if (family == "kpq") {
            expect_count(v, 2, spec);
            return {"K" + std::to_string(i(0)) + "_" + std::to_string(i(1)), complete_bipartite(i(0), i(1))};
        }
        if (family == "star") {
            expect_count(v, 1, spec);
            return {"K1_" + std::to_string(i(0) - 1), star(i(0))};
        }
        if (family == "broom") {
            expect_count(v, 2, spec);
            return {"B" + std::to_string(i(0)) + "_" + std::to_string(i(1)), broom(i(0), i(1))};
        }
        if (family == "cp") {
            expect_count(v, 1, spec);
            return {"CP" + std::to_string(i(0)), cocktail_party(i(0))};
        }
    } catch (const GraphError& e) {
        throw FamilySpecError("family spec '" + std::string(spec) + "': " + e.what());
    }
    throw FamilySpecError("unknown family '" + std::string(family) + "'");
}

}  // namespace distspec
