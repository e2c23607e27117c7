#include "distspec/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace distspec {

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::lower_rho: return "lower-rho";
    case BoundKind::upper_rho: return "upper-rho";
    case BoundKind::lower_de: return "lower-DE";
    case BoundKind::upper_de: return "upper-DE";
    case BoundKind::pair_de: return "pair-DE";
    }
    return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view text)
{
    for (auto k : {BoundKind::lower_rho, BoundKind::upper_rho, BoundKind::lower_de, BoundKind::upper_de,
                   BoundKind::pair_de})
        if (to_string(k) == text) return k;
    return std::nullopt;
}

GraphProfile::GraphProfile(Graph g)
    : graph(std::move(g)), distances(distance_matrix(graph)), d_spectrum(distance_spectrum(distances)),
      a_spectrum(adjacency_spectrum(graph))
{
    n = graph.order();
    m = graph.size();
    diameter = distances.diameter();
    eccentricities = distances.eccentricities();
    parts = bipartition(graph);
    regular = is_regular(graph);
    semiregular = parts && parts->q > 0 && parts->max_a == parts->min_a && parts->max_b == parts->min_b;
    tq_free = is_triangle_and_quadrangle_free(graph);
    complete = 2LL * m == static_cast<long long>(n) * (n - 1);
    complete_bipartite = parts && parts->q > 0 && m == parts->p * parts->q;
    wiener = distances.wiener();
    zagreb_m1 = distspec::zagreb_m1(graph);
    positive = count_positive_d_eigenvalues(d_spectrum, distances);
    least_at_least_minus_two = least_adjacency_eigenvalue_at_least_minus_two(graph, a_spectrum);
}

namespace {

bool is_lower(BoundKind k)
{
    return k == BoundKind::lower_rho || k == BoundKind::lower_de || k == BoundKind::pair_de;
}

double observed_for(const GraphProfile& g, BoundKind k)
{
    if (g.n < 1) return 0.0;
    return (k == BoundKind::lower_rho || k == BoundKind::upper_rho) ? g.rho() : g.energy();
}

BoundCertificate inapplicable(std::string id, BoundKind kind, double observed, std::string reason)
{
    BoundCertificate c;
    c.bound_id = std::move(id);
    c.kind = kind;
    c.observed_value = observed;
    c.reason = std::move(reason);
    return c;
}

BoundCertificate evaluated(std::string id, BoundKind kind, double observed, double bound,
                           std::optional<bool> predicted, bool boundary = false)
{
    BoundCertificate c;
    c.bound_id = std::move(id);
    c.kind = kind;
    c.observed_value = observed;
    if (!std::isfinite(bound)) {
        c.reason = "bound expression is undefined (negative radicand)";
        return c;
    }
    c.applicable = true;
    c.bound_value = bound;
    c.slack = is_lower(kind) ? observed - bound : bound - observed;
    c.equality_predicted = predicted;
    c.equality_observed = std::abs(c.slack) <= c.tolerance();
    c.boundary = boundary;
    return c;
}

// Shared gates. Each returns an inapplicable certificate or nullopt.
std::optional<BoundCertificate> need_two_vertices(const GraphProfile& g, const std::string& id, BoundKind kind)
{
    if (g.n < 2) return inapplicable(id, kind, observed_for(g, kind), "needs at least two vertices");
    return std::nullopt;
}

std::optional<BoundCertificate> need_bipartite(const GraphProfile& g, const std::string& id, BoundKind kind)
{
    if (auto c = need_two_vertices(g, id, kind)) return c;
    if (!g.parts) return inapplicable(id, kind, observed_for(g, kind), "graph is not bipartite");
    return std::nullopt;
}

std::optional<BoundCertificate> need_diameter_at_most_two(const GraphProfile& g, const std::string& id,
                                                          BoundKind kind)
{
    if (auto c = need_two_vertices(g, id, kind)) return c;
    if (g.diameter > 2) return inapplicable(id, kind, observed_for(g, kind), "diameter exceeds two");
    return std::nullopt;
}

double sum_squared_row_sums(const GraphProfile& g)
{
    double s = 0.0;
    for (long long r : g.distances.row_sums()) s += static_cast<double>(r) * static_cast<double>(r);
    return s;
}

bool regular_diameter_at_most_two(const GraphProfile& g) { return g.regular && g.diameter <= 2; }
bool one_positive(const GraphProfile& g) { return g.positive.count == 1; }

bool all_eccentricities(const GraphProfile& g, int e)
{
    return std::all_of(g.eccentricities.begin(), g.eccentricities.end(), [e](int x) { return x == e; });
}

bool same_side_distances_two(const GraphProfile& g)
{
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.parts->side[i] == g.parts->side[j] && g.distances(i, j) != 2) return false;
    return true;
}

// (semi-regular with every eccentricity three) or complete bipartite
bool bipartite_lower_extremal(const GraphProfile& g)
{
    return g.complete_bipartite || (g.semiregular && all_eccentricities(g, 3));
}

double bipartite_degree_radicand(const GraphProfile& g)
{
    const auto& b = *g.parts;
    const double n = g.n, p = b.p, q = b.q;
    return n * n - 4.0 * p * q + (3.0 * q - 2.0 * b.max_a) * (3.0 * p - 2.0 * b.max_b);
}

double sqrt_or_nan(double x) { return x < 0 ? std::numeric_limits<double>::quiet_NaN() : std::sqrt(x); }

// Even-diameter upper bound in terms of per-side minimum degrees.
double upper_even(double n, double p, double q, double d, double min_a, double min_b)
{
    const double rad = d * d * n * n + 4.0 * min_a * min_b * (d - 2) * (d - 2) - 4.0 * p * q * (2 * d - 1) -
                       4.0 * (d - 1) * (d - 2) * (p * min_a + q * min_b);
    return d / 2.0 * (n - 1.0 - d / 2.0) + 0.5 * sqrt_or_nan(rad);
}

double upper_odd(double n, double p, double q, double d, double min_a, double min_b)
{
    const double rad = (d - 1) * (d - 1) * n * n + 4.0 * min_a * min_b * (d - 1) * (d - 1) +
                       4.0 * p * q * (2 * d - 1) - 4.0 * d * (d - 1) * (p * min_a + q * min_b);
    return (2.0 * (d - 1) * n + 1.0 - d * d) / 4.0 + 0.5 * sqrt_or_nan(rad);
}

std::optional<BoundCertificate> need_parity(const GraphProfile& g, const std::string& id, bool even)
{
    if (auto c = need_bipartite(g, id, BoundKind::upper_rho)) return c;
    if ((g.diameter % 2 == 0) != even)
        return inapplicable(id, BoundKind::upper_rho, g.rho(),
                            even ? "diameter is odd; the odd-diameter variant applies"
                                 : "diameter is even; the even-diameter variant applies");
    return std::nullopt;
}

// K_n, or regular of diameter two with least adjacency eigenvalue >= -2.
std::pair<bool, bool> complete_or_regular_diam2_above_minus_two(const GraphProfile& g)
{
    if (g.complete) return {true, false};
    if (!(g.regular && g.diameter == 2)) return {false, false};
    return {g.least_at_least_minus_two.holds, g.least_at_least_minus_two.boundary};
}

}  // namespace

BoundCertificate rho_lower_degrees(const GraphProfile& g)
{
    const std::string id = "rho_lower_degrees";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_rho)) return *c;
    const auto deg = g.degrees();
    const double k = 2.0 * g.n - 2.0;
    return evaluated(id, BoundKind::lower_rho, g.rho(), std::sqrt((k - deg.max1) * (k - deg.max2)),
                     regular_diameter_at_most_two(g));
}

BoundCertificate rho_upper_degrees_diameter(const GraphProfile& g)
{
    const std::string id = "rho_upper_degrees_diameter";
    if (auto c = need_two_vertices(g, id, BoundKind::upper_rho)) return *c;
    const auto deg = g.degrees();
    const double d = g.diameter;
    const auto factor = [&](int min_degree) { return d * g.n - d * (d - 1) / 2.0 - 1.0 - min_degree * (d - 1); };
    return evaluated(id, BoundKind::upper_rho, g.rho(), sqrt_or_nan(factor(deg.min1) * factor(deg.min2)),
                     regular_diameter_at_most_two(g));
}

BoundCertificate rho_lower_row_sums(const GraphProfile& g)
{
    const std::string id = "rho_lower_row_sums";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_rho)) return *c;
    return evaluated(id, BoundKind::lower_rho, g.rho(), std::sqrt(sum_squared_row_sums(g) / g.n),
                     g.distances.equal_row_sums());
}

BoundCertificate rho_lower_wiener(const GraphProfile& g)
{
    const std::string id = "rho_lower_wiener";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_rho)) return *c;
    return evaluated(id, BoundKind::lower_rho, g.rho(), 2.0 * static_cast<double>(g.wiener) / g.n,
                     g.distances.equal_row_sums());
}

BoundCertificate rho_lower_edges(const GraphProfile& g)
{
    const std::string id = "rho_lower_edges";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_rho)) return *c;
    return evaluated(id, BoundKind::lower_rho, g.rho(), 2.0 * (g.n - 1) - 2.0 * g.m / g.n,
                     g.complete || (g.regular && g.diameter == 2));
}

BoundCertificate rho_lower_bipartite(const GraphProfile& g)
{
    const std::string id = "rho_lower_bipartite";
    if (auto c = need_bipartite(g, id, BoundKind::lower_rho)) return *c;
    return evaluated(id, BoundKind::lower_rho, g.rho(), g.n - 2.0 + sqrt_or_nan(bipartite_degree_radicand(g)),
                     bipartite_lower_extremal(g));
}

BoundCertificate rho_lower_bipartite_order(const GraphProfile& g)
{
    const std::string id = "rho_lower_bipartite_order";
    if (auto c = need_bipartite(g, id, BoundKind::lower_rho)) return *c;
    const double n = g.n;
    return evaluated(id, BoundKind::lower_rho, g.rho(),
                     n - 2.0 + std::sqrt(n * n - 3.0 * g.parts->p * g.parts->q), g.complete_bipartite);
}

BoundCertificate rho_upper_bipartite_even(const GraphProfile& g)
{
    const std::string id = "rho_upper_bipartite_even";
    if (auto c = need_parity(g, id, true)) return *c;
    const auto& b = *g.parts;
    return evaluated(id, BoundKind::upper_rho, g.rho(), upper_even(g.n, b.p, b.q, g.diameter, b.min_a, b.min_b),
                     g.diameter == 2 && g.complete_bipartite);
}

BoundCertificate rho_upper_bipartite_odd(const GraphProfile& g)
{
    const std::string id = "rho_upper_bipartite_odd";
    if (auto c = need_parity(g, id, false)) return *c;
    const auto& b = *g.parts;
    const bool predicted =
        g.n == 2 || (g.diameter == 3 && g.semiregular && same_side_distances_two(g) && all_eccentricities(g, 3));
    return evaluated(id, BoundKind::upper_rho, g.rho(), upper_odd(g.n, b.p, b.q, g.diameter, b.min_a, b.min_b),
                     predicted);
}

BoundCertificate rho_upper_bipartite_min_degree_even(const GraphProfile& g)
{
    const std::string id = "rho_upper_bipartite_min_degree_even";
    if (auto c = need_parity(g, id, true)) return *c;
    const auto& b = *g.parts;
    const double delta = std::min(b.min_a, b.min_b);
    return evaluated(id, BoundKind::upper_rho, g.rho(), upper_even(g.n, b.p, b.q, g.diameter, delta, delta),
                     std::nullopt);
}

BoundCertificate rho_upper_bipartite_min_degree_odd(const GraphProfile& g)
{
    const std::string id = "rho_upper_bipartite_min_degree_odd";
    if (auto c = need_parity(g, id, false)) return *c;
    const auto& b = *g.parts;
    const double delta = std::min(b.min_a, b.min_b);
    return evaluated(id, BoundKind::upper_rho, g.rho(), upper_odd(g.n, b.p, b.q, g.diameter, delta, delta),
                     std::nullopt);
}

DasBounds rho_bounds_das(const GraphProfile& g)
{
    DasBounds out;
    {
        const std::string id = "rho_upper_das_even";
        if (auto c = need_parity(g, id, true)) {
            out.even = *c;
        } else {
            const double n = g.n, d = g.diameter, pq = double(g.parts->p) * g.parts->q;
            out.even = evaluated(id, BoundKind::upper_rho, g.rho(),
                                 0.5 * (d * (n - 2.0) + sqrt_or_nan(d * d * n * n - 4.0 * pq * (2 * d - 1))),
                                 std::nullopt);
        }
    }
    {
        const std::string id = "rho_upper_das_odd";
        if (auto c = need_parity(g, id, false)) {
            out.odd = *c;
        } else {
            const double n = g.n, d = g.diameter, pq = double(g.parts->p) * g.parts->q;
            const double delta = std::min(g.parts->min_a, g.parts->min_b);
            const double rad = (d - 1) * (d - 1) * n * n + 4.0 * delta * delta * (d - 1) * (d - 1) +
                               4.0 * pq * (2 * d - 1) - 4.0 * d * (d - 1) * delta * n;
            out.odd = evaluated(id, BoundKind::upper_rho, g.rho(), 0.5 * (d - 1) * (n - 2.0) + 0.5 * sqrt_or_nan(rad),
                                std::nullopt);
        }
    }
    return out;
}

BoundCertificate rho_lower_tq_free(const GraphProfile& g)
{
    const std::string id = "rho_lower_tq_free";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_rho)) return *c;
    if (!g.tq_free) return inapplicable(id, BoundKind::lower_rho, g.rho(), "graph contains a triangle or quadrangle");
    const double n = g.n;
    return evaluated(id, BoundKind::lower_rho, g.rho(), 3.0 * (n - 1) - 2.0 * g.m / n - double(g.zagreb_m1) / n,
                     g.distances.equal_row_sums() && g.diameter <= 3);
}

BoundCertificate de_lower_two_rho(const GraphProfile& g)
{
    const std::string id = "de_lower_two_rho";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    return evaluated(id, BoundKind::lower_de, g.energy(), 2.0 * g.rho(), one_positive(g), g.positive.boundary);
}

BoundCertificate de_lower_row_sums(const GraphProfile& g)
{
    const std::string id = "de_lower_row_sums";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    return evaluated(id, BoundKind::lower_de, g.energy(), 2.0 * std::sqrt(sum_squared_row_sums(g) / g.n),
                     one_positive(g) && g.distances.equal_row_sums(), g.positive.boundary);
}

BoundCertificate de_lower_wiener(const GraphProfile& g)
{
    const std::string id = "de_lower_wiener";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    return evaluated(id, BoundKind::lower_de, g.energy(), 4.0 * static_cast<double>(g.wiener) / g.n,
                     one_positive(g) && g.distances.equal_row_sums(), g.positive.boundary);
}

BoundCertificate de_lower_edges(const GraphProfile& g)
{
    const std::string id = "de_lower_edges";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    return evaluated(id, BoundKind::lower_de, g.energy(), 4.0 * (g.n - 1) - 4.0 * g.m / g.n,
                     g.complete || (g.regular && g.diameter == 2 && one_positive(g)),
                     !g.complete && g.positive.boundary);
}

BoundCertificate de_lower_degrees(const GraphProfile& g)
{
    const std::string id = "de_lower_degrees";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    const auto deg = g.degrees();
    const double k = 2.0 * g.n - 2.0;
    const auto [predicted, boundary] = complete_or_regular_diam2_above_minus_two(g);
    return evaluated(id, BoundKind::lower_de, g.energy(), 2.0 * std::sqrt((k - deg.max1) * (k - deg.max2)),
                     predicted, boundary);
}

BoundCertificate de_lower_edges_characterized(const GraphProfile& g)
{
    const std::string id = "de_lower_edges_characterized";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    const auto [predicted, boundary] = complete_or_regular_diam2_above_minus_two(g);
    return evaluated(id, BoundKind::lower_de, g.energy(), 4.0 * (g.n - 1) - 4.0 * g.m / g.n, predicted, boundary);
}

BoundCertificate de_lower_tq_free(const GraphProfile& g)
{
    const std::string id = "de_lower_tq_free";
    if (auto c = need_two_vertices(g, id, BoundKind::lower_de)) return *c;
    if (!g.tq_free) return inapplicable(id, BoundKind::lower_de, g.energy(), "graph contains a triangle or quadrangle");
    const double n = g.n;
    return evaluated(id, BoundKind::lower_de, g.energy(),
                     2.0 * (3.0 * (n - 1) - 2.0 * g.m / n - double(g.zagreb_m1) / n),
                     one_positive(g) && g.distances.equal_row_sums() && g.diameter <= 3, g.positive.boundary);
}

BoundCertificate de_lower_complete_bipartite(const GraphProfile& g)
{
    const std::string id = "de_lower_complete_bipartite";
    if (auto c = need_bipartite(g, id, BoundKind::lower_de)) return *c;
    const double p = g.parts->p, q = g.parts->q;
    return evaluated(id, BoundKind::lower_de, g.energy(), 2.0 * (p + q - 2.0 + std::sqrt(p * p + q * q - p * q)),
                     g.complete_bipartite && 3.0 * p * q <= 4.0 * (g.n - 1));
}

BoundCertificate de_lower_balanced_bipartite(const GraphProfile& g)
{
    const std::string id = "de_lower_balanced_bipartite";
    if (auto c = need_bipartite(g, id, BoundKind::lower_de)) return *c;
    const double n = g.n;
    const double lo = g.n / 2, hi = (g.n + 1) / 2;
    const bool balanced = std::abs(g.parts->p - g.parts->q) <= 1;
    return evaluated(id, BoundKind::lower_de, g.energy(), 2.0 * (n - 2.0 + std::sqrt(n * n - 3.0 * lo * hi)),
                     g.complete_bipartite && balanced && g.n <= 4);
}

BoundCertificate de_lower_bipartite_degrees(const GraphProfile& g)
{
    const std::string id = "de_lower_bipartite_degrees";
    if (auto c = need_bipartite(g, id, BoundKind::lower_de)) return *c;
    return evaluated(id, BoundKind::lower_de, g.energy(),
                     2.0 * (g.n - 2.0) + 2.0 * sqrt_or_nan(bipartite_degree_radicand(g)),
                     bipartite_lower_extremal(g) && one_positive(g), g.positive.boundary);
}

BoundCertificate de_nordhaus_gaddum(const GraphProfile& g)
{
    const std::string id = "de_nordhaus_gaddum";
    if (auto c = need_two_vertices(g, id, BoundKind::pair_de)) return *c;
    Graph co = complement(g.graph);
    if (!is_connected(co))
        return inapplicable(id, BoundKind::pair_de, std::numeric_limits<double>::quiet_NaN(),
                            "complement is disconnected");
    const GraphProfile h(std::move(co));
    const auto extremal = [](const GraphProfile& x) { return x.regular && x.diameter == 2 && one_positive(x); };
    return evaluated(id, BoundKind::pair_de, g.energy() + h.energy(), 6.0 * (g.n - 1), extremal(g) && extremal(h),
                     g.positive.boundary || h.positive.boundary);
}

BoundCertificate de_upper_complement_energy(const GraphProfile& g)
{
    const std::string id = "de_upper_complement_energy";
    if (auto c = need_diameter_at_most_two(g, id, BoundKind::upper_de)) return *c;
    return evaluated(id, BoundKind::upper_de, g.energy(), 2.0 * (g.n - 1) + graph_energy(complement(g.graph)),
                     std::nullopt);
}

BoundCertificate de_upper_koolen_shifted(const GraphProfile& g)
{
    const std::string id = "de_upper_koolen_shifted";
    if (auto c = need_diameter_at_most_two(g, id, BoundKind::upper_de)) return *c;
    const double n = g.n;
    return evaluated(id, BoundKind::upper_de, g.energy(), n / 2.0 * (std::sqrt(n) + 1.0) + 2.0 * (n - 1),
                     std::nullopt);
}

BoundCertificate de_upper_igv_general(const GraphProfile& g)
{
    const std::string id = "de_upper_igv_general";
    if (auto c = need_diameter_at_most_two(g, id, BoundKind::upper_de)) return *c;
    const double n = g.n, m = g.m;
    return evaluated(id, BoundKind::upper_de, g.energy(), std::sqrt(2.0 * n * (2.0 * n * n - 2.0 * n - 3.0 * m)),
                     std::nullopt);
}

BoundCertificate de_upper_igv_diam2(const GraphProfile& g)
{
    const std::string id = "de_upper_igv_diam2";
    if (auto c = need_diameter_at_most_two(g, id, BoundKind::upper_de)) return *c;
    const double n = g.n, m = g.m;
    const double rad = (n - 1) * ((2 * n + m) * (2 * n * n - 4 * m) - 4 * n * n);
    return evaluated(id, BoundKind::upper_de, g.energy(), (2 * n * n - 2 * n - 2 * m) / n + sqrt_or_nan(rad) / n,
                     std::nullopt);
}

std::vector<BoundCertificate> certify_all(const GraphProfile& g)
{
    auto das = rho_bounds_das(g);
    std::vector<BoundCertificate> out{
        rho_lower_degrees(g),
        rho_upper_degrees_diameter(g),
        rho_lower_row_sums(g),
        rho_lower_wiener(g),
        rho_lower_edges(g),
        rho_lower_bipartite(g),
        rho_lower_bipartite_order(g),
        rho_upper_bipartite_even(g),
        rho_upper_bipartite_odd(g),
        rho_upper_bipartite_min_degree_even(g),
        rho_upper_bipartite_min_degree_odd(g),
        std::move(das.even),
        std::move(das.odd),
        rho_lower_tq_free(g),
        de_lower_two_rho(g),
        de_lower_row_sums(g),
        de_lower_wiener(g),
        de_lower_edges(g),
        de_lower_degrees(g),
        de_lower_edges_characterized(g),
        de_lower_tq_free(g),
        de_lower_complete_bipartite(g),
        de_lower_balanced_bipartite(g),
        de_lower_bipartite_degrees(g),
        de_nordhaus_gaddum(g),
        de_upper_complement_energy(g),
        de_upper_koolen_shifted(g),
        de_upper_igv_general(g),
        de_upper_igv_diam2(g),
    };
    std::sort(out.begin(), out.end(),
              [](const BoundCertificate& a, const BoundCertificate& b) { return a.bound_id < b.bound_id; });
    return out;
}

std::vector<BoundCertificate> certify_all(const Graph& g)
{
    return certify_all(GraphProfile(g));
}

}  // namespace distspec
