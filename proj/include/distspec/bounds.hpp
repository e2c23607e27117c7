#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distspec/distance.hpp"
#include "distspec/graph.hpp"
#include "distspec/spectral.hpp"

namespace distspec {

enum class BoundKind { lower_rho, upper_rho, lower_de, upper_de, pair_de };

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view text);

/// Relative tolerance for "bound met with equality" and for soundness.
inline constexpr double kEqualityTolerance = 1e-7;

/**
 * One evaluation of an inequality on one graph.
 *
 * slack is observed - bound for lower kinds and bound - observed for upper
 * kinds, so a sound bound always has slack >= -tolerance(). equality_predicted
 * is the structural characterization evaluated on the graph, or empty when no
 * characterization is known for that bound.
 */
struct BoundCertificate {
    std::string bound_id;
    BoundKind kind = BoundKind::lower_rho;
    bool applicable = false;
    std::string reason;
    double bound_value = std::numeric_limits<double>::quiet_NaN();
    double observed_value = std::numeric_limits<double>::quiet_NaN();
    double slack = std::numeric_limits<double>::quiet_NaN();
    std::optional<bool> equality_predicted;
    bool equality_observed = false;
    bool boundary = false;

    double tolerance() const { return kEqualityTolerance * std::max(1.0, std::abs(observed_value)); }
    bool violated() const { return applicable && slack < -tolerance(); }
    bool equality_mismatch() const
    {
        return applicable && equality_predicted && !boundary && *equality_predicted != equality_observed;
    }

    friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// Everything the bounds read from a graph, computed once. Requires a
/// connected graph.
struct GraphProfile {
    explicit GraphProfile(Graph g);

    Graph graph;
    DistanceMatrix distances;
    Spectrum d_spectrum;
    Spectrum a_spectrum;
    int n = 0;
    int m = 0;
    int diameter = 0;
    std::vector<int> eccentricities;
    std::optional<Bipartition> parts;
    bool regular = false;
    bool semiregular = false;
    bool tq_free = false;
    bool complete = false;
    bool complete_bipartite = false;
    long long wiener = 0;
    long long zagreb_m1 = 0;
    SignCount positive;
    LeastEigenvalueCheck least_at_least_minus_two;

    double rho() const { return d_spectrum.largest(); }
    double energy() const { return d_spectrum.abs_sum(); }
    DegreeSummary degrees() const { return degree_summary(graph); }
};

BoundCertificate rho_lower_degrees(const GraphProfile& g);
BoundCertificate rho_upper_degrees_diameter(const GraphProfile& g);
BoundCertificate rho_lower_row_sums(const GraphProfile& g);
BoundCertificate rho_lower_wiener(const GraphProfile& g);
BoundCertificate rho_lower_edges(const GraphProfile& g);
BoundCertificate rho_lower_bipartite(const GraphProfile& g);
/// n - 2 + sqrt(n^2 - 3pq), the part-size-only bipartite lower bound.
BoundCertificate rho_lower_bipartite_order(const GraphProfile& g);
BoundCertificate rho_upper_bipartite_even(const GraphProfile& g);
BoundCertificate rho_upper_bipartite_odd(const GraphProfile& g);
BoundCertificate rho_upper_bipartite_min_degree_even(const GraphProfile& g);
BoundCertificate rho_upper_bipartite_min_degree_odd(const GraphProfile& g);

struct DasBounds {
    BoundCertificate even;
    BoundCertificate odd;
};
/// The earlier bipartite upper bounds the refined ones are compared against.
DasBounds rho_bounds_das(const GraphProfile& g);

BoundCertificate rho_lower_tq_free(const GraphProfile& g);

BoundCertificate de_lower_two_rho(const GraphProfile& g);
BoundCertificate de_lower_row_sums(const GraphProfile& g);
BoundCertificate de_lower_wiener(const GraphProfile& g);
BoundCertificate de_lower_edges(const GraphProfile& g);
BoundCertificate de_lower_degrees(const GraphProfile& g);
BoundCertificate de_lower_edges_characterized(const GraphProfile& g);
BoundCertificate de_lower_tq_free(const GraphProfile& g);
BoundCertificate de_lower_complete_bipartite(const GraphProfile& g);
BoundCertificate de_lower_balanced_bipartite(const GraphProfile& g);
BoundCertificate de_lower_bipartite_degrees(const GraphProfile& g);
BoundCertificate de_nordhaus_gaddum(const GraphProfile& g);
BoundCertificate de_upper_complement_energy(const GraphProfile& g);
BoundCertificate de_upper_koolen_shifted(const GraphProfile& g);
BoundCertificate de_upper_igv_general(const GraphProfile& g);
BoundCertificate de_upper_igv_diam2(const GraphProfile& g);

/// Every bound above, ordered by bound_id.
std::vector<BoundCertificate> certify_all(const GraphProfile& g);
std::vector<BoundCertificate> certify_all(const Graph& g);

}  // namespace distspec
