#include "distspec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "distspec/canonical.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"

namespace distspec {

std::optional<ScanFilter> parse_scan_filter(std::string_view text)
{
    if (text.empty() || text == "none") return ScanFilter::none;
    if (text == "bipartite") return ScanFilter::bipartite;
    if (text == "tqfree") return ScanFilter::tqfree;
    if (text == "regular") return ScanFilter::regular;
    return std::nullopt;
}

bool passes_filter(const Graph& g, ScanFilter filter)
{
    switch (filter) {
    case ScanFilter::none: return true;
    case ScanFilter::bipartite: return bipartition(g).has_value();
    case ScanFilter::tqfree: return is_triangle_and_quadrangle_free(g);
    case ScanFilter::regular: return is_regular(g);
    }
    return false;
}

ScanSummary summarize(std::span<const CertifiedGraph> graphs)
{
    ScanSummary s;
    for (const auto& g : graphs) {
        ++s.graphs;
        for (const auto& c : g.certificates) {
            ++s.certificates;
            if (!c.applicable) continue;
            ++s.applicable;
            if (c.boundary) ++s.boundary_flags;
            if (c.violated()) {
                ++s.violations;
                s.violation_sites.push_back(g.graph_id + ":" + c.bound_id);
            }
            if (c.equality_mismatch()) {
                ++s.equality_mismatches;
                s.mismatch_sites.push_back(g.graph_id + ":" + c.bound_id);
            }
        }
    }
    return s;
}

void write_scan_summary(std::ostream& out, const ScanSummary& s)
{
    out << "# graphs=" << s.graphs << " certificates=" << s.certificates << " applicable=" << s.applicable
        << " violations=" << s.violations << " equality_mismatches=" << s.equality_mismatches
        << " boundary_flags=" << s.boundary_flags << '\n';
    for (const auto& site : s.violation_sites) out << "# violation " << site << '\n';
    for (const auto& site : s.mismatch_sites) out << "# mismatch " << site << '\n';
}

std::optional<ExtremalClaim> parse_extremal_claim(std::string_view text)
{
    for (auto c : {ExtremalClaim::min_rho_bipartite, ExtremalClaim::max_rho_bipartite, ExtremalClaim::max_rho_tree,
                   ExtremalClaim::max_rho_tree_max_degree, ExtremalClaim::min_de_connected})
        if (to_string(c) == text) return c;
    return std::nullopt;
}

std::string_view to_string(ExtremalClaim claim)
{
    switch (claim) {
    case ExtremalClaim::min_rho_bipartite: return "min-rho-bipartite";
    case ExtremalClaim::max_rho_bipartite: return "max-rho-bipartite";
    case ExtremalClaim::max_rho_tree: return "max-rho-tree";
    case ExtremalClaim::max_rho_tree_max_degree: return "max-rho-tree-degree";
    case ExtremalClaim::min_de_connected: return "min-de-connected";
    }
    return "unknown";
}

namespace {

int max_degree_of(const Graph& g)
{
    const auto d = g.degrees();
    return *std::max_element(d.begin(), d.end());
}

struct ClaimSetup {
    std::vector<Graph> candidates;
    Graph expected;
    bool minimize;
    bool energy;
};

ClaimSetup setup(ExtremalClaim claim, int n, std::optional<int> max_degree)
{
    switch (claim) {
    case ExtremalClaim::min_rho_bipartite:
    case ExtremalClaim::max_rho_bipartite: {
        std::vector<Graph> bip;
        for (auto& g : all_connected_graphs(n))
            if (bipartition(g)) bip.push_back(std::move(g));
        if (claim == ExtremalClaim::min_rho_bipartite)
            return {std::move(bip), complete_bipartite(n / 2, (n + 1) / 2), true, false};
        return {std::move(bip), path(n), false, false};
    }
    case ExtremalClaim::max_rho_tree: return {all_trees(n), path(n), false, false};
    case ExtremalClaim::max_rho_tree_max_degree: {
        if (!max_degree) throw std::invalid_argument("max-rho-tree-degree needs a maximum degree");
        std::vector<Graph> trees;
        for (auto& t : all_trees(n))
            if (max_degree_of(t) == *max_degree) trees.push_back(std::move(t));
        return {std::move(trees), broom(n, *max_degree), false, false};
    }
    case ExtremalClaim::min_de_connected: return {all_connected_graphs(n), complete(n), true, true};
    }
    throw std::invalid_argument("unknown extremal claim");
}

}  // namespace

ExtremalReport verify_extremal(ExtremalClaim claim, int n, std::optional<int> max_degree)
{
    const auto start = std::chrono::steady_clock::now();
    ExtremalReport r;
    r.claim_id = std::string(to_string(claim));
    r.n = n;
    if (claim == ExtremalClaim::max_rho_tree_max_degree) r.max_degree = max_degree;

    const auto s = setup(claim, n, max_degree);
    r.candidate_count = static_cast<long long>(s.candidates.size());
    r.expected_graphs.push_back(encode_graph6(canonical_graph(s.expected)));

    std::vector<double> values;
    values.reserve(s.candidates.size());
    for (const auto& g : s.candidates) {
        const auto spectrum = distance_spectrum(g);
        values.push_back(s.energy ? spectrum.abs_sum() : spectrum.largest());
    }
    if (!values.empty()) {
        r.extremal_value = s.minimize ? *std::min_element(values.begin(), values.end())
                                      : *std::max_element(values.begin(), values.end());
        const double tol = 1e-9 * std::max(1.0, std::abs(r.extremal_value));
        for (std::size_t k = 0; k < values.size(); ++k)
            if (std::abs(values[k] - r.extremal_value) <= tol)
                r.extremal_graphs.push_back(encode_graph6(canonical_graph(s.candidates[k])));
        std::sort(r.extremal_graphs.begin(), r.extremal_graphs.end());
    }
    r.claim_verified = r.extremal_graphs == r.expected_graphs;
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void write_extremal_report(std::ostream& out, const ExtremalReport& r)
{
    out << "claim: " << r.claim_id << '\n' << "n: " << r.n << '\n';
    if (r.max_degree) out << "max_degree: " << *r.max_degree << '\n';
    out << "candidates: " << r.candidate_count << '\n'
        << "extremal_value: " << format_real(r.extremal_value) << '\n'
        << "extremal_graphs:";
    for (const auto& g : r.extremal_graphs) out << ' ' << g;
    out << "\nexpected_graphs:";
    for (const auto& g : r.expected_graphs) out << ' ' << g;
    out << "\nclaim_verified: " << (r.claim_verified ? "true" : "false") << '\n'
        << "runtime_ms: " << format_real(r.runtime_ms) << '\n';
}

void write_extremal_report_json(std::ostream& out, const ExtremalReport& r)
{
    nlohmann::json j = {
        {"claim_id", r.claim_id},
        {"n", r.n},
        {"candidate_count", r.candidate_count},
        {"extremal_value", std::stod(format_real(r.extremal_value))},
        {"extremal_graphs", r.extremal_graphs},
        {"expected_graphs", r.expected_graphs},
        {"claim_verified", r.claim_verified},
        {"runtime_ms", r.runtime_ms},
    };
    if (r.max_degree) j["max_degree"] = *r.max_degree;
    out << j.dump(2) << '\n';
}

void write_analysis(std::ostream& out, std::string_view graph_id, const Graph& g)
{
    const GraphProfile p(g);
    out << "graph: " << graph_id << '\n'
        << "graph6: " << encode_graph6(g) << '\n'
        << "n: " << p.n << '\n'
        << "m: " << p.m << '\n'
        << "degrees:";
    for (int d : g.degrees()) out << ' ' << d;
    out << '\n';
    if (p.n >= 2) {
        const auto deg = p.degrees();
        out << "max_degree: " << deg.max1 << " second_max_degree: " << deg.max2 << '\n'
            << "min_degree: " << deg.min1 << " second_min_degree: " << deg.min2 << '\n';
    }
    out << "diameter: " << p.diameter << '\n';
    if (p.parts) {
        const auto& b = *p.parts;
        out << "bipartition: p=" << b.p << " q=" << b.q << " max_a=" << b.max_a << " max_b=" << b.max_b
            << " min_a=" << b.min_a << " min_b=" << b.min_b << '\n';
    } else {
        out << "bipartition: none\n";
    }
    out << "regular: " << (p.regular ? "true" : "false") << '\n'
        << "wiener: " << p.wiener << '\n'
        << "zagreb_m1: " << p.zagreb_m1 << '\n'
        << "distance_spectrum:";
    for (const auto& [value, mult] : p.d_spectrum.clusters()) {
        out << ' ' << format_real(value);
        if (mult > 1) out << "^" << mult;
    }
    out << '\n'
        << "rho: " << format_real(p.rho()) << '\n'
        << "distance_energy: " << format_real(p.energy()) << '\n'
        << "positive_d_eigenvalues: " << p.positive.count << (p.positive.boundary ? " (boundary)" : "") << '\n';
}

}  // namespace distspec
