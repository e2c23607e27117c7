#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distspec/bounds.hpp"
#include "distspec/report.hpp"

namespace distspec {

enum class ScanFilter { none, bipartite, tqfree, regular };

std::optional<ScanFilter> parse_scan_filter(std::string_view text);
bool passes_filter(const Graph& g, ScanFilter filter);

struct ScanSummary {
    int graphs = 0;
    int certificates = 0;
    int applicable = 0;
    int violations = 0;
    int equality_mismatches = 0;
    int boundary_flags = 0;
    /// "graph_id:bound_id" for every violation and mismatch, in input order.
    std::vector<std::string> violation_sites;
    std::vector<std::string> mismatch_sites;

    bool clean() const { return violations == 0 && equality_mismatches == 0; }
};

ScanSummary summarize(std::span<const CertifiedGraph> graphs);
void write_scan_summary(std::ostream& out, const ScanSummary& s);

enum class ExtremalClaim {
    min_rho_bipartite,
    max_rho_bipartite,
    max_rho_tree,
    max_rho_tree_max_degree,
    min_de_connected,
};

std::optional<ExtremalClaim> parse_extremal_claim(std::string_view text);
std::string_view to_string(ExtremalClaim claim);

struct ExtremalReport {
    std::string claim_id;
    int n = 0;
    std::optional<int> max_degree;
    long long candidate_count = 0;
    double extremal_value = 0.0;
    /// Canonical graph6 strings of every candidate attaining the extreme.
    std::vector<std::string> extremal_graphs;
    std::vector<std::string> expected_graphs;
    bool claim_verified = false;
    double runtime_ms = 0.0;
};

/// Exhaustive check of an extremal claim over all candidates on n vertices.
/// max_degree is required for max_rho_tree_max_degree and ignored otherwise.
ExtremalReport verify_extremal(ExtremalClaim claim, int n, std::optional<int> max_degree = std::nullopt);

void write_extremal_report(std::ostream& out, const ExtremalReport& r);
void write_extremal_report_json(std::ostream& out, const ExtremalReport& r);

/// Human-readable invariants and spectrum of one graph.
void write_analysis(std::ostream& out, std::string_view graph_id, const Graph& g);

}  // namespace distspec
