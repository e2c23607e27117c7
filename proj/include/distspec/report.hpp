#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "distspec/bounds.hpp"

namespace distspec {

/// Certificates for one graph together with the per-row graph columns.
struct CertifiedGraph {
    std::string graph_id;
    int n = 0;
    int m = 0;
    int diameter = 0;
    std::vector<BoundCertificate> certificates;

    friend bool operator==(const CertifiedGraph&, const CertifiedGraph&) = default;
};

CertifiedGraph certify(std::string graph_id, const Graph& g);

inline constexpr const char* kCertificateCsvHeader =
    "graph_id,n,m,diameter,bound_id,kind,applicable,bound_value,observed_value,slack,"
    "equality_predicted,equality_observed,boundary";

/// 12 significant digits; NaN prints as an empty field.
std::string format_real(double x);

/// Slack printed at the scale of the observed value, so differences below the
/// printed precision of observed_value show as 0.
std::string format_slack(const BoundCertificate& c);

void write_certificates_csv(std::ostream& out, std::span<const CertifiedGraph> graphs, bool header = true);
void write_certificates_json(std::ostream& out, std::span<const CertifiedGraph> graphs);

/// Inverse of write_certificates_json, with reals at printed precision.
std::vector<CertifiedGraph> read_certificates_json(std::istream& in);

}  // namespace distspec
