#include "distspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace distspec {

using nlohmann::json;

CertifiedGraph certify(std::string graph_id, const Graph& g)
{
    const GraphProfile profile(g);
    return {std::move(graph_id), profile.n, profile.m, profile.diameter, certify_all(profile)};
}

std::string format_real(double x)
{
    if (std::isnan(x)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

namespace {

double rounded(double x)
{
    if (std::isnan(x)) return x;
    return std::stod(format_real(x));
}

double snapped_slack(const BoundCertificate& c)
{
    if (std::isnan(c.slack)) return c.slack;
    const double scale = std::max({1.0, std::abs(c.observed_value), std::abs(c.bound_value)});
    return std::abs(c.slack) < 5e-12 * scale ? 0.0 : c.slack;
}

std::string predicted_text(const BoundCertificate& c)
{
    if (!c.equality_predicted) return "unspecified";
    return *c.equality_predicted ? "true" : "false";
}

const char* flag(bool b) { return b ? "true" : "false"; }

json real_or_null(double x)
{
    if (std::isnan(x)) return nullptr;
    return rounded(x);
}

double real_from(const json& j)
{
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

std::string format_slack(const BoundCertificate& c)
{
    return format_real(snapped_slack(c));
}

void write_certificates_csv(std::ostream& out, std::span<const CertifiedGraph> graphs, bool header)
{
    if (header) out << kCertificateCsvHeader << '\n';
    for (const auto& g : graphs)
        for (const auto& c : g.certificates) {
            out << g.graph_id << ',' << g.n << ',' << g.m << ',' << g.diameter << ',' << c.bound_id << ','
                << to_string(c.kind) << ',' << flag(c.applicable) << ',' << format_real(c.bound_value) << ','
                << format_real(c.observed_value) << ',' << format_slack(c) << ',' << predicted_text(c) << ','
                << flag(c.equality_observed) << ',' << flag(c.boundary) << '\n';
        }
}

void write_certificates_json(std::ostream& out, std::span<const CertifiedGraph> graphs)
{
    json rows = json::array();
    for (const auto& g : graphs)
        for (const auto& c : g.certificates) {
            json row = {
                {"graph_id", g.graph_id},
                {"n", g.n},
                {"m", g.m},
                {"diameter", g.diameter},
                {"bound_id", c.bound_id},
                {"kind", std::string(to_string(c.kind))},
                {"applicable", c.applicable},
                {"bound_value", real_or_null(c.bound_value)},
                {"observed_value", real_or_null(c.observed_value)},
                {"slack", real_or_null(snapped_slack(c))},
                {"equality_predicted", c.equality_predicted ? json(*c.equality_predicted) : json(nullptr)},
                {"equality_observed", c.equality_observed},
                {"boundary", c.boundary},
            };
            if (!c.reason.empty()) row["reason"] = c.reason;
            rows.push_back(std::move(row));
        }
    out << rows.dump(2) << '\n';
}

std::vector<CertifiedGraph> read_certificates_json(std::istream& in)
{
    const json rows = json::parse(in);
    if (!rows.is_array()) throw std::invalid_argument("certificate JSON must be an array of rows");
    std::vector<CertifiedGraph> out;
    for (const auto& row : rows) {
        const auto id = row.at("graph_id").get<std::string>();
        if (out.empty() || out.back().graph_id != id)
            out.push_back({id, row.at("n").get<int>(), row.at("m").get<int>(), row.at("diameter").get<int>(), {}});
        BoundCertificate c;
        c.bound_id = row.at("bound_id").get<std::string>();
        const auto kind = parse_bound_kind(row.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("unknown certificate kind in row for " + c.bound_id);
        c.kind = *kind;
        c.applicable = row.at("applicable").get<bool>();
        c.reason = row.value("reason", "");
        c.bound_value = real_from(row.at("bound_value"));
        c.observed_value = real_from(row.at("observed_value"));
        c.slack = real_from(row.at("slack"));
        if (!row.at("equality_predicted").is_null()) c.equality_predicted = row.at("equality_predicted").get<bool>();
        c.equality_observed = row.at("equality_observed").get<bool>();
        c.boundary = row.at("boundary").get<bool>();
        out.back().certificates.push_back(std::move(c));
    }
    return out;
}

}  // namespace distspec
