#include "distspec/edge_list.hpp"

#include <charconv>
#include <vector>

namespace distspec {

EdgeListError::EdgeListError(const std::string& what, int line)
    : std::invalid_argument("edge list line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

std::vector<long long> numbers_on(std::string_view line, int line_no)
{
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
        if (ec != std::errc()) throw EdgeListError("expected an integer near '" + std::string(line.substr(i)) + "'", line_no);
        i = static_cast<std::size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            throw EdgeListError("unexpected character '" + std::string(1, line[i]) + "'", line_no);
        out.push_back(v);
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    long long n = -1, m = -1;
    int line_no = 0;
    int header_line = 0;
    std::vector<Edge> edges;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        const auto values = numbers_on(line, line_no);
        if (values.empty()) continue;
        if (values.size() != 2) throw EdgeListError("expected exactly two integers", line_no);
        if (n < 0) {
            n = values[0];
            m = values[1];
            header_line = line_no;
            if (n < 1 || m < 0) throw EdgeListError("header needs n >= 1 and m >= 0", line_no);
            continue;
        }
        const auto u = values[0], v = values[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw EdgeListError("vertex out of range for n = " + std::to_string(n), line_no);
        if (u == v) throw EdgeListError("self-loop at vertex " + std::to_string(u), line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw EdgeListError("missing 'n m' header", line_no);
    if (static_cast<long long>(edges.size()) != m)
        throw EdgeListError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                                " were listed",
                            header_line);
    return from_edges(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace distspec
