#include "distspec/graph6.hpp"

namespace distspec {

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::invalid_argument("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset)
{
}

namespace {

constexpr unsigned char kBias = 63;
constexpr int kMaxOrder = 258047;

int sextet(std::string_view s, std::size_t at)
{
    if (at >= s.size()) throw Graph6Error("unexpected end of input", at);
    const auto c = static_cast<unsigned char>(s[at]);
    if (c < kBias || c > kBias + 63) throw Graph6Error("byte " + std::to_string(c) + " outside the graph6 alphabet", at);
    return c - kBias;
}

}  // namespace

namespace {

Graph decode_body(std::string_view line)
{
    std::size_t pos = 0;
    int n = sextet(line, pos++);
    if (n == 63) {
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126)
            throw Graph6Error("orders above 258047 are not supported", pos);
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(line, pos++);
        if (n < 63) throw Graph6Error("extended order " + std::to_string(n) + " should use the short form", 1);
    }
    if (n == 0) throw Graph6Error("graph must have at least one vertex", 0);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() < pos + bytes) throw Graph6Error("truncated adjacency data", line.size());
    if (line.size() > pos + bytes) throw Graph6Error("trailing bytes after adjacency data", pos + bytes);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = sextet(line, pos + bit / 6);
            if (chunk >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        const int last = sextet(line, pos + bytes - 1);
        if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("padding bits are not zero", pos + bytes - 1);
    }
    return from_edges(n, edges);
}

}  // namespace

Graph decode_graph6(std::string_view line)
{
    constexpr std::string_view header = ">>graph6<<";
    if (!line.starts_with(header)) return decode_body(line);
    try {
        return decode_body(line.substr(header.size()));
    } catch (const Graph6Error& e) {
        std::string what = e.what();
        what = what.substr(what.find(": ") + 2);
        throw Graph6Error(what, e.offset() + header.size());
    }
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxOrder) throw GraphError("graph6 supports n <= 258047");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace distspec
