#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "distspec/edge_list.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"
#include "distspec/report.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

// Reference graph6 encoder written straight from the format description.
std::string reference_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

std::size_t error_offset(std::string_view text)
{
    try {
        (void)decode_graph6(text);
    } catch (const Graph6Error& e) {
        return e.offset();
    }
    FAIL("expected Graph6Error for '" << std::string(text) << "'");
    return 0;
}

int error_line(std::string_view text)
{
    try {
        (void)parse_edge_list(text);
    } catch (const EdgeListError& e) {
        return e.line();
    }
    FAIL("expected EdgeListError");
    return 0;
}

}  // namespace

TEST_CASE("graph6 examples")
{
    CHECK(decode_graph6("C~") == complete(4));
    CHECK(decode_graph6("Ch") == path(4));
    CHECK(decode_graph6("Ch").edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(decode_graph6("@").order() == 1);
    CHECK(encode_graph6(decode_graph6("C~")) == "C~");
    CHECK(encode_graph6(path(4)) == "Ch");
    CHECK(encode_graph6(complete(2)) == "A_");
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(complete(6)) == "E~~w");
    CHECK(decode_graph6(">>graph6<<Ch") == path(4));
}

TEST_CASE("graph6 errors carry byte offsets")
{
    CHECK(error_offset("") == 0);
    CHECK(error_offset("?") == 0);
    CHECK(error_offset("C") == 1);
    CHECK(error_offset("C~~") == 2);
    CHECK(error_offset("C\x7f") == 1);
    CHECK(error_offset("C ") == 1);
    CHECK(error_offset("C h") == 2);
    CHECK(error_offset("Bp") == 1);  // padding bits must be zero
    CHECK(error_offset(">>graph6<<C~~") == 12);
    CHECK(error_offset(">>graph6<<Bp") == 11);
    CHECK(error_offset("~??") == 3);
    CHECK(error_offset("~??}") == 1);  // 62 vertices must use the short form
    CHECK(error_offset("~~") == 1);
}

TEST_CASE("graph6 round trip on every graph up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : all_graphs(n)) {
            const auto text = encode_graph6(g);
            CHECK(text == reference_graph6(g));
            CHECK(decode_graph6(text) == g);
        }
}

TEST_CASE("graph6 round trip on random graphs, including the long form")
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 62;
        const Graph g = oracle::random_graph(n, 0.37, rng);
        CHECK(encode_graph6(g) == reference_graph6(g));
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    for (int n : {63, 64, 100, 130}) {
        const Graph g = oracle::random_graph(n, 0.2, rng);
        const auto text = encode_graph6(g);
        CHECK(text.front() == '~');
        CHECK(text == reference_graph6(g));
        CHECK(decode_graph6(text) == g);
    }
}

TEST_CASE("graph6 fuzzing never crashes")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> length(0, 40);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> printable(63, 126);
    int decoded = 0, rejected = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        std::string s(length(rng), '\0');
        // Mostly in-alphabet bytes so that some inputs decode.
        for (auto& c : s) c = static_cast<char>(trial % 4 ? printable(rng) : byte(rng));
        try {
            const Graph g = decode_graph6(s);
            ++decoded;
            if (encode_graph6(g) != s) FAIL("re-encoding differs for '" << s << "'");
        } catch (const Graph6Error& e) {
            ++rejected;
            if (e.offset() > s.size()) FAIL("offset past the end");
        }
    }
    CHECK(decoded + rejected == 100000);
    CHECK(decoded > 0);
    CHECK(rejected > 0);
}

TEST_CASE("edge lists")
{
    CHECK(parse_edge_list("3 2\n0 1\n1 2") == path(3));
    CHECK(parse_edge_list("4 3\n0 1\n1 2\n2 3") == path(4));
    CHECK(parse_edge_list("# a comment\n\n4 3 # header\n0 1\n# middle\n1 2\n2 3\n") == path(4));
    CHECK(parse_edge_list("1 0\n").order() == 1);

    CHECK(error_line("2 1\n0 0") == 2);
    CHECK(error_line("3 2\n0 1\n1 5") == 3);
    CHECK(error_line("3 3\n0 1\n1 2") == 1);
    CHECK(error_line("3 1\n0 1\n1 2") == 1);
    CHECK(error_line("3\n0 1") == 1);
    CHECK(error_line("3 1\n0 x") == 2);
    CHECK(error_line("") == 0);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(1 + trial, 0.3, rng);
        CHECK(parse_edge_list(format_edge_list(g)) == g);
    }
}

TEST_CASE("certificate CSV")
{
    std::ostringstream out;
    const std::vector<CertifiedGraph> rows{certify("K4", complete(4))};
    write_certificates_csv(out, rows);
    const std::string text = out.str();
    CHECK(text.starts_with(std::string(kCertificateCsvHeader) + "\n"));
    CHECK(text.find("\nK4,4,6,1,rho_lower_degrees,lower-rho,true,3,3,0,true,true,false\n") != std::string::npos);
    CHECK(text.find("\nK4,4,6,1,de_nordhaus_gaddum,pair-DE,false,,,,unspecified,false,false\n") != std::string::npos);

    std::ostringstream again;
    write_certificates_csv(again, rows);
    CHECK(again.str() == text);

    std::ostringstream headless;
    write_certificates_csv(headless, rows, false);
    CHECK(headless.str() == text.substr(text.find('\n') + 1));

    CHECK(format_real(std::sqrt(2.0)) == "1.41421356237");
    CHECK(format_real(std::nan("")) == "");
    CHECK(format_real(6) == "6");
}

TEST_CASE("certificate JSON mirrors the CSV and round-trips")
{
    std::vector<CertifiedGraph> rows;
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
             {"C5", cycle(5)}, {"P4", path(4)}, {"K3_3", complete_bipartite(3, 3)}, {"K2", complete(2)}})
        rows.push_back(certify(name, g));

    std::stringstream json;
    write_certificates_json(json, rows);
    const auto parsed = nlohmann::json::parse(json.str());
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 4 * 29);
    for (const auto& row : parsed) {
        for (const char* key : {"graph_id", "n", "m", "diameter", "bound_id", "kind", "applicable", "bound_value",
                                "observed_value", "slack", "equality_predicted", "equality_observed", "boundary"})
            CHECK(row.contains(key));
        if (!row["applicable"].get<bool>()) {
            CHECK(row["bound_value"].is_null());
            CHECK(row.contains("reason"));
        }
    }

    json.seekg(0);
    const auto back = read_certificates_json(json);
    REQUIRE(back.size() == rows.size());

    // Values survive at printed precision.
    std::ostringstream a, b;
    write_certificates_csv(a, rows);
    write_certificates_csv(b, back);
    CHECK(a.str() == b.str());
    std::stringstream again;
    write_certificates_json(again, back);
    CHECK(again.str() == json.str());
    CHECK(back[0].graph_id == "C5");
    CHECK(back[0].certificates.size() == 29);
}
