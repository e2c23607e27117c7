#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "distspec/bounds.hpp"
#include "distspec/edge_list.hpp"
#include "distspec/enumerate.hpp"
#include "distspec/families.hpp"
#include "distspec/graph6.hpp"
#include "distspec/harness.hpp"
#include "distspec/report.hpp"

namespace {

using namespace distspec;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
    std::string family;
    std::string graph6;
    std::string edges;
    std::string id;
    std::optional<std::uint64_t> seed;
};

struct OutputOptions {
    std::string out;
    std::string format = "csv";
};

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    auto* family = cmd->add_option("--family", in.family, "family spec, e.g. kpq:2,3 or broom:6,3");
    auto* g6 = cmd->add_option("--graph6", in.graph6, "graph6 string");
    auto* edges = cmd->add_option("--edges", in.edges, "edge-list file");
    family->excludes(g6, edges);
    g6->excludes(edges);
    cmd->add_option("--id", in.id, "graph id used in reports");
    cmd->add_option("--seed", in.seed, "seed for random families without an explicit one");
}

void add_output_options(CLI::App* cmd, OutputOptions& out)
{
    cmd->add_option("--out", out.out, "output file (default stdout)");
    cmd->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Random families take their seed from --seed when the spec carries none.
std::string apply_seed(std::string spec, std::optional<std::uint64_t> seed)
{
    if (!seed) return spec;
    const bool seeded_family = spec.starts_with("random:") || spec.starts_with("tree:");
    if (seeded_family && std::count(spec.begin(), spec.end(), ':') == 1) spec += ":" + std::to_string(*seed);
    return spec;
}

NamedGraph load_single(const InputOptions& in)
{
    NamedGraph g{"", Graph(1)};
    if (!in.family.empty()) {
        g = parse_family(apply_seed(in.family, in.seed));
    } else if (!in.graph6.empty()) {
        g = {in.graph6, decode_graph6(in.graph6)};
    } else if (!in.edges.empty()) {
        g = {in.edges, parse_edge_list(read_file(in.edges))};
    } else {
        throw CLI::ValidationError("input", "one of --family, --graph6 or --edges is required");
    }
    if (!in.id.empty()) g.name = in.id;
    return g;
}

std::vector<NamedGraph> load_corpus(const std::string& path)
{
    std::istringstream text(read_file(path));
    std::vector<NamedGraph> out;
    std::string line;
    int number = 0;
    while (std::getline(text, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            Graph g = decode_graph6(line);
            out.push_back({line, std::move(g)});
        } catch (const Graph6Error& e) {
            throw std::runtime_error(path + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

template<class Fn>
int with_output(const OutputOptions& opts, Fn&& write)
{
    if (opts.out.empty()) {
        write(std::cout);
        return 0;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + opts.out + "'");
    write(f);
    return 0;
}

void write_rows(std::ostream& os, const OutputOptions& opts, std::span<const CertifiedGraph> rows)
{
    if (opts.format == "json")
        write_certificates_json(os, rows);
    else
        write_certificates_csv(os, rows);
}

// Certifies in parallel; results keep input order.
std::vector<CertifiedGraph> certify_many(const std::vector<NamedGraph>& graphs, int jobs)
{
    std::vector<CertifiedGraph> out(graphs.size());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < graphs.size(); k += jobs)
                    out[k] = certify(graphs[k].name, graphs[k].graph);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distance spectra, distance energy and certified spectral bounds for small graphs"};
    app.require_subcommand(1);

    InputOptions analyze_in;
    auto* analyze = app.add_subcommand("analyze", "print invariants and the distance spectrum of one graph");
    add_input_options(analyze, analyze_in);

    InputOptions certify_in;
    OutputOptions certify_out;
    auto* certify_cmd = app.add_subcommand("certify", "evaluate every bound on one graph");
    add_input_options(certify_cmd, certify_in);
    add_output_options(certify_cmd, certify_out);

    std::string corpus;
    int all_n = 0;
    std::string filter_name = "none";
    std::string summary_path;
    int jobs = 1;
    OutputOptions scan_out;
    auto* scan = app.add_subcommand("scan", "certify every graph of a corpus");
    auto* corpus_opt = scan->add_option("--corpus", corpus, "file with one graph6 string per line");
    auto* all_opt = scan->add_option("--all", all_n, "use all connected graphs on N vertices")
                        ->check(CLI::Range(2, kMaxEnumeratedOrder));
    corpus_opt->excludes(all_opt);
    scan->add_option("--filter", filter_name, "bipartite, tqfree or regular")
        ->check(CLI::IsMember({"none", "bipartite", "tqfree", "regular"}));
    scan->add_option("--summary", summary_path, "also write the summary to this file");
    scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output_options(scan, scan_out);

    std::string claim_name;
    int claim_n = 0;
    std::optional<int> claim_delta;
    std::string extremal_format = "text";
    std::string extremal_outfile;
    auto* extremal = app.add_subcommand("extremal", "verify an extremal claim by exhaustive enumeration");
    extremal
        ->add_option("claim", claim_name,
                     "min-rho-bipartite, max-rho-bipartite, max-rho-tree, max-rho-tree-degree or min-de-connected")
        ->required();
    extremal->add_option("--n", claim_n, "number of vertices")->required();
    extremal->add_option("--delta", claim_delta, "maximum degree for max-rho-tree-degree");
    extremal->add_option("--format", extremal_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    extremal->add_option("--out", extremal_outfile, "output file (default stdout)");

    InputOptions nordhaus_in;
    OutputOptions nordhaus_out;
    auto* nordhaus = app.add_subcommand("nordhaus", "check DE(G) + DE(complement) against its lower bound");
    add_input_options(nordhaus, nordhaus_in);
    add_output_options(nordhaus, nordhaus_out);

    int enum_n = 0;
    std::string enum_kind = "connected";
    std::string enum_outfile;
    auto* enumerate = app.add_subcommand("enumerate", "list graphs on N vertices as graph6, one per line");
    enumerate->add_option("--n", enum_n, "number of vertices")->required();
    enumerate->add_option("--kind", enum_kind, "connected, all or trees")
        ->check(CLI::IsMember({"connected", "all", "trees"}));
    enumerate->add_option("--out", enum_outfile, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const auto g = load_single(analyze_in);
            write_analysis(std::cout, g.name, g.graph);
            return 0;
        }

        if (*certify_cmd) {
            const auto g = load_single(certify_in);
            const std::vector<CertifiedGraph> rows{certify(g.name, g.graph)};
            with_output(certify_out, [&](std::ostream& os) { write_rows(os, certify_out, rows); });
            const auto s = summarize(rows);
            if (s.violations > 0) {
                write_scan_summary(std::cerr, s);
                return kExitViolation;
            }
            return 0;
        }

        if (*scan) {
            std::vector<NamedGraph> graphs;
            if (!corpus.empty()) {
                graphs = load_corpus(corpus);
            } else if (all_n > 0) {
                for (auto& g : all_connected_graphs(all_n)) {
                    auto id = encode_graph6(g);
                    graphs.push_back({std::move(id), std::move(g)});
                }
            } else {
                throw CLI::ValidationError("scan", "one of --corpus or --all is required");
            }
            const auto filter = *parse_scan_filter(filter_name);
            std::erase_if(graphs, [&](const NamedGraph& g) { return !passes_filter(g.graph, filter); });
            const auto rows = certify_many(graphs, jobs);
            with_output(scan_out, [&](std::ostream& os) { write_rows(os, scan_out, rows); });
            const auto s = summarize(rows);
            write_scan_summary(std::cerr, s);
            if (!summary_path.empty()) {
                std::ofstream f(summary_path);
                write_scan_summary(f, s);
            }
            return s.violations > 0 ? kExitViolation : 0;
        }

        if (*extremal) {
            const auto claim = parse_extremal_claim(claim_name);
            if (!claim) throw CLI::ValidationError("claim", "unknown claim '" + claim_name + "'");
            const auto report = verify_extremal(*claim, claim_n, claim_delta);
            with_output({extremal_outfile, extremal_format}, [&](std::ostream& os) {
                if (extremal_format == "json")
                    write_extremal_report_json(os, report);
                else
                    write_extremal_report(os, report);
            });
            return report.claim_verified ? 0 : kExitViolation;
        }

        if (*nordhaus) {
            const auto g = load_single(nordhaus_in);
            const std::vector<CertifiedGraph> rows{
                {g.name, g.graph.order(), g.graph.size(), diameter(g.graph), {de_nordhaus_gaddum(GraphProfile(g.graph))}}};
            with_output(nordhaus_out, [&](std::ostream& os) { write_rows(os, nordhaus_out, rows); });
            return rows.front().certificates.front().violated() ? kExitViolation : 0;
        }

        if (*enumerate) {
            std::vector<Graph> graphs;
            if (enum_kind == "trees")
                graphs = all_trees(enum_n);
            else if (enum_kind == "all")
                graphs = all_graphs(enum_n);
            else
                graphs = all_connected_graphs(enum_n);
            with_output({enum_outfile, "csv"}, [&](std::ostream& os) {
                for (const auto& g : graphs) os << encode_graph6(g) << '\n';
            });
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
