// ebu: exact edge betweenness centrality and edge-betweenness-uniformity
// analysis for small graphs and circulant families.
//
// Exit codes: 0 success, 1 property falsified / certificate failed,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ebu/canonical.hpp"
#include "ebu/centrality.hpp"
#include "ebu/circulant_iso.hpp"
#include "ebu/class_graphs.hpp"
#include "ebu/families.hpp"
#include "ebu/graph6.hpp"
#include "ebu/scan.hpp"
#include "ebu/transitivity.hpp"

namespace {

using nlohmann::ordered_json;

// "15:1,6" -> C_15(1,6)
ebu::CirculantSpec parse_circulant_arg(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("circulant spec must look like k:j1,j2,...");
    int k = std::stoi(text.substr(0, colon));
    std::vector<int> chords;
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) chords.push_back(std::stoi(item));
    return ebu::CirculantSpec(k, chords);
}

struct GraphInput {
    std::string graph6_arg;
    std::string file;
    std::string circulant_arg;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph6", graph6_arg, "graph6 string");
        cmd->add_option("--file", file, "file with a graph6 line");
        cmd->add_option("--circulant", circulant_arg, "circulant spec k:j1,j2,...");
    }

    ebu::Graph resolve() const {
        int provided = !graph6_arg.empty() + !file.empty() + !circulant_arg.empty();
        if (provided != 1)
            throw std::invalid_argument("provide exactly one of: graph6 string, --file, --circulant");
        if (!graph6_arg.empty()) return ebu::parse_graph6(graph6_arg);
        if (!circulant_arg.empty()) return ebu::circulant(parse_circulant_arg(circulant_arg));
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        auto line = ebu::next_graph6_line(in);
        if (!line) throw std::invalid_argument("no graph6 line in " + file);
        return ebu::parse_graph6(*line);
    }
};

void emit(const ordered_json& j, bool table, const std::vector<std::string>& table_lines) {
    if (table) {
        for (const auto& line : table_lines) std::cout << line << '\n';
    } else {
        std::cout << j.dump() << '\n';
    }
}

int run_ebc(const GraphInput& input, bool expect_uniform, bool table) {
    ebu::Graph g = input.resolve();
    ebu::EdgeCentralityReport report = ebu::edge_betweenness(g);

    ordered_json j;
    j["graph6"] = ebu::write_graph6(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["hash"] = report.graph_hash;
    j["uniform"] = report.is_uniform;
    j["value"] = report.uniform_value ? ordered_json(report.uniform_value->str()) : ordered_json(nullptr);
    j["distinct_value_count"] = static_cast<int>(report.distinct_values.size());
    ordered_json dv = ordered_json::array();
    for (const auto& [value, count] : report.distinct_values)
        dv.push_back({{"value", value.str()}, {"multiplicity", count}});
    j["distinct_values"] = dv;
    ordered_json values = ordered_json::array();
    for (const auto& [edge, value] : report.values)
        values.push_back({{"u", edge.u}, {"v", edge.v}, {"b", value.str()}});
    j["values"] = values;

    std::vector<std::string> lines;
    lines.push_back("graph " + ebu::write_graph6(g) + "  n=" + std::to_string(g.vertex_count()) +
                    " m=" + std::to_string(g.edge_count()));
    lines.push_back(report.is_uniform
                        ? "uniform: yes, B' = " + (report.uniform_value ? report.uniform_value->str() : "-")
                        : "uniform: no, " + std::to_string(report.distinct_values.size()) +
                              " distinct values");
    for (const auto& [edge, value] : report.values)
        lines.push_back("  (" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")  " + value.str());
    emit(j, table, lines);

    return (expect_uniform && !report.is_uniform) ? 1 : 0;
}

int run_transitivity(const GraphInput& input, bool table) {
    ebu::Graph g = input.resolve();
    bool vt = ebu::is_vertex_transitive(g);
    bool et = g.edge_count() == 0 ? true : ebu::is_edge_transitive(g);
    ordered_json j;
    j["graph6"] = ebu::write_graph6(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["vertex_transitive"] = vt;
    j["edge_transitive"] = et;
    emit(j, table,
         {std::string("vertex-transitive: ") + (vt ? "yes" : "no"),
          std::string("edge-transitive:   ") + (et ? "yes" : "no")});
    return 0;
}

int run_dr(const GraphInput& input, bool table) {
    ebu::Graph g = input.resolve();
    ordered_json j;
    j["graph6"] = ebu::write_graph6(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    bool connected = ebu::is_connected(g) && g.vertex_count() > 0;
    j["connected"] = connected;
    std::vector<std::string> lines;
    if (!connected) {
        j["distance_regular"] = false;
        j["intersection_array"] = nullptr;
        lines.push_back("disconnected graph: not distance-regular");
    } else {
        ebu::DistanceRegularity dr = ebu::distance_regularity(g);
        j["distance_regular"] = dr.distance_regular;
        if (dr.distance_regular) {
            j["intersection_array"] = {{"b", dr.b}, {"c", dr.c}};
            std::string arr = "{";
            for (size_t i = 0; i < dr.b.size(); ++i) arr += (i ? "," : "") + std::to_string(dr.b[i]);
            arr += ";";
            for (size_t i = 0; i < dr.c.size(); ++i) arr += (i ? "," : "") + std::to_string(dr.c[i]);
            arr += "}";
            lines.push_back("distance-regular: yes, intersection array " + arr);
        } else {
            j["intersection_array"] = nullptr;
            lines.push_back("distance-regular: no");
        }
    }
    emit(j, table, lines);
    return 0;
}

int run_prove(int cls, int n, bool table) {
    ebu::EbuCertificate cert = ebu::ebu_certificate(ebu::ClassId(cls, n));
    std::string json = ebu::certificate_to_json(cert);
    if (table) {
        std::cout << cert.class_id.str() << " verdict: " << (cert.verdict ? "PASS" : "FAIL");
        if (cert.uniform_value) std::cout << "  B' = " << cert.uniform_value->str();
        std::cout << '\n';
        for (const auto& sc : cert.per_source)
            if (!sc.detail.empty())
                std::cout << "  source " << sc.source << ": " << sc.detail << '\n';
    } else {
        std::cout << json << '\n';
    }
    return cert.verdict ? 0 : 1;
}

int run_scan(const std::string& input_path, const std::string& output_path,
             const std::string& filter_text, int jobs, const std::string& checkpoint,
             bool resume, bool want_et, bool want_vt, bool want_dr) {
    ebu::ScanOptions opts;
    opts.filter = ebu::FilterExpr::parse(filter_text);
    opts.workers = jobs;
    opts.want_edge_transitive = want_et;
    opts.want_vertex_transitive = want_vt;
    opts.want_distance_regular = want_dr;
    opts.checkpoint_path = checkpoint;

    ebu::ScanSummary summary;
    if (!output_path.empty()) {
        summary = ebu::scan_file(input_path, output_path, opts, resume);
    } else {
        if (resume) throw std::invalid_argument("scan: --resume requires --output");
        std::ifstream in(input_path);
        if (!in) throw std::runtime_error("scan: cannot open input " + input_path);
        summary = ebu::scan_stream(in, std::cout, opts);
    }

    ordered_json j;
    j["records_in"] = summary.records_in;
    j["records_out"] = summary.records_out;
    j["errors"] = summary.errors;
    j["aborted"] = summary.aborted;
    if (summary.aborted) j["abort_reason"] = summary.abort_reason;
    std::ostream& meta = output_path.empty() ? std::cerr : std::cout;
    meta << j.dump() << '\n';
    return summary.aborted ? 2 : 0;
}

int run_census(const std::string& file, int order, bool table) {
    ebu::CensusExpectation expected = ebu::census_expectation(order);
    std::vector<ebu::Graph> graphs;
    if (order == 11 && file.empty()) {
        graphs = ebu::internal_census_order11();
    } else {
        if (file.empty()) throw std::invalid_argument("census: orders 12..15 need --file");
        std::ifstream in(file);
        if (!in) throw std::runtime_error("census: cannot open " + file);
        while (auto line = ebu::next_graph6_line(in)) graphs.push_back(ebu::parse_graph6(*line));
    }
    ebu::CensusReport report = ebu::verify_vt_census(graphs, expected);

    ordered_json j;
    j["order"] = order;
    j["total"] = report.total;
    j["edge_transitive"] = report.edge_transitive_count;
    j["non_ebu"] = report.total - report.ebu_count;
    j["ebu_not_et"] = report.ebu_not_et_count;
    j["ebu_not_et_graph6"] = report.ebu_not_et_graph6;
    j["distinct_value_counts"] = report.distinct_value_counts;
    j["census_defects"] = report.census_defects;
    if (order == 15) j["exceptional_is_c15_1_6"] = report.exceptional_is_c15_1_6;
    j["matches_expectation"] = report.matches_expectation;
    if (!report.detail.empty()) j["detail"] = report.detail;

    std::vector<std::string> lines;
    lines.push_back("order " + std::to_string(order) + ": " + std::to_string(report.total) +
                    " graphs, " + std::to_string(report.edge_transitive_count) + " edge-transitive, " +
                    std::to_string(report.ebu_not_et_count) + " EBU-not-ET");
    lines.push_back(report.matches_expectation ? "matches expectation" : "MISMATCH: " + report.detail);
    emit(j, table, lines);
    return report.matches_expectation ? 0 : 1;
}

int run_conjecture(int cls, int n_max, bool table) {
    ebu::ConjectureReport report = ebu::conjecture_check(cls, n_max);
    ordered_json j;
    j["class"] = report.class_number;
    ordered_json rows = ordered_json::array();
    std::vector<std::string> lines;
    for (const auto& row : report.rows) {
        rows.push_back({{"n", row.n},
                        {"circulant", row.circulant},
                        {"ebu", row.ebu},
                        {"uniform_value", row.uniform_value.empty() ? ordered_json(nullptr)
                                                                    : ordered_json(row.uniform_value)},
                        {"edge_transitive", row.edge_transitive},
                        {"consistent", row.consistent}});
        lines.push_back(row.circulant + "  ebu=" + (row.ebu ? "yes" : "no") +
                        " edge_transitive=" + (row.edge_transitive ? "yes" : "no") +
                        (row.consistent ? "  (conjecture consistent)" : "  (COUNTEREXAMPLE)"));
    }
    j["rows"] = rows;
    j["all_consistent"] = report.all_consistent;
    emit(j, table, lines);
    return 0;  // a counterexample is a reported outcome, not a failure
}

int run_iso(const std::vector<std::string>& specs, bool table) {
    if (specs.size() != 2) throw std::invalid_argument("iso: need exactly two circulant specs");
    ebu::CirculantSpec p = parse_circulant_arg(specs[0]);
    ebu::CirculantSpec q = parse_circulant_arg(specs[1]);
    if (p.order != q.order) throw std::invalid_argument("iso: orders differ");
    if (p.chords.size() != 2 || q.chords.size() != 2)
        throw std::invalid_argument("iso: criterion needs 2-chord circulants");

    bool by_criterion = ebu::circulant_isomorphic(p.order, {p.chords[0], p.chords[1]},
                                                  {q.chords[0], q.chords[1]});
    bool by_canonical = ebu::are_isomorphic(ebu::circulant(p), ebu::circulant(q));
    auto lp = ebu::circulant_lambda(p.order, p.chords[0], p.chords[1]);
    auto lq = ebu::circulant_lambda(q.order, q.chords[0], q.chords[1]);

    ordered_json j;
    j["k"] = p.order;
    j["p"] = p.chords;
    j["q"] = q.chords;
    j["lambda_p"] = lp.lambda;
    j["Lambda_p"] = lp.Lambda.str();
    j["lambda_q"] = lq.lambda;
    j["Lambda_q"] = lq.Lambda.str();
    j["isomorphic_by_criterion"] = by_criterion;
    j["isomorphic_by_canonical"] = by_canonical;
    j["agree"] = by_criterion == by_canonical;
    emit(j, table,
         {p.str() + " vs " + q.str() + ": criterion=" + (by_criterion ? "iso" : "non-iso") +
          " canonical=" + (by_canonical ? "iso" : "non-iso")});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge betweenness centrality and uniformity analysis"};
    app.require_subcommand(1);
    app.fallthrough();  // let --table appear after the subcommand too
    bool table = false;
    app.add_flag("--table", table, "human-readable output instead of JSON");

    auto* ebc = app.add_subcommand("ebc", "per-edge exact B' and uniformity");
    GraphInput ebc_input;
    ebc_input.attach(ebc);
    bool expect_uniform = false;
    ebc->add_flag("--expect-uniform", expect_uniform, "exit 1 if the graph is not uniform");

    auto* trans = app.add_subcommand("transitivity", "vertex/edge transitivity flags");
    GraphInput trans_input;
    trans_input.attach(trans);

    auto* dr = app.add_subcommand("dr", "distance regularity and intersection array");
    GraphInput dr_input;
    dr_input.attach(dr);

    auto* prove = app.add_subcommand("prove", "EBU certificate for C_{18n+/-3}(1,6n)");
    int prove_class = 1, prove_n = 1;
    prove->add_option("--class", prove_class, "1 or 2")->required();
    prove->add_option("--n", prove_n, "class parameter n >= 1")->required();

    auto* scan = app.add_subcommand("scan", "batch predicate scan over a graph6 stream");
    std::string scan_input, scan_output, scan_filter, scan_checkpoint;
    int scan_jobs = 1;
    bool scan_resume = false, scan_et = false, scan_vt = false, scan_dr = false;
    scan->add_option("--input", scan_input, "graph6 file, one graph per line")->required();
    scan->add_option("--output", scan_output, "JSON Lines output file (default: stdout)");
    scan->add_option("--filter", scan_filter, "e.g. \"ebu & !edge_transitive\"");
    scan->add_option("--jobs", scan_jobs, "worker count")->check(CLI::PositiveNumber);
    scan->add_option("--checkpoint", scan_checkpoint, "checkpoint file path");
    scan->add_flag("--resume", scan_resume, "resume from checkpoint");
    scan->add_flag("--edge-transitive", scan_et, "include edge_transitive in records");
    scan->add_flag("--vertex-transitive", scan_vt, "include vertex_transitive in records");
    scan->add_flag("--distance-regular", scan_dr, "include distance_regular in records");

    auto* census = app.add_subcommand("census", "verify a vertex-transitive census");
    std::string census_file;
    int census_order = 11;
    census->add_option("--file", census_file, "graph6 census file (unneeded for order 11)");
    census->add_option("--order", census_order, "11..15")->required();

    auto* conjecture = app.add_subcommand("conjecture", "check conjectured classes 3..9");
    int conj_class = 3, conj_nmax = 1;
    conjecture->add_option("--class", conj_class, "3..9")->required();
    conjecture->add_option("--n-max", conj_nmax, "check n = 1..n_max")->required();

    auto* iso = app.add_subcommand("iso", "2-circulant isomorphism criterion vs canonical form");
    std::vector<std::string> iso_specs;
    iso->add_option("--circulants", iso_specs, "two specs k:a,b")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*ebc) return run_ebc(ebc_input, expect_uniform, table);
        if (*trans) return run_transitivity(trans_input, table);
        if (*dr) return run_dr(dr_input, table);
        if (*prove) return run_prove(prove_class, prove_n, table);
        if (*scan)
            return run_scan(scan_input, scan_output, scan_filter, scan_jobs, scan_checkpoint,
                            scan_resume, scan_et, scan_vt, scan_dr);
        if (*census) return run_census(census_file, census_order, table);
        if (*conjecture) return run_conjecture(conj_class, conj_nmax, table);
        if (*iso) return run_iso(iso_specs, table);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}
