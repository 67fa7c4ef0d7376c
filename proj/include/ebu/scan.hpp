#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ebu/families.hpp"
#include "ebu/graph.hpp"

namespace ebu {

/// One graph's computed predicate bundle. Optional predicates are present
/// iff requested by the scan options; `error` is set (and everything else
/// meaningless) for record-level input failures.
struct ScanRecord {
    long long index = 0;
    std::string graph6;
    int n = 0;
    int m = 0;
    bool ebu = false;
    std::optional<std::string> uniform_value;  // "p/q", present iff ebu
    int distinct_value_count = 0;
    std::optional<bool> edge_transitive;
    std::optional<bool> vertex_transitive;
    std::optional<bool> distance_regular;
    std::string error;
};

/// Fixed field order, one JSON object per line.
std::string record_to_json_line(const ScanRecord& r);

/// Boolean filter over the predicate names
/// {ebu, edge_transitive, vertex_transitive, distance_regular};
/// accepts !/&/| as well as not/and/or and the UTF-8 glyphs from the docs.
class FilterExpr {
public:
    static FilterExpr parse(std::string_view text);  // throws on syntax error
    bool empty() const { return !root_; }
    const std::string& text() const { return text_; }

    struct Node;
    const Node* root() const { return root_.get(); }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct ScanOptions {
    bool want_edge_transitive = false;
    bool want_vertex_transitive = false;
    bool want_distance_regular = false;
    FilterExpr filter;                    // empty = keep every record
    int workers = 1;
    long long checkpoint_interval = 100000;
    std::string checkpoint_path;          // empty disables checkpointing
};

struct ScanSummary {
    long long records_in = 0;    // input lines consumed (including skipped on resume)
    long long records_out = 0;   // records written (filter survivors + errors)
    long long errors = 0;
    bool aborted = false;        // I/O failure: output is partial
    std::string abort_reason;
};

/// Streaming scan: a reader feeds a bounded queue, stateless workers compute
/// records, and a single writer reorders by index so the output is
/// byte-identical for any worker count. Expensive predicates short-circuit:
/// edge transitivity is only computed for graphs that are already
/// edge-betweenness-uniform when the filter allows it.
ScanSummary scan_stream(std::istream& input, std::ostream& output, const ScanOptions& opts);

/// File variant with checkpoint/resume: the checkpoint stores the last
/// contiguously flushed input index and the output byte offset; resuming
/// truncates the output to that offset and skips the already-done prefix.
ScanSummary scan_file(const std::string& input_path, const std::string& output_path,
                      const ScanOptions& opts, bool resume = false);

// --- vertex-transitive census verification -------------------------------

struct CensusExpectation {
    int order = 0;
    int total = 0;             // graphs in the census
    int both_transitive = 0;   // edge- and vertex-transitive
    int non_ebu = 0;           // not edge-betweenness-uniform
    int ebu_not_et = 0;        // the interesting residue
};

/// Built-in expectations for orders 11 through 15.
CensusExpectation census_expectation(int order);

struct CensusReport {
    int order = 0;
    int total = 0;
    std::vector<int> census_defects;        // indices failing vertex transitivity
    int edge_transitive_count = 0;
    int ebu_count = 0;
    int ebu_not_et_count = 0;
    std::vector<std::string> ebu_not_et_graph6;
    std::vector<int> distinct_value_counts;  // per graph, census order
    bool exceptional_is_c15_1_6 = false;     // order 15 only
    bool matches_expectation = false;
    std::string detail;
};

CensusReport verify_vt_census(const std::vector<Graph>& census, const CensusExpectation& expected);

/// The seven vertex-transitive graphs on 11 vertices, generated internally
/// in the documented order: C11, ~C11, K11, C11(1,3), C11(1,2), ~C11(1,3),
/// ~C11(1,2). No external file needed for this order.
std::vector<Graph> internal_census_order11();

// --- the conjectured classes 3..9 ----------------------------------------

struct ConjectureClassSpec {
    int class_number = 0;  // 3..9
    int n = 0;
    CirculantSpec spec;
};

ConjectureClassSpec conjecture_class(int class_number, int n);

struct ConjectureRow {
    int n = 0;
    std::string circulant;       // "C20(1,4,6)"
    bool ebu = false;
    std::string uniform_value;   // "p/q" when ebu
    bool edge_transitive = false;
    bool consistent = false;     // ebu && !edge_transitive
};

struct ConjectureReport {
    int class_number = 0;
    std::vector<ConjectureRow> rows;
    bool all_consistent = false;  // a counterexample is a reportable outcome, not a failure
};

ConjectureReport conjecture_check(int class_number, int n_max);

}  // namespace ebu
