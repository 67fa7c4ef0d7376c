#include "ebu/scan.hpp"

#include <atomic>
#include <cctype>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ebu/canonical.hpp"
#include "ebu/centrality.hpp"
#include "ebu/graph6.hpp"
#include "ebu/transitivity.hpp"

#include "json.hpp"

namespace ebu {

// --- filter expressions ----------------------------------------------------

struct FilterExpr::Node {
    enum class Kind { Var, Not, And, Or } kind = Kind::Var;
    std::string var;
    std::shared_ptr<const Node> left, right;
};

namespace {

struct Token {
    enum class Type { Ident, Not, And, Or, LParen, RParen, End } type;
    std::string text;
};

std::vector<Token> tokenize_filter(std::string_view s) {
    std::vector<Token> tokens;
    size_t i = 0;
    auto at = [&](std::string_view lit) { return s.substr(i).starts_with(lit); };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) { ++i; continue; }
        if (c == '(') { tokens.push_back({Token::Type::LParen, "("}); ++i; continue; }
        if (c == ')') { tokens.push_back({Token::Type::RParen, ")"}); ++i; continue; }
        if (c == '!') { tokens.push_back({Token::Type::Not, "!"}); ++i; continue; }
        if (at("&&")) { tokens.push_back({Token::Type::And, "&&"}); i += 2; continue; }
        if (c == '&') { tokens.push_back({Token::Type::And, "&"}); ++i; continue; }
        if (at("||")) { tokens.push_back({Token::Type::Or, "||"}); i += 2; continue; }
        if (c == '|') { tokens.push_back({Token::Type::Or, "|"}); ++i; continue; }
        if (at("\xe2\x88\xa7")) { tokens.push_back({Token::Type::And, "and"}); i += 3; continue; }  // ∧
        if (at("\xe2\x88\xa8")) { tokens.push_back({Token::Type::Or, "or"}); i += 3; continue; }    // ∨
        if (at("\xc2\xac")) { tokens.push_back({Token::Type::Not, "not"}); i += 2; continue; }      // ¬
        if (std::isalpha(c) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string word(s.substr(i, j - i));
            i = j;
            if (word == "and") tokens.push_back({Token::Type::And, word});
            else if (word == "or") tokens.push_back({Token::Type::Or, word});
            else if (word == "not") tokens.push_back({Token::Type::Not, word});
            else tokens.push_back({Token::Type::Ident, word});
            continue;
        }
        throw std::invalid_argument("filter: unexpected character '" + std::string(1, s[i]) + "'");
    }
    tokens.push_back({Token::Type::End, ""});
    return tokens;
}

class FilterParser {
public:
    explicit FilterParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::shared_ptr<const FilterExpr::Node> parse() {
        auto node = parse_or();
        expect(Token::Type::End, "end of input");
        return node;
    }

private:
    using NodePtr = std::shared_ptr<const FilterExpr::Node>;

    NodePtr parse_or() {
        NodePtr left = parse_and();
        while (peek().type == Token::Type::Or) {
            advance();
            left = make(FilterExpr::Node::Kind::Or, left, parse_and());
        }
        return left;
    }

    NodePtr parse_and() {
        NodePtr left = parse_factor();
        while (peek().type == Token::Type::And) {
            advance();
            left = make(FilterExpr::Node::Kind::And, left, parse_factor());
        }
        return left;
    }

    NodePtr parse_factor() {
        const Token& t = peek();
        if (t.type == Token::Type::Not) {
            advance();
            auto node = std::make_shared<FilterExpr::Node>();
            node->kind = FilterExpr::Node::Kind::Not;
            node->left = parse_factor();
            return node;
        }
        if (t.type == Token::Type::LParen) {
            advance();
            NodePtr inner = parse_or();
            expect(Token::Type::RParen, "')'");
            return inner;
        }
        if (t.type == Token::Type::Ident) {
            static const char* known[] = {"ebu", "edge_transitive", "vertex_transitive",
                                          "distance_regular"};
            bool ok = false;
            for (const char* name : known) ok = ok || t.text == name;
            if (!ok) throw std::invalid_argument("filter: unknown predicate '" + t.text + "'");
            auto node = std::make_shared<FilterExpr::Node>();
            node->kind = FilterExpr::Node::Kind::Var;
            node->var = t.text;
            advance();
            return node;
        }
        throw std::invalid_argument("filter: unexpected token '" + t.text + "'");
    }

    NodePtr make(FilterExpr::Node::Kind kind, NodePtr l, NodePtr r) {
        auto node = std::make_shared<FilterExpr::Node>();
        node->kind = kind;
        node->left = std::move(l);
        node->right = std::move(r);
        return node;
    }

    const Token& peek() const { return tokens_[pos_]; }
    void advance() { ++pos_; }
    void expect(Token::Type type, const char* what) {
        if (tokens_[pos_].type != type)
            throw std::invalid_argument(std::string("filter: expected ") + what);
        ++pos_;
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace

FilterExpr FilterExpr::parse(std::string_view text) {
    FilterExpr expr;
    expr.text_ = std::string(text);
    if (text.find_first_not_of(" \t") == std::string_view::npos) return expr;  // empty filter
    expr.root_ = FilterParser(tokenize_filter(text)).parse();
    return expr;
}

// --- per-record computation --------------------------------------------------

namespace {

// Lazy predicate context for one graph. Edgeless graphs count as vacuously
// edge-transitive so census streams containing K1 do not error out.
struct PredicateContext {
    const Graph& g;
    const EdgeCentralityReport& report;
    std::optional<bool> et, vt, dr;

    bool get(const std::string& name) {
        if (name == "ebu") return report.is_uniform;
        if (name == "edge_transitive") {
            if (!et) et = g.edge_count() == 0 ? true : is_edge_transitive(g);
            return *et;
        }
        if (name == "vertex_transitive") {
            if (!vt) vt = is_vertex_transitive(g);
            return *vt;
        }
        if (name == "distance_regular") {
            if (!dr) dr = is_connected(g) && is_distance_regular(g);
            return *dr;
        }
        throw std::logic_error("unknown predicate " + name);
    }
};

bool eval_filter(const FilterExpr::Node* node, PredicateContext& ctx) {
    using Kind = FilterExpr::Node::Kind;
    switch (node->kind) {
        case Kind::Var: return ctx.get(node->var);
        case Kind::Not: return !eval_filter(node->left.get(), ctx);
        case Kind::And: return eval_filter(node->left.get(), ctx) && eval_filter(node->right.get(), ctx);
        case Kind::Or: return eval_filter(node->left.get(), ctx) || eval_filter(node->right.get(), ctx);
    }
    throw std::logic_error("unreachable");
}

struct ProcessedLine {
    std::optional<std::string> line;  // nullopt when the filter excludes the record
    bool is_error = false;
};

ProcessedLine process_line(long long index, const std::string& line, const ScanOptions& opts) {
    ScanRecord r;
    r.index = index;
    try {
        Graph g = parse_graph6(line);
        r.graph6 = line;
        r.n = g.vertex_count();
        r.m = g.edge_count();
        if (r.n == 0) throw std::invalid_argument("empty graph");
        EdgeCentralityReport report = edge_betweenness(g);
        r.ebu = report.is_uniform;
        if (report.uniform_value) r.uniform_value = report.uniform_value->str();
        r.distinct_value_count = static_cast<int>(report.distinct_values.size());

        PredicateContext ctx{g, report, {}, {}, {}};
        if (!opts.filter.empty() && !eval_filter(opts.filter.root(), ctx)) return {std::nullopt, false};
        if (opts.want_edge_transitive) r.edge_transitive = ctx.get("edge_transitive");
        if (opts.want_vertex_transitive) r.vertex_transitive = ctx.get("vertex_transitive");
        if (opts.want_distance_regular) r.distance_regular = ctx.get("distance_regular");
    } catch (const std::exception& ex) {
        ScanRecord err;
        err.index = index;
        err.error = ex.what();
        return {record_to_json_line(err), true};
    }
    return {record_to_json_line(r), false};
}

}  // namespace

std::string record_to_json_line(const ScanRecord& r) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    if (!r.error.empty()) {
        j["error"] = r.error;
        return j.dump();
    }
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["ebu"] = r.ebu;
    j["uniform_value"] = r.uniform_value ? nlohmann::ordered_json(*r.uniform_value)
                                         : nlohmann::ordered_json(nullptr);
    j["distinct_value_count"] = r.distinct_value_count;
    if (r.edge_transitive) j["edge_transitive"] = *r.edge_transitive;
    if (r.vertex_transitive) j["vertex_transitive"] = *r.vertex_transitive;
    if (r.distance_regular) j["distance_regular"] = *r.distance_regular;
    return j.dump();
}

// --- the pipeline ------------------------------------------------------------

namespace {

struct Checkpoint {
    long long last_flushed_index = -1;
    long long output_offset = 0;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    nlohmann::ordered_json j;
    j["last_flushed_index"] = cp.last_flushed_index;
    j["output_offset"] = cp.output_offset;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    in >> j;
    Checkpoint cp;
    cp.last_flushed_index = j.at("last_flushed_index").get<long long>();
    cp.output_offset = j.at("output_offset").get<long long>();
    return cp;
}

class ScanPipeline {
public:
    ScanPipeline(std::istream& input, std::ostream& output, const ScanOptions& opts,
                 long long skip_through_index)
        : input_(input), output_(output), opts_(opts), skip_through_(skip_through_index) {
        if (opts_.workers < 1) throw std::invalid_argument("scan: worker count must be >= 1");
    }

    ScanSummary run() {
        next_to_write_ = skip_through_ + 1;
        std::thread reader([this] { read_all(); });
        std::vector<std::thread> workers;
        for (int i = 0; i < opts_.workers; ++i) workers.emplace_back([this] { work(); });

        write_loop();

        reader.join();
        for (auto& w : workers) w.join();

        if (!output_.good() && !summary_.aborted) {
            summary_.aborted = true;
            summary_.abort_reason = "output stream failed";
        }
        return summary_;
    }

private:
    static constexpr size_t kQueueCap = 1024;

    void read_all() {
        long long index = 0;
        while (auto line = next_graph6_line(input_)) {
            ++summary_.records_in;
            if (index > skip_through_) {
                std::unique_lock lock(mu_);
                cv_space_.wait(lock, [this] { return jobs_.size() < kQueueCap || stop_; });
                if (stop_) return;
                jobs_.emplace_back(index, std::move(*line));
                cv_work_.notify_one();
            }
            ++index;
        }
        {
            std::lock_guard lock(mu_);
            reading_done_ = true;
        }
        cv_work_.notify_all();
        cv_result_.notify_all();
    }

    void work() {
        for (;;) {
            std::pair<long long, std::string> job;
            {
                std::unique_lock lock(mu_);
                cv_work_.wait(lock, [this] { return !jobs_.empty() || reading_done_ || stop_; });
                if (stop_ || (jobs_.empty() && reading_done_)) return;
                job = std::move(jobs_.front());
                jobs_.pop_front();
                ++in_flight_;
                cv_space_.notify_one();
            }
            ProcessedLine processed = process_line(job.first, job.second, opts_);
            {
                std::lock_guard lock(mu_);
                results_.emplace(job.first, std::move(processed));
                --in_flight_;
            }
            cv_result_.notify_one();
        }
    }

    bool all_work_finished() {
        // all input consumed and every in-flight record delivered
        return reading_done_ && jobs_.empty() && in_flight_ == 0 && results_.empty();
    }

    void write_loop() {
        std::unique_lock lock(mu_);
        for (;;) {
            cv_result_.wait(lock, [this] {
                return stop_ || results_.count(next_to_write_) || all_work_finished();
            });
            if (stop_) return;
            auto it = results_.find(next_to_write_);
            if (it == results_.end()) {
                if (all_work_finished()) break;
                continue;
            }
            ProcessedLine processed = std::move(it->second);
            results_.erase(it);
            const long long written_index = next_to_write_;
            ++next_to_write_;
            lock.unlock();
            if (processed.line) {
                output_ << *processed.line << '\n';
                ++summary_.records_out;
                if (processed.is_error) ++summary_.errors;
                if (!output_) {
                    summary_.aborted = true;
                    summary_.abort_reason = "write failed at index " + std::to_string(written_index);
                    lock.lock();
                    stop_ = true;
                    cv_work_.notify_all();
                    cv_space_.notify_all();
                    return;
                }
            }
            maybe_checkpoint(written_index);
            lock.lock();
        }
        // final checkpoint so a resume restarts cleanly after completion
        if (!opts_.checkpoint_path.empty() && next_to_write_ > 0) {
            lock.unlock();
            flush_checkpoint(next_to_write_ - 1);
            lock.lock();
        }
    }

    void maybe_checkpoint(long long written_index) {
        if (opts_.checkpoint_path.empty() || opts_.checkpoint_interval <= 0) return;
        if ((written_index + 1) % opts_.checkpoint_interval != 0) return;
        flush_checkpoint(written_index);
    }

    void flush_checkpoint(long long written_index) {
        output_.flush();
        Checkpoint cp;
        cp.last_flushed_index = written_index;
        cp.output_offset = static_cast<long long>(output_.tellp());
        if (cp.output_offset >= 0) write_checkpoint(opts_.checkpoint_path, cp);
    }

    std::istream& input_;
    std::ostream& output_;
    const ScanOptions& opts_;
    long long skip_through_;

    std::mutex mu_;
    std::condition_variable cv_work_, cv_space_, cv_result_;
    std::deque<std::pair<long long, std::string>> jobs_;
    std::map<long long, ProcessedLine> results_;
    int in_flight_ = 0;
    bool reading_done_ = false;
    bool stop_ = false;
    long long next_to_write_ = 0;

    ScanSummary summary_;
};

}  // namespace

ScanSummary scan_stream(std::istream& input, std::ostream& output, const ScanOptions& opts) {
    ScanPipeline pipeline(input, output, opts, -1);
    return pipeline.run();
}

ScanSummary scan_file(const std::string& input_path, const std::string& output_path,
                      const ScanOptions& opts, bool resume) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("scan: cannot open input " + input_path);

    long long skip_through = -1;
    if (resume) {
        if (opts.checkpoint_path.empty())
            throw std::invalid_argument("scan: resume requires a checkpoint path");
        if (auto cp = read_checkpoint(opts.checkpoint_path)) {
            skip_through = cp->last_flushed_index;
            if (std::filesystem::exists(output_path)) {
                if (std::filesystem::file_size(output_path) <
                    static_cast<uintmax_t>(cp->output_offset))
                    throw std::runtime_error("scan: output shorter than checkpoint offset");
                std::filesystem::resize_file(output_path, static_cast<uintmax_t>(cp->output_offset));
            } else if (cp->output_offset != 0) {
                throw std::runtime_error("scan: checkpoint present but output missing");
            }
        }
    }

    std::ofstream out(output_path, resume ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("scan: cannot open output " + output_path);
    ScanPipeline pipeline(in, out, opts, skip_through);
    return pipeline.run();
}

// --- census ------------------------------------------------------------------

CensusExpectation census_expectation(int order) {
    switch (order) {
        case 11: return {11, 7, 2, 5, 0};
        case 12: return {12, 64, 11, 53, 0};
        case 13: return {13, 13, 4, 9, 0};
        case 14: return {14, 51, 6, 45, 0};
        case 15: return {15, 44, 10, 33, 1};
        default: throw std::invalid_argument("census_expectation: only orders 11..15 are known");
    }
}

std::vector<Graph> internal_census_order11() {
    std::vector<Graph> graphs;
    graphs.push_back(circulant(CirculantSpec(11, {1})));
    graphs.push_back(circulant(CirculantSpec(11, {1})).complement());
    graphs.push_back(family(FamilyKind::Complete, {11}));
    graphs.push_back(circulant(CirculantSpec(11, {1, 3})));
    graphs.push_back(circulant(CirculantSpec(11, {1, 2})));
    graphs.push_back(circulant(CirculantSpec(11, {1, 3})).complement());
    graphs.push_back(circulant(CirculantSpec(11, {1, 2})).complement());
    return graphs;
}

CensusReport verify_vt_census(const std::vector<Graph>& census, const CensusExpectation& expected) {
    CensusReport report;
    report.order = expected.order;
    report.total = static_cast<int>(census.size());

    const Graph c15_1_6 = circulant(CirculantSpec(15, {1, 6}));
    for (size_t i = 0; i < census.size(); ++i) {
        const Graph& g = census[i];
        if (!is_vertex_transitive(g)) report.census_defects.push_back(static_cast<int>(i));
        EdgeCentralityReport ebc = edge_betweenness(g);
        report.distinct_value_counts.push_back(static_cast<int>(ebc.distinct_values.size()));
        if (!ebc.is_uniform) continue;
        ++report.ebu_count;
        bool et = g.edge_count() == 0 ? true : is_edge_transitive(g);
        if (et) {
            ++report.edge_transitive_count;
        } else {
            ++report.ebu_not_et_count;
            report.ebu_not_et_graph6.push_back(write_graph6(g));
            if (expected.order == 15 && are_isomorphic(g, c15_1_6))
                report.exceptional_is_c15_1_6 = true;
        }
    }

    const int non_ebu = report.total - report.ebu_count;
    report.matches_expectation = report.census_defects.empty() &&
                                 report.total == expected.total &&
                                 report.edge_transitive_count == expected.both_transitive &&
                                 non_ebu == expected.non_ebu &&
                                 report.ebu_not_et_count == expected.ebu_not_et &&
                                 (expected.order != 15 || report.exceptional_is_c15_1_6);
    if (!report.matches_expectation) {
        report.detail = "counts " + std::to_string(report.total) + "/" +
                        std::to_string(report.edge_transitive_count) + "/" + std::to_string(non_ebu) +
                        "/" + std::to_string(report.ebu_not_et_count) + " vs expected " +
                        std::to_string(expected.total) + "/" + std::to_string(expected.both_transitive) +
                        "/" + std::to_string(expected.non_ebu) + "/" + std::to_string(expected.ebu_not_et);
    }
    return report;
}

// --- conjecture classes --------------------------------------------------------

ConjectureClassSpec conjecture_class(int class_number, int n) {
    if (n < 1) throw std::invalid_argument("conjecture_class: n must be >= 1");
    ConjectureClassSpec spec;
    spec.class_number = class_number;
    spec.n = n;
    switch (class_number) {
        case 3: spec.spec = CirculantSpec(20 + 8 * (n - 1), {1, 2 * n + 2, 2 * n + 4}); break;
        case 4: spec.spec = CirculantSpec(32 + 8 * (n - 1), {1, 2 * n + 5, 2 * n + 7}); break;
        case 5: spec.spec = CirculantSpec(20 + 16 * (n - 1), {1, 4 * n, 8 * n + 1}); break;
        case 6: spec.spec = CirculantSpec(28 + 16 * (n - 1), {1, 4 * n + 4, 8 * n + 5}); break;
        case 7: spec.spec = CirculantSpec(32 + 8 * (n - 1), {1, 2 * n + 5, 4 * n + 11}); break;
        case 8: spec.spec = CirculantSpec(32 + 8 * (n - 1), {1, 2 * n + 7, 4 * n + 11}); break;
        case 9: spec.spec = CirculantSpec(49 + 14 * (n - 1), {1, 2 * n + 6, 4 * n + 9}); break;
        default: throw std::invalid_argument("conjecture_class: class number must be 3..9");
    }
    return spec;
}

ConjectureReport conjecture_check(int class_number, int n_max) {
    if (n_max < 1) throw std::invalid_argument("conjecture_check: n_max must be >= 1");
    ConjectureReport report;
    report.class_number = class_number;
    report.all_consistent = true;
    for (int n = 1; n <= n_max; ++n) {
        ConjectureClassSpec spec = conjecture_class(class_number, n);
        Graph g = circulant(spec.spec);
        ConjectureRow row;
        row.n = n;
        row.circulant = spec.spec.str();
        UniformityResult u = is_edge_betweenness_uniform(g);
        row.ebu = u.uniform;
        if (u.value) row.uniform_value = u.value->str();
        row.edge_transitive = is_edge_transitive(g);
        row.consistent = row.ebu && !row.edge_transitive;
        report.all_consistent = report.all_consistent && row.consistent;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace ebu
