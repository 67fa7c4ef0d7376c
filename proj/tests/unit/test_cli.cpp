#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef EBU_CLI_PATH
#error "EBU_CLI_PATH must point at the built binary"
#endif
#ifndef EBU_SCHEMA_DIR
#error "EBU_SCHEMA_DIR must point at docs/schemas"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string command = std::string(EBU_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// minimal structural validator for our own schema subset: type, required,
// properties, items (uniform), arrays of allowed types
bool validates(const nlohmann::json& schema, const nlohmann::json& value, std::string& why);

bool check_type(const std::string& type, const nlohmann::json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

bool validates(const nlohmann::json& schema, const nlohmann::json& value, std::string& why) {
    if (schema.contains("type")) {
        const auto& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) ok = check_type(t.get<std::string>(), value);
        else
            for (const auto& alt : t) ok = ok || check_type(alt.get<std::string>(), value);
        if (!ok) {
            why = "type mismatch at " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (auto it = schema.at("properties").begin(); it != schema.at("properties").end(); ++it)
                if (value.contains(it.key()) && !validates(it.value(), value.at(it.key()), why))
                    return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& element : value)
            if (!validates(schema.at("items"), element, why)) return false;
    return true;
}

void check_schema(const std::string& schema_name, const nlohmann::json& value) {
    std::ifstream in(std::string(EBU_SCHEMA_DIR) + "/" + schema_name);
    REQUIRE(in.good());
    nlohmann::json schema = nlohmann::json::parse(in);
    std::string why;
    bool ok = validates(schema, value, why);
    CAPTURE(schema_name);
    CAPTURE(why);
    CHECK(ok);
}

}  // namespace

TEST_CASE("ebc subcommand") {
    RunResult r = run_cli("ebc \"Bg\"");  // P3
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("uniform") == true);
    CHECK(j.at("value") == "4");
    check_schema("ebc.schema.json", j);

    RunResult circ = run_cli("ebc --circulant 15:1,6");
    auto jc = nlohmann::json::parse(circ.out);
    CHECK(jc.at("uniform") == true);
    CHECK(jc.at("value") == "13");
    CHECK(jc.at("m") == 30);
    check_schema("ebc.schema.json", jc);
}

TEST_CASE("exit code 1 when --expect-uniform is falsified") {
    CHECK(run_cli("ebc \"Ch\" --expect-uniform").exit_code == 1);  // P4 is not uniform
    CHECK(run_cli("ebc \"Bg\" --expect-uniform").exit_code == 0);
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run_cli("ebc --no-such-flag x").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("ebc").exit_code == 2);                         // no input source
    CHECK(run_cli("ebc \"%%%\"").exit_code == 2);                 // malformed graph6
    CHECK(run_cli("ebc --circulant 10:7").exit_code == 2);        // chord > k/2
}

TEST_CASE("transitivity and dr subcommands") {
    auto jt = nlohmann::json::parse(run_cli("transitivity --circulant 15:1,6").out);
    CHECK(jt.at("vertex_transitive") == true);
    CHECK(jt.at("edge_transitive") == false);
    check_schema("transitivity.schema.json", jt);

    auto jd = nlohmann::json::parse(run_cli("dr --circulant 13:1,3,4").out);
    CHECK(jd.at("distance_regular") == true);
    check_schema("dr.schema.json", jd);
}

TEST_CASE("prove subcommand") {
    RunResult r = run_cli("prove --class 2 --n 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("verdict") == true);
    CHECK(j.at("uniform_value") == "22");
    check_schema("prove.schema.json", j);

    RunResult r2 = run_cli("prove --class 1 --n 2");
    CHECK(r2.exit_code == 0);
    check_schema("prove.schema.json", nlohmann::json::parse(r2.out));
}

TEST_CASE("census subcommand, internal order 11") {
    RunResult r = run_cli("census --order 11");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("matches_expectation") == true);
    CHECK(j.at("distinct_value_counts") == nlohmann::json({1, 2, 1, 2, 2, 3, 3}));
    check_schema("census.schema.json", j);
}

TEST_CASE("conjecture subcommand") {
    RunResult r = run_cli("conjecture --class 9 --n-max 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("rows")[0].at("circulant") == "C49(1,8,13)");
    CHECK(j.at("all_consistent") == true);
    check_schema("conjecture.schema.json", j);
}

TEST_CASE("iso subcommand") {
    auto j = nlohmann::json::parse(run_cli("iso --circulants 15:1,2 15:1,7").out);
    CHECK(j.at("isomorphic_by_criterion") == true);
    CHECK(j.at("isomorphic_by_canonical") == true);
    CHECK(j.at("agree") == true);
    check_schema("iso.schema.json", j);
}

TEST_CASE("scan subcommand on a small stream") {
    auto dir = std::filesystem::temp_directory_path() / "ebu_cli_scan_test";
    std::filesystem::create_directories(dir);
    auto input = dir / "in.g6";
    auto output = dir / "out.jsonl";
    {
        std::ofstream f(input);
        f << "Bw\nA_\nBg\n";
    }
    RunResult r = run_cli("scan --input " + input.string() + " --output " + output.string() +
                          " --jobs 2 --edge-transitive");
    CHECK(r.exit_code == 0);
    auto summary = nlohmann::json::parse(r.out);
    CHECK(summary.at("records_out") == 3);
    check_schema("scan_summary.schema.json", summary);

    std::ifstream records(output);
    std::string line;
    int count = 0;
    while (std::getline(records, line)) {
        check_schema("scan_record.schema.json", nlohmann::json::parse(line));
        ++count;
    }
    CHECK(count == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("table mode prints text, not JSON") {
    RunResult r = run_cli("--table ebc --circulant 15:1,6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("uniform: yes") != std::string::npos);
    // the flag is accepted after the subcommand as well
    RunResult r2 = run_cli("ebc --circulant 15:1,6 --table");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("uniform: yes") != std::string::npos);
}
