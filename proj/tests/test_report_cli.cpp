#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dend/catalog.hpp"
#include "dend/cli.hpp"
#include "dend/errors.hpp"
#include "dend/report.hpp"

#include "json.hpp"

using namespace dend;
namespace fs = std::filesystem;

namespace {

const catalog& shipped_catalog() {
    static catalog cat = load_catalog_file(DEND_CATALOG_PATH);
    return cat;
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

struct cli_result {
    int code;
    std::string out;
    std::string err;
};

cli_result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& stem) {
    fs::path dir = fs::temp_directory_path() / ("dend_test_" + stem);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("run_verification on a single algebra is self-consistent and deterministic") {
    verify_options opts;
    opts.seed = 42;
    opts.samples_per_component = 10;
    opts.only_algebras = {"Dend2_1"};

    auto rep = run_verification(shipped_catalog(), opts);
    CHECK(rep.catalog_sha256 == shipped_catalog().sha256_hex);
    CHECK(rep.seed == 42);
    CHECK(rep.missing.empty());
    CHECK(rep.verdicts.size() == 10);  // Dend2_1 carries ten claims, one conv x one tail
    for (const auto& v : rep.verdicts) CHECK(v.algebra_id == "Dend2_1");
    CHECK(rep.weight_shift.size() == 2);  // one Rota-Baxter claim per weight
    CHECK(rep.completeness.size() == 5);  // rb0, rb1, reynolds, nijenhuis, averaging
    CHECK_FALSE(rep.has_refuted());

    // The audit genuinely finds points the tables do not cover; pin them.
    //  - weight-1 standard tail: the solutions are diag(a, d) with a, d in
    //    {0, -1} (four points), while the lone claim is the zero matrix, so
    //    three point components go uncovered (30 of 40 samples).
    //  - reynolds: the solutions include the family (1 0; 0 d) with d free,
    //    which the claims only meet at d = 0 and d = 1.
    CHECK(rep.total_missed_points() == 38);
    for (const auto& sweep : rep.completeness) {
        CHECK(sweep.unsampled_components == 0);
        if (sweep.kind.fam == operator_kind::family::rota_baxter &&
            sweep.kind.weight == rational(1)) {
            CHECK(sweep.component_count == 4);
            CHECK(sweep.sampled_points == 40);
            CHECK(sweep.missed_points == 30);
            REQUIRE(sweep.missed_example.has_value());
        } else if (sweep.kind.fam == operator_kind::family::reynolds) {
            CHECK(sweep.component_count == 2);
            CHECK(sweep.sampled_points == 20);
            CHECK(sweep.missed_points == 8);
            REQUIRE(sweep.missed_example.has_value());
        } else {
            CHECK(sweep.missed_points == 0);
        }
    }

    // The weight-shift audit records the conditional finding at weight 1.
    bool found = false;
    for (const auto& ws : rep.weight_shift) {
        if (ws.claim_id == "Dend2_1.rb0.P1") {
            CHECK(ws.to_weight == rational(1));
            CHECK(ws.verdict.st == claim_verdict::status::conditional);
            REQUIRE(ws.verdict.conditions.size() == 1);
            CHECK(ws.verdict.conditions[0].str() == "a12");
            found = true;
        }
    }
    CHECK(found);

    auto rep2 = run_verification(shipped_catalog(), opts);
    CHECK(report_json(rep) == report_json(rep2));

    auto md = report_markdown(rep);
    CHECK(md.find("## Verdicts") != std::string::npos);
    CHECK(md.find("## Weight-shift audit") != std::string::npos);
    CHECK(md.find("## Completeness") != std::string::npos);
    CHECK(md.find("Dend2_1.rb0.P1") != std::string::npos);
    CHECK(report_markdown_from_json(report_json(rep)) == md);

    // The JSON is schema-stable enough to parse and sanity-check.
    auto doc = nlohmann::json::parse(report_json(rep));
    CHECK(doc["meta"]["seed"] == 42);
    CHECK(doc["verdicts"].size() == 10);
}

TEST_CASE("report_markdown_from_json rejects non-report documents") {
    CHECK_THROWS_AS(report_markdown_from_json("not json"), schema_error);
    CHECK_THROWS_AS(report_markdown_from_json("[]"), schema_error);
    CHECK_THROWS_AS(report_markdown_from_json("{}"), schema_error);
}

TEST_CASE("cli: axioms") {
    auto r = run({"axioms", "--all", "--catalog", DEND_CATALOG_PATH});
    CHECK(r.code == 0);
    CHECK(count_lines_starting(r.out, "PASS ") == 12);
    CHECK(count_lines_starting(r.out, "FAIL ") == 0);

    auto one = run({"axioms", "--algebra", "Dend2_2", "--catalog", DEND_CATALOG_PATH});
    CHECK(one.code == 0);
    CHECK(count_lines_starting(one.out, "PASS ") == 1);
}

TEST_CASE("cli: system prints labelled equations") {
    auto r = run({"system", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "0",
                  "--convention", "row", "--catalog", DEND_CATALOG_PATH});
    CHECK(r.code == 0);
    CHECK(r.out.find("prec(2,2)/e1: a21^2") != std::string::npos);
    CHECK(count_lines_starting(r.out, "prec(") + count_lines_starting(r.out, "succ(") == 16);

    auto rj = run({"system", "--algebra", "Dend2_1", "--op", "averaging", "--format", "json",
                   "--catalog", DEND_CATALOG_PATH});
    CHECK(rj.code == 0);
    auto doc = nlohmann::json::parse(rj.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 1);
    CHECK(doc[0]["equations"].size() == 32);
}

TEST_CASE("cli: solve prints the classified family") {
    auto r = run({"solve", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "0",
                  "--catalog", DEND_CATALOG_PATH});
    CHECK(r.code == 0);
    CHECK(r.out.find("component 1:") != std::string::npos);
    CHECK(r.out.find("a11 = 0") != std::string::npos);
    CHECK(r.out.find("free: a12") != std::string::npos);
}

TEST_CASE("cli: sample is deterministic for a fixed seed") {
    std::vector<std::string> args{"sample", "--algebra", "Dend2_1", "--op",  "rota_baxter",
                                  "--weight", "0", "--count", "3", "--seed", "7",
                                  "--catalog", DEND_CATALOG_PATH};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"sample", "--algebra", "Dend2_1", "--op", "rota_baxter", "--weight", "0",
                  "--count", "3", "--seed", "8", "--catalog", DEND_CATALOG_PATH});
    CHECK(a.out != c.out);
}

TEST_CASE("cli: verify writes the report pair and report re-renders it") {
    fs::path dir = fresh_dir("verify");
    auto r = run({"verify", "--algebra", "Dend2_1", "--out", dir.string(), "--seed", "42",
                  "--count", "5", "--catalog", DEND_CATALOG_PATH});
    CHECK(r.code == 0);
    REQUIRE(fs::exists(dir / "report.json"));
    REQUIRE(fs::exists(dir / "report.md"));
    CHECK(r.out.find("verdicts: 10") != std::string::npos);

    std::string md_bytes = slurp(dir / "report.md");
    auto rr = run({"report", "--out", dir.string()});
    CHECK(rr.code == 0);
    CHECK(rr.out == md_bytes);

    // Corrupt the JSON: re-rendering now fails with an input error.
    std::ofstream(dir / "report.json") << "[]";
    CHECK(run({"report", "--out", dir.string()}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("cli: strict mode flags refuted verdicts via the exit code") {
    // The shipped catalog contains rows the audit refutes under the row
    // convention (that is the point of the audit), so --strict must exit 1.
    fs::path dir = fresh_dir("strict");
    auto lax = run({"verify", "--all", "--seed", "42", "--count", "2", "--out", dir.string(),
                    "--catalog", DEND_CATALOG_PATH});
    auto strict = run({"verify", "--all", "--seed", "42", "--count", "2", "--strict", "--out",
                       dir.string(), "--catalog", DEND_CATALOG_PATH});
    CHECK(lax.code == 0);
    auto doc = nlohmann::json::parse(slurp(dir / "report.json"));
    bool any_refuted = false;
    std::size_t missed = 0;
    for (const auto& v : doc["verdicts"])
        if (v["verdict"] == "REFUTED") any_refuted = true;
    for (const auto& c : doc["completeness"]) missed += c["missed_points"].get<std::size_t>();
    CHECK(strict.code == ((any_refuted || missed > 0) ? 1 : 0));
    fs::remove_all(dir);
}

TEST_CASE("cli: input errors exit 2") {
    CHECK(run({"system", "--algebra", "Dend2_1", "--op", "frobenius", "--catalog",
               DEND_CATALOG_PATH})
              .code == 2);
    CHECK(run({"system", "--algebra", "Dend2_99", "--op", "reynolds", "--catalog",
               DEND_CATALOG_PATH})
              .code == 2);
    CHECK(run({"axioms", "--all", "--catalog", "/nonexistent/catalog.json"}).code == 2);
    CHECK(run({"system", "--algebra", "Dend2_1", "--op", "rota_baxter", "--catalog",
               DEND_CATALOG_PATH})
              .code == 2);  // missing --weight
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("cli: help exits 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--help"}).code == 0);
}
