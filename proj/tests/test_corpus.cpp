#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "syzcurve/corpus.hpp"
#include "syzcurve/errors.hpp"

using namespace syzcurve;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("/tmp/syzcurve_test_") + std::to_string(rand()) + ".jsonl";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("parses entries, comments, and blanks") {
    TempFile tmp(
        "# comment\n"
        "\n"
        "{\"name\": \"t\", \"poly\": \"x*y*z\", \"expected\": {\"tau\": 3}}\n"
        "{\"name\": \"c\", \"poly\": \"y^2*z - x^3\", \"cuspidal\": true}\n");
    auto entries = load_corpus(tmp.path);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "t");
    CHECK_FALSE(entries[0].cuspidal);
    REQUIRE(entries[0].expected);
    CHECK(*entries[0].expected->tau == 3);
    CHECK(entries[1].cuspidal);
    CHECK_FALSE(entries[1].expected);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.jsonl"), FileNotFound);
    TempFile bad("{\"poly\": \"x\"}\n");
    CHECK_THROWS_AS(load_corpus(bad.path), CorpusParseError);
    TempFile malformed("{not json\n");
    CHECK_THROWS_AS(load_corpus(malformed.path), CorpusParseError);
    TempFile badtype("{\"name\": \"a\", \"poly\": \"x*y\", \"cuspidal\": \"yes\"}\n");
    CHECK_THROWS_AS(load_corpus(badtype.path), CorpusParseError);
}

TEST_CASE("empty corpus is a successful empty summary") {
    TempFile tmp("# nothing here\n");
    auto entries = load_corpus(tmp.path);
    BatchSummary summary = run_batch(entries, AnalysisOptions{});
    CHECK(summary.all_ok);
    CHECK(summary.results.empty());
}

TEST_CASE("batch matches pinned expectations") {
    TempFile tmp(
        "{\"name\": \"triangle\", \"poly\": \"x*y*z\", \"expected\": "
        "{\"mdr\": 1, \"tau\": 3, \"nu\": 0, \"verdict\": \"Free\", \"d1\": 1, \"d2\": 1}}\n"
        "{\"name\": \"cusp\", \"poly\": \"y^2*z - x^3\", \"cuspidal\": true, \"expected\": "
        "{\"mdr\": 1, \"tau\": 2, \"nu\": 1, \"verdict\": \"NearlyFree\", \"d1\": 1, \"d2\": 2}}\n");
    BatchSummary summary = run_batch(load_corpus(tmp.path), AnalysisOptions{});
    CHECK(summary.all_ok);
}

TEST_CASE("a wrong expectation is reported by name") {
    TempFile tmp(
        "{\"name\": \"triangle-bad\", \"poly\": \"x*y*z\", \"expected\": {\"tau\": 4}}\n");
    BatchSummary summary = run_batch(load_corpus(tmp.path), AnalysisOptions{});
    CHECK_FALSE(summary.all_ok);
    REQUIRE(summary.results.size() == 1);
    CHECK(summary.results[0].name == "triangle-bad");
    REQUIRE(!summary.results[0].mismatches.empty());
    CHECK(summary.results[0].mismatches[0].find("tau") != std::string::npos);
    CHECK(render_batch_text(summary).find("triangle-bad") != std::string::npos);
}

TEST_CASE("analysis errors are carried, not thrown") {
    TempFile tmp("{\"name\": \"bad-poly\", \"poly\": \"x^2 + y\"}\n");
    BatchSummary summary = run_batch(load_corpus(tmp.path), AnalysisOptions{});
    CHECK_FALSE(summary.all_ok);
    CHECK_FALSE(summary.results[0].error.empty());
}

TEST_CASE("machine output is byte-identical across runs") {
    TempFile tmp(
        "{\"name\": \"cusp\", \"poly\": \"y^2*z - x^3\", \"cuspidal\": true}\n"
        "{\"name\": \"triangle\", \"poly\": \"x*y*z\"}\n");
    auto entries = load_corpus(tmp.path);
    std::string a = render_batch_json(run_batch(entries, AnalysisOptions{}));
    std::string b = render_batch_json(run_batch(entries, AnalysisOptions{}));
    CHECK(a == b);
}

TEST_CASE("shipped corpus passes end to end") {
    auto entries = load_corpus(std::string(SYZCURVE_SOURCE_DIR) + "/corpus/curves.jsonl");
    REQUIRE(entries.size() >= 10);
    // Keep the unit suite quick: drop the heaviest entries, the acceptance
    // suite runs the corpus in full.
    std::vector<CorpusEntry> light;
    for (const auto& e : entries)
        if (e.name != "one-cusp-d15" && e.name != "one-cusp-d9") light.push_back(e);
    BatchSummary summary = run_batch(light, AnalysisOptions{});
    for (const auto& res : summary.results) {
        INFO(res.name);
        CHECK(res.ok());
        CHECK(res.report.profile.escalations == 0);
    }
    CHECK(summary.all_ok);
}

}  // TEST_SUITE
