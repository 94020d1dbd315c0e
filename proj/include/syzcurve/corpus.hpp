#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzcurve/analyze.hpp"

namespace syzcurve {

struct ExpectedValues {
    std::optional<int> mdr;
    std::optional<long> tau;
    std::optional<long> nu;
    std::optional<std::string> verdict;
    std::optional<int> d1, d2;
};

struct CorpusEntry {
    std::string name;
    std::string poly;
    bool cuspidal = false;
    std::optional<ExpectedValues> expected;
};

// Corpus files are JSON lines: one {"name": ..., "poly": ..., "cuspidal":
// ..., "expected": {...}} object per line; blank lines and lines starting
// with '#' are skipped.
std::vector<CorpusEntry> load_corpus(const std::string& path);
CorpusEntry parse_corpus_line(const std::string& line, int lineno);

struct EntryResult {
    std::string name;
    bool analyzed = false;
    std::string error;                  // set when analysis itself failed
    std::vector<std::string> mismatches;
    AnalysisReport report;
    bool ok() const { return analyzed && error.empty() && mismatches.empty(); }
};

struct BatchSummary {
    std::vector<EntryResult> results;
    bool all_ok = true;
};

BatchSummary run_batch(const std::vector<CorpusEntry>& entries, const AnalysisOptions& base);

std::string render_batch_text(const BatchSummary& summary);
std::string render_batch_json(const BatchSummary& summary);  // no timings: byte-stable

}  // namespace syzcurve
