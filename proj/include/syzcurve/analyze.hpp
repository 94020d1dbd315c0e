#pragma once

#include <optional>
#include <string>

#include "syzcurve/coverage.hpp"
#include "syzcurve/monodromy.hpp"

namespace syzcurve {

struct AnalysisOptions {
    bool assume_rational_cuspidal = false;
    RankMode mode = RankMode::MultiModular;
    unsigned threads = 0;
};

struct Timings {
    double context_ms = 0;
    double mdr_ms = 0;
    double tjurina_ms = 0;
    double profile_ms = 0;
    double monodromy_ms = 0;
    double total_ms = 0;
};

// Everything the pipeline computes for one curve. The monodromy and
// coverage sections are present only when the input is asserted rational
// cuspidal.
struct AnalysisReport {
    std::string poly_text;
    int degree = 0;
    bool assume_rational_cuspidal = false;

    Classification cls;
    DefectProfile profile;
    BoundCheck bounds;
    GradedDims milnor;  // degrees 0..T+2
    GradedDims ar;      // degrees 0..d-1

    std::optional<MonodromyReport> walther;
    std::optional<CoverageVerdict> cov;
    std::optional<bool> conjecture_confirmed;

    Timings timings;
};

AnalysisReport analyze(const HomPoly& f, const AnalysisOptions& opt = {});

std::string render_text(const AnalysisReport& report);

// Machine-readable rendering with a fixed key order. Timings are included
// only when with_timings is set, so batch output stays byte-identical
// across runs.
std::string render_json(const AnalysisReport& report, bool with_timings);

}  // namespace syzcurve
