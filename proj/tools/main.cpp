// Command-line front end: analyze one curve, run a corpus batch, print the
// conjecture coverage table, or dump graded dimension tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "syzcurve/analyze.hpp"
#include "syzcurve/corpus.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct CommonFlags {
    bool json = false;
    bool certified = false;
    unsigned threads = 0;
};

syzcurve::AnalysisOptions make_options(const CommonFlags& flags, bool cuspidal) {
    syzcurve::AnalysisOptions opt;
    opt.assume_rational_cuspidal = cuspidal;
    opt.mode = flags.certified ? syzcurve::RankMode::Certified : syzcurve::RankMode::MultiModular;
    opt.threads = flags.threads;
    return opt;
}

int cmd_analyze(const std::string& poly_text, bool cuspidal, const CommonFlags& flags) {
    syzcurve::HomPoly f = syzcurve::parse_poly(poly_text);
    syzcurve::AnalysisReport report = syzcurve::analyze(f, make_options(flags, cuspidal));
    if (flags.json)
        std::cout << syzcurve::render_json(report, true) << "\n";
    else
        std::cout << syzcurve::render_text(report);
    return kExitOk;
}

int cmd_batch(const std::string& path, const CommonFlags& flags) {
    auto entries = syzcurve::load_corpus(path);
    syzcurve::BatchSummary summary = syzcurve::run_batch(entries, make_options(flags, false));
    if (flags.json)
        std::cout << syzcurve::render_batch_json(summary) << "\n";
    else
        std::cout << syzcurve::render_batch_text(summary);
    return summary.all_ok ? kExitOk : kExitMismatch;
}

int cmd_coverage(long d_max, bool check_reference, const CommonFlags& flags) {
    syzcurve::ExceptionTable table = syzcurve::exception_table(d_max);

    if (flags.json) {
        std::cout << "{\n  \"d_max\": " << d_max << ",\n  \"open_cases\": [";
        for (std::size_t i = 0; i < table.open_cases.size(); ++i) {
            const auto& oc = table.open_cases[i];
            std::cout << (i ? ", " : "") << "{\"d\": " << oc.d << ", \"gap\": [" << oc.gap_lo
                      << ", " << oc.gap_hi << "]}";
        }
        std::cout << "],\n  \"min_uncovered_mdr\": ";
        if (table.min_uncovered_r)
            std::cout << *table.min_uncovered_r;
        else
            std::cout << "null";
        std::cout << "\n}\n";
    } else {
        std::cout << "open cases for odd d <= " << d_max << ":\n";
        if (table.open_cases.empty()) std::cout << "  none; every (d, mdr) pair is covered\n";
        long open_pairs = 0;
        for (const auto& oc : table.open_cases) {
            std::cout << "  d = " << oc.d << ": mdr in [" << oc.gap_lo << ", " << oc.gap_hi
                      << "]\n";
            open_pairs += oc.gap_hi - oc.gap_lo + 1;
        }
        const long odd_degrees = d_max < 3 ? 0 : (d_max - 3) / 2 + 1;
        std::cout << table.open_cases.size() << " open degree(s) out of " << odd_degrees
                  << " odd degrees, " << open_pairs << " open (d, mdr) pair(s)\n";
        if (table.min_uncovered_r)
            std::cout << "every mdr <= " << (*table.min_uncovered_r - 1)
                      << " is covered regardless of degree\n";
    }

    if (check_reference) {
        bool ok = d_max == 90;
        if (ok) {
            const auto& ref = syzcurve::reference_open_cases_90();
            ok = table.open_cases.size() == ref.size();
            for (std::size_t i = 0; ok && i < ref.size(); ++i)
                ok = table.open_cases[i].d == ref[i].d &&
                     table.open_cases[i].gap_lo == ref[i].gap_lo &&
                     table.open_cases[i].gap_hi == ref[i].gap_hi;
            ok = ok && table.min_uncovered_r && *table.min_uncovered_r == 16;
        } else {
            std::cerr << "--check-paper requires d_max = 90\n";
        }
        std::cout << (ok ? "reference check: PASS\n" : "reference check: FAIL\n");
        return ok ? kExitOk : kExitMismatch;
    }
    return kExitOk;
}

int cmd_hilbert(const std::string& poly_text, bool cuspidal, const CommonFlags& flags) {
    syzcurve::HomPoly f = syzcurve::parse_poly(poly_text);
    syzcurve::AnalysisReport report = syzcurve::analyze(f, make_options(flags, cuspidal));
    if (flags.json) {
        std::cout << syzcurve::render_json(report, true) << "\n";
        return kExitOk;
    }
    std::cout << "k:";
    for (int k = report.milnor.lo(); k <= report.milnor.hi(); ++k) std::cout << " " << k;
    std::cout << "\nmilnor:";
    for (int k = report.milnor.lo(); k <= report.milnor.hi(); ++k)
        std::cout << " " << report.milnor.at(k);
    std::cout << "\nar:";
    for (int q = report.ar.lo(); q <= report.ar.hi(); ++q) std::cout << " " << report.ar.at(q);
    std::cout << "\ndefect:";
    for (int k = 0; k <= report.profile.T; ++k) std::cout << " " << report.profile.n.at(k);
    std::cout << "\n";
    return kExitOk;
}

int cmd_mdr(const std::string& poly_text, const CommonFlags& flags) {
    syzcurve::HomPoly f = syzcurve::parse_poly(poly_text);
    syzcurve::CurveContext ctx = syzcurve::make_context(f, false);
    syzcurve::JacobianGraded jac(
        ctx, syzcurve::EngineOptions{
                 flags.certified ? syzcurve::RankMode::Certified : syzcurve::RankMode::MultiModular,
                 flags.threads});
    if (flags.json)
        std::cout << "{\"mdr\": " << jac.mdr() << "}\n";
    else
        std::cout << jac.mdr() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian syzygy invariants of reduced plane curves: mdr, Tjurina number, "
                 "defect module, free/nearly-free classification, and conjecture coverage"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string poly_text, corpus_path;
    bool cuspidal = false, check_reference = false;
    long d_max = 90;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", flags.json, "machine-readable output");
        sub->add_flag("--certified-linalg", flags.certified,
                      "force fraction-free certified rank computations");
        sub->add_option("--threads", flags.threads, "worker thread cap (0 = hardware)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full analysis of one curve");
    analyze->add_option("poly", poly_text, "curve equation, e.g. \"y^2*z - x^3\"")->required();
    analyze->add_flag("--cuspidal", cuspidal, "assert the curve is rational cuspidal");
    add_common(analyze);

    CLI::App* batch = app.add_subcommand("batch", "analyze a corpus file and compare expectations");
    batch->add_option("corpus", corpus_path, "path to a JSON-lines corpus")->required();
    add_common(batch);

    CLI::App* coverage = app.add_subcommand("coverage", "conjecture coverage table for odd degrees");
    coverage->add_option("d_max", d_max, "largest degree to tabulate")->required();
    coverage->add_flag("--check-paper", check_reference,
                       "compare the d_max=90 table against the built-in reference list");
    add_common(coverage);

    CLI::App* hilbert = app.add_subcommand("hilbert", "dump graded dimension tables");
    hilbert->add_option("poly", poly_text, "curve equation")->required();
    hilbert->add_flag("--cuspidal", cuspidal, "assert the curve is rational cuspidal");
    add_common(hilbert);

    CLI::App* mdr = app.add_subcommand("mdr", "minimal degree of a Jacobian relation");
    mdr->add_option("poly", poly_text, "curve equation")->required();
    add_common(mdr);

    CLI11_PARSE(app, argc, argv);

    auto emit_error = [&](const char* code, const char* what, int exit_code) {
        if (flags.json)
            std::cout << "{\"error\": {\"code\": \"" << code << "\", \"message\": "
                      << nlohmann::json(std::string(what)).dump() << "}}\n";
        std::cerr << code << ": " << what << "\n";
        return exit_code;
    };

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(poly_text, cuspidal, flags);
        if (app.got_subcommand(batch)) return cmd_batch(corpus_path, flags);
        if (app.got_subcommand(coverage)) return cmd_coverage(d_max, check_reference, flags);
        if (app.got_subcommand(hilbert)) return cmd_hilbert(poly_text, cuspidal, flags);
        if (app.got_subcommand(mdr)) return cmd_mdr(poly_text, flags);
    } catch (const syzcurve::InternalError& e) {
        return emit_error("internal-inconsistency", e.what(), kExitInternal);
    } catch (const syzcurve::InputError& e) {
        return emit_error("input-error", e.what(), kExitInput);
    }
    return kExitOk;
}
