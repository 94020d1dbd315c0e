#include "syzcurve/corpus.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"

namespace syzcurve {

CorpusEntry parse_corpus_line(const std::string& line, int lineno) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw CorpusParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    auto fail = [&](const std::string& what) -> CorpusParseError {
        return CorpusParseError("line " + std::to_string(lineno) + ": " + what);
    };
    if (!j.is_object()) throw fail("entry is not an object");
    CorpusEntry entry;
    if (!j.contains("name") || !j["name"].is_string()) throw fail("missing string field 'name'");
    if (!j.contains("poly") || !j["poly"].is_string()) throw fail("missing string field 'poly'");
    entry.name = j["name"].get<std::string>();
    entry.poly = j["poly"].get<std::string>();
    if (j.contains("cuspidal")) {
        if (!j["cuspidal"].is_boolean()) throw fail("'cuspidal' must be a boolean");
        entry.cuspidal = j["cuspidal"].get<bool>();
    }
    if (j.contains("expected")) {
        const auto& e = j["expected"];
        if (!e.is_object()) throw fail("'expected' must be an object");
        ExpectedValues ev;
        auto get_int = [&](const char* key) -> std::optional<long> {
            if (!e.contains(key)) return std::nullopt;
            if (!e[key].is_number_integer()) throw fail(std::string("'") + key + "' must be an integer");
            return e[key].get<long>();
        };
        if (auto v = get_int("mdr")) ev.mdr = static_cast<int>(*v);
        ev.tau = get_int("tau");
        ev.nu = get_int("nu");
        if (auto v = get_int("d1")) ev.d1 = static_cast<int>(*v);
        if (auto v = get_int("d2")) ev.d2 = static_cast<int>(*v);
        if (e.contains("verdict")) {
            if (!e["verdict"].is_string()) throw fail("'verdict' must be a string");
            ev.verdict = e["verdict"].get<std::string>();
        }
        entry.expected = ev;
    }
    return entry;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open corpus file: " + path);
    std::vector<CorpusEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        entries.push_back(parse_corpus_line(line, lineno));
    }
    return entries;
}

namespace {

void compare_expected(const ExpectedValues& e, const AnalysisReport& r,
                      std::vector<std::string>& mismatches) {
    auto check = [&](const char* what, auto expected, auto actual) {
        if (expected != actual) {
            std::ostringstream msg;
            msg << what << ": expected " << expected << ", computed " << actual;
            mismatches.push_back(msg.str());
        }
    };
    if (e.mdr) check("mdr", *e.mdr, r.cls.r);
    if (e.tau) check("tau", *e.tau, r.cls.tau);
    if (e.nu) check("nu", *e.nu, r.cls.nu);
    if (e.verdict) check("verdict", *e.verdict, std::string(verdict_name(r.cls.verdict)));
    if (e.d1) {
        if (!r.cls.d1)
            mismatches.push_back("d1: expected " + std::to_string(*e.d1) + ", none computed");
        else
            check("d1", *e.d1, *r.cls.d1);
    }
    if (e.d2) {
        if (!r.cls.d2)
            mismatches.push_back("d2: expected " + std::to_string(*e.d2) + ", none computed");
        else
            check("d2", *e.d2, *r.cls.d2);
    }
}

}  // namespace

BatchSummary run_batch(const std::vector<CorpusEntry>& entries, const AnalysisOptions& base) {
    BatchSummary summary;
    summary.results.reserve(entries.size());
    for (const auto& entry : entries) {
        EntryResult res;
        res.name = entry.name;
        try {
            HomPoly f = parse_poly(entry.poly);
            AnalysisOptions opt = base;
            opt.assume_rational_cuspidal = entry.cuspidal;
            res.report = analyze(f, opt);
            res.analyzed = true;
            if (entry.expected) compare_expected(*entry.expected, res.report, res.mismatches);
            if (res.report.profile.escalations > 0)
                res.mismatches.push_back("saturation escalated; flagging for review");
        } catch (const Error& e) {
            res.error = e.what();
        }
        if (!res.ok()) summary.all_ok = false;
        summary.results.push_back(std::move(res));
    }
    return summary;
}

std::string render_batch_text(const BatchSummary& summary) {
    std::ostringstream out;
    for (const auto& res : summary.results) {
        out << (res.ok() ? "[pass] " : "[FAIL] ") << res.name;
        if (res.analyzed) {
            const auto& c = res.report.cls;
            out << "  d=" << res.report.degree << " mdr=" << c.r << " tau=" << c.tau
                << " nu=" << c.nu << " " << verdict_name(c.verdict);
            if (c.d1) out << " (" << *c.d1 << "," << *c.d2 << ")";
            out << "  " << res.report.timings.total_ms << " ms";
        }
        out << "\n";
        if (!res.error.empty()) out << "       error: " << res.error << "\n";
        for (const auto& m : res.mismatches) out << "       mismatch: " << m << "\n";
    }
    std::size_t passed = 0;
    for (const auto& res : summary.results)
        if (res.ok()) ++passed;
    out << passed << "/" << summary.results.size() << " entries pass\n";
    return out.str();
}

std::string render_batch_json(const BatchSummary& summary) {
    nlohmann::ordered_json j;
    j["all_ok"] = summary.all_ok;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& res : summary.results) {
        nlohmann::ordered_json e;
        e["name"] = res.name;
        e["ok"] = res.ok();
        if (!res.error.empty()) e["error"] = res.error;
        if (!res.mismatches.empty()) e["mismatches"] = res.mismatches;
        if (res.analyzed)
            e["report"] = nlohmann::ordered_json::parse(render_json(res.report, false));
        arr.push_back(e);
    }
    j["entries"] = arr;
    return j.dump(2);
}

}  // namespace syzcurve
