#include "syzcurve/analyze.hpp"

#include <json.hpp>

#include <sstream>

#include "syzcurve/errors.hpp"
#include "syzcurve/util.hpp"

namespace syzcurve {

AnalysisReport analyze(const HomPoly& f, const AnalysisOptions& opt) {
    Timer total;
    AnalysisReport report;

    Timer t_ctx;
    CurveContext ctx = make_context(f, opt.assume_rational_cuspidal);
    report.poly_text = render(f);
    report.degree = ctx.d;
    report.assume_rational_cuspidal = ctx.assume_rational_cuspidal;
    report.timings.context_ms = t_ctx.ms();

    JacobianGraded jac(ctx, EngineOptions{opt.mode, opt.threads});
    SaturationEngine sat(jac);

    Timer t_mdr;
    jac.mdr();
    report.timings.mdr_ms = t_mdr.ms();

    Timer t_tau;
    jac.tjurina();
    report.timings.tjurina_ms = t_tau.ms();

    Timer t_profile;
    report.profile = sat.defect_profile();
    report.cls = classify(jac, sat);
    report.timings.profile_ms = t_profile.ms();

    report.bounds = mdr_bound_check(report.cls, ctx.d, ctx.assume_rational_cuspidal);
    report.milnor = jac.milnor_table(0, ctx.T + 2);
    report.ar = jac.ar_table(0, ctx.d - 1);

    if (ctx.assume_rational_cuspidal) {
        Timer t_mono;
        report.walther = walther_check(jac, report.profile);
        ConjectureReport cr = conjecture_report(jac, sat);
        report.cov = cr.cov;
        report.conjecture_confirmed = cr.confirms;
        report.timings.monodromy_ms = t_mono.ms();
    }

    report.timings.total_ms = total.ms();
    return report;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "curve: " << r.poly_text << "\n";
    out << "degree d = " << r.degree << ", T = 3d-6 = " << r.profile.T
        << (r.assume_rational_cuspidal ? "  [asserted rational cuspidal]" : "") << "\n";
    out << "mdr(f) = " << r.cls.r << ", tau(C) = " << r.cls.tau << ", nu(f) = " << r.cls.nu
        << ", tau(d,r) = " << r.cls.tau_dr << "\n";
    out << "verdict: " << verdict_name(r.cls.verdict);
    if (r.cls.d1)
        out << "  exponents (d1, d2) = (" << *r.cls.d1 << ", " << *r.cls.d2 << ")";
    out << "\n";
    if (!r.cls.note.empty()) out << "note: " << r.cls.note << "\n";
    for (const auto& w : r.cls.warnings) out << "warning: " << w << "\n";

    out << "defect profile n(k), k = 0.." << r.profile.T << ":";
    for (int k = 0; k <= r.profile.T; ++k) out << " " << r.profile.n.at(k);
    out << "\n";
    if (r.profile.escalations > 0)
        out << "warning: saturation floor escalated " << r.profile.escalations << " time(s)\n";

    out << "Milnor algebra dims, k = 0.." << r.milnor.hi() << ":";
    for (int k = r.milnor.lo(); k <= r.milnor.hi(); ++k) out << " " << r.milnor.at(k);
    out << "\n";
    out << "syzygy dims AR(f)_q, q = 0.." << r.ar.hi() << ":";
    for (int q = r.ar.lo(); q <= r.ar.hi(); ++q) out << " " << r.ar.at(q);
    out << "\n";
    out << "bounds: " << r.bounds.detail << "\n";

    if (r.walther) {
        out << "eigenspace inequality: " << (r.walther->all_pass ? "pass" : "FAIL")
            << " at every j = 2.." << r.degree << "\n";
    }
    if (r.cov) {
        out << "coverage: " << coverage_status_name(r.cov->status) << " (" << r.cov->citation
            << ")";
        if (r.cov->gap)
            out << "  open interval [" << r.cov->gap->first << ", " << r.cov->gap->second << "]";
        out << "\n";
    }
    if (r.conjecture_confirmed)
        out << "conjecture: " << (*r.conjecture_confirmed ? "confirmed on this instance"
                                                          : "NOT confirmed; see diagnostics")
            << "\n";

    out << "timings: total " << r.timings.total_ms << " ms (mdr " << r.timings.mdr_ms
        << ", tjurina " << r.timings.tjurina_ms << ", profile " << r.timings.profile_ms
        << ", monodromy " << r.timings.monodromy_ms << ")\n";
    return out.str();
}

std::string render_json(const AnalysisReport& r, bool with_timings) {
    nlohmann::ordered_json j;
    j["poly"] = r.poly_text;
    j["degree"] = r.degree;
    j["cuspidal_asserted"] = r.assume_rational_cuspidal;
    j["mdr"] = r.cls.r;
    j["tau"] = r.cls.tau;
    j["nu"] = r.cls.nu;
    j["tau_dr"] = r.cls.tau_dr;
    j["verdict"] = verdict_name(r.cls.verdict);
    if (r.cls.d1) {
        j["exponents"] = {*r.cls.d1, *r.cls.d2};
    } else {
        j["exponents"] = nullptr;
    }
    if (!r.cls.note.empty()) j["note"] = r.cls.note;
    if (!r.cls.warnings.empty()) j["warnings"] = r.cls.warnings;

    nlohmann::ordered_json defect;
    defect["T"] = r.profile.T;
    std::vector<long> n;
    for (int k = 0; k <= r.profile.T; ++k) n.push_back(r.profile.n.at(k));
    defect["n"] = n;
    defect["escalations"] = r.profile.escalations;
    j["defect"] = defect;

    std::vector<long> milnor, ar;
    for (int k = r.milnor.lo(); k <= r.milnor.hi(); ++k) milnor.push_back(r.milnor.at(k));
    for (int q = r.ar.lo(); q <= r.ar.hi(); ++q) ar.push_back(r.ar.at(q));
    j["milnor_dims"] = milnor;
    j["ar_dims"] = ar;
    j["bounds_ok"] = r.bounds.ok;
    j["thmA_boundary"] = r.bounds.thmA_boundary;

    if (r.walther) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : r.walther->rows) {
            nlohmann::ordered_json jr;
            jr["j"] = row.j;
            jr["lhs"] = row.lhs;
            jr["e2_k"] = row.e2_k;
            jr["e2_dk"] = row.e2_dk;
            jr["h1"] = row.h1;
            jr["h2"] = row.h2;
            jr["vacuous"] = row.vacuous;
            jr["pass"] = row.pass;
            rows.push_back(jr);
        }
        j["walther"] = {{"all_pass", r.walther->all_pass}, {"rows", rows}};
    }
    if (r.cov) {
        nlohmann::ordered_json cov;
        cov["status"] = coverage_status_name(r.cov->status);
        if (r.cov->gap)
            cov["gap"] = {r.cov->gap->first, r.cov->gap->second};
        else
            cov["gap"] = nullptr;
        cov["citation"] = r.cov->citation;
        j["coverage"] = cov;
    }
    if (r.conjecture_confirmed) j["conjecture_confirmed"] = *r.conjecture_confirmed;

    if (with_timings) {
        nlohmann::ordered_json t;
        t["total_ms"] = r.timings.total_ms;
        t["mdr_ms"] = r.timings.mdr_ms;
        t["tjurina_ms"] = r.timings.tjurina_ms;
        t["profile_ms"] = r.timings.profile_ms;
        t["monodromy_ms"] = r.timings.monodromy_ms;
        j["timings"] = t;
    }
    return j.dump(2);
}

}  // namespace syzcurve
