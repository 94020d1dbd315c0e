#include "syzcurve/classify.hpp"

#include "syzcurve/errors.hpp"

namespace syzcurve {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Free: return "Free";
        case Verdict::NearlyFree: return "NearlyFree";
        default: return "Neither";
    }
}

long tau_formula(long d, long r) {
    if (d < 2) throw DegreeTooSmall("tau formula needs degree >= 2");
    if (r < 0) throw RangeError("tau formula needs r >= 0");
    return (d - 1) * (d - 1) - r * (d - 1 - r);
}

Classification classify(JacobianGraded& jac, SaturationEngine& sat) {
    const int d = jac.context().d;
    Classification cls;
    cls.r = jac.mdr();
    cls.tau = jac.tjurina();
    cls.nu = sat.nu();
    cls.tau_dr = tau_formula(d, cls.r);

    if (cls.nu == 0) {
        cls.verdict = Verdict::Free;
        cls.d1 = cls.r;
        cls.d2 = d - 1 - cls.r;
    } else if (cls.nu == 1) {
        cls.verdict = Verdict::NearlyFree;
        cls.d1 = cls.r;
        cls.d2 = d - cls.r;
    } else {
        cls.verdict = Verdict::Neither;
    }

    // Cross-check against the tau characterization: tau = tau(d,r) iff
    // free, tau = tau(d,r) - 1 iff nearly free. Any mismatch means the
    // saturation or stabilization machinery broke.
    const bool tau_free = cls.tau == cls.tau_dr;
    const bool tau_nearly = cls.tau == cls.tau_dr - 1;
    if (cls.verdict == Verdict::Free && !tau_free)
        throw InternalInconsistency("nu = 0 but tau != tau(d,r): " + std::to_string(cls.tau) +
                                    " vs " + std::to_string(cls.tau_dr));
    if (cls.verdict == Verdict::NearlyFree && !tau_nearly)
        throw InternalInconsistency("nu = 1 but tau != tau(d,r) - 1: " + std::to_string(cls.tau) +
                                    " vs " + std::to_string(cls.tau_dr - 1));
    if (cls.verdict == Verdict::Neither && (tau_free || tau_nearly))
        throw InternalInconsistency("nu = " + std::to_string(cls.nu) +
                                    " yet tau matches a free/nearly-free value");

    if (cls.verdict == Verdict::Neither && cls.tau > cls.tau_dr)
        cls.warnings.push_back("tau exceeds tau(d,r); maximality violated, result suspect");

    if (cls.r == 0)
        cls.note = "mdr(f) = 0: the curve is a union of lines through one point";
    return cls;
}

BoundCheck mdr_bound_check(const Classification& cls, int d, bool assume_rational_cuspidal) {
    BoundCheck out;
    const long r = cls.r;
    if (cls.verdict == Verdict::Free && 2 * r > d - 1)
        throw BoundViolated("free curve with mdr = " + std::to_string(r) + " > (d-1)/2, d = " +
                            std::to_string(d));
    if (cls.verdict == Verdict::NearlyFree && 2 * r > d)
        throw BoundViolated("nearly free curve with mdr = " + std::to_string(r) + " > d/2, d = " +
                            std::to_string(d));
    if (assume_rational_cuspidal && d % 2 == 1) {
        const long d_prime = (d - 1) / 2;
        if (r > d_prime)
            throw BoundViolated("rational cuspidal curve of odd degree with mdr = " +
                                std::to_string(r) + " > (d-1)/2; the cuspidality assertion or an "
                                "upstream computation is wrong");
        out.thmA_boundary = (r == d_prime);
        if (out.thmA_boundary)
            out.detail = "mdr reaches (d-1)/2, the odd-degree boundary case";
    }
    out.ok = true;
    if (out.detail.empty()) out.detail = "all applicable mdr bounds hold";
    return out;
}

}  // namespace syzcurve
