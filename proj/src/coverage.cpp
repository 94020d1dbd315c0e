#include "syzcurve/coverage.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"

namespace syzcurve {

FactorizationProfile factor_profile(long d) {
    if (d < 3) throw DegreeTooSmall("factorization profile needs d >= 3");
    if (d % 2 == 0) throw EvenDegree("factorization profile is defined for odd degrees");

    FactorizationProfile out;
    out.d = d;
    long rest = d;
    for (long p = 3; p * p <= rest; p += 2) {
        if (rest % p) continue;
        PrimePower pp{p, 0, 1};
        while (rest % p == 0) {
            rest /= p;
            ++pp.k;
            pp.value *= p;
        }
        out.factors.push_back(pp);
    }
    if (rest > 1) out.factors.push_back(PrimePower{rest, 1, rest});
    out.m = static_cast<int>(out.factors.size());

    long max_value = 0;
    int max_count = 0;
    for (const auto& pp : out.factors) {
        if (pp.value > max_value) {
            max_value = pp.value;
            max_count = 1;
        } else if (pp.value == max_value) {
            ++max_count;
        }
    }
    // Distinct primes cannot share a prime-power value, but the ladder
    // depends on the maximum being unique, so it is asserted rather than
    // assumed.
    if (max_count != 1)
        throw InternalInconsistency("tied maximal prime-power factors for d = " + std::to_string(d));
    out.p1k1 = max_value;
    out.e1 = d / max_value;
    out.d_prime = (d - 1) / 2;
    if (out.m >= 2) out.r0 = (d - out.e1) / 2;
    return out;
}

const char* coverage_status_name(CoverageStatus s) {
    switch (s) {
        case CoverageStatus::CoveredEven: return "CoveredEven";
        case CoverageStatus::CoveredMdrSmall: return "CoveredMdrSmall";
        case CoverageStatus::CoveredPrimePower: return "CoveredPrimePower";
        case CoverageStatus::CoveredThmA: return "CoveredThmA";
        case CoverageStatus::CoveredThmB: return "CoveredThmB";
        case CoverageStatus::CoveredThmB_i: return "CoveredThmB_i";
        case CoverageStatus::InvalidForCuspidal: return "InvalidForCuspidal";
        default: return "Open";
    }
}

namespace {

std::optional<std::pair<long, long>> gap_interval(const FactorizationProfile& fp) {
    if (!fp.r0) return std::nullopt;
    const long lo = *fp.r0 + 1, hi = fp.d_prime - 1;
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

}  // namespace

CoverageVerdict coverage(long d, long r) {
    if (d < 2) throw DegreeTooSmall("coverage needs d >= 2");
    if (r < 0) throw RangeError("coverage needs r >= 0");

    CoverageVerdict v;
    if (d % 2 == 0) {
        v.status = CoverageStatus::CoveredEven;
        v.citation = "even degree: settled for all even d";
        return v;
    }
    if (r <= 1) {
        v.status = CoverageStatus::CoveredMdrSmall;
        v.citation = r == 0 ? "mdr = 0: union of concurrent lines"
                            : "mdr = 1: always nearly free for rational cuspidal curves";
        return v;
    }
    FactorizationProfile fp = factor_profile(d);
    v.gap = gap_interval(fp);
    if (fp.m == 1) {
        v.status = CoverageStatus::CoveredPrimePower;
        v.citation = "odd prime-power degree: settled case";
        return v;
    }
    if (r > fp.d_prime) {
        v.status = CoverageStatus::InvalidForCuspidal;
        v.citation = "mdr > (d-1)/2 contradicts the bound for rational cuspidal curves";
        return v;
    }
    if (r == fp.d_prime) {
        v.status = CoverageStatus::CoveredThmA;
        v.citation = "boundary case mdr = (d-1)/2";
        return v;
    }
    if (r <= *fp.r0) {
        if (fp.e1 == 3) {
            v.status = CoverageStatus::CoveredThmB_i;
            v.citation = "threshold case for d = 3 p^k: every mdr is covered";
        } else {
            v.status = CoverageStatus::CoveredThmB;
            v.citation = "threshold case mdr <= (d - e1)/2";
        }
        return v;
    }
    v.status = CoverageStatus::Open;
    v.citation = "inside the uncovered interval";
    return v;
}

ExceptionTable exception_table(long d_max) {
    if (d_max < 3) throw DegreeTooSmall("exception table needs d_max >= 3");
    ExceptionTable out;
    std::optional<long> min_r;
    for (long d = 3; d <= d_max; d += 2) {
        FactorizationProfile fp = factor_profile(d);
        auto gap = gap_interval(fp);
        if (!gap) continue;
        out.open_cases.push_back(OpenCase{d, gap->first, gap->second});
        if (!min_r || gap->first < *min_r) min_r = gap->first;
    }
    out.min_uncovered_r = min_r;
    return out;
}

const std::vector<OpenCase>& reference_open_cases_90() {
    static const std::vector<OpenCase> table = {
        {35, 16, 16}, {45, 21, 21}, {55, 26, 26}, {63, 29, 30},
        {65, 31, 31}, {77, 36, 37}, {85, 41, 41},
    };
    return table;
}

long remark_bound(long d) {
    if (d < 3 || d % 2 == 0) throw NotApplicable("remark bound applies to odd d >= 3");
    if (d == 15) throw NotApplicable("d = 15 is the excluded case of the bound");
    FactorizationProfile fp = factor_profile(d);
    if (fp.m < 2) throw NotApplicable("remark bound applies to degrees with two or more prime factors");
    const long bound = (3 * d + 6) / 7;  // ceil(3d/7)
    if (*fp.r0 < bound)
        throw InternalInconsistency("r0 = " + std::to_string(*fp.r0) + " below ceil(3d/7) = " +
                                    std::to_string(bound) + " for d = " + std::to_string(d));
    return bound;
}

ConjectureReport conjecture_report(JacobianGraded& jac, SaturationEngine& sat) {
    const CurveContext& ctx = jac.context();
    if (!ctx.assume_rational_cuspidal)
        throw NotApplicable("conjecture report requires the rational-cuspidal assertion");

    ConjectureReport out;
    out.cls = classify(jac, sat);
    out.cov = coverage(ctx.d, out.cls.r);
    out.confirms = out.cls.verdict == Verdict::Free || out.cls.verdict == Verdict::NearlyFree;
    out.counterexample_candidate = !out.confirms;
    if (out.counterexample_candidate) {
        out.detail = "curve asserted rational cuspidal classifies as Neither (nu = " +
                     std::to_string(out.cls.nu) + ", tau = " + std::to_string(out.cls.tau) +
                     ", mdr = " + std::to_string(out.cls.r) +
                     "); either the assertion is wrong or this is a counterexample candidate";
    } else {
        out.detail = std::string("conjecture confirmed on this instance: ") +
                     verdict_name(out.cls.verdict);
    }
    return out;
}

}  // namespace syzcurve
