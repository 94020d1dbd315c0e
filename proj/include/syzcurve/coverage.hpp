#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/classify.hpp"

namespace syzcurve {

struct PrimePower {
    long p = 0;
    int k = 0;
    long value = 0;  // p^k
};

// Arithmetic profile of an odd degree d: prime factorization, the largest
// prime-power factor p1^k1, e1 = d / p1^k1, d' = (d-1)/2, and the
// threshold r0 = (d - e1)/2 (defined only when d has at least two prime
// factors).
struct FactorizationProfile {
    long d = 0;
    std::vector<PrimePower> factors;
    int m = 0;
    long p1k1 = 0;
    long e1 = 0;
    long d_prime = 0;
    std::optional<long> r0;
};

FactorizationProfile factor_profile(long d);

enum class CoverageStatus {
    CoveredEven,
    CoveredMdrSmall,
    CoveredPrimePower,
    CoveredThmA,
    CoveredThmB,
    CoveredThmB_i,
    InvalidForCuspidal,
    Open,
};

const char* coverage_status_name(CoverageStatus s);

struct CoverageVerdict {
    CoverageStatus status = CoverageStatus::Open;
    std::optional<std::pair<long, long>> gap;  // [r0+1, d'-1] when nonempty
    std::string citation;
};

// Decision ladder for the free-or-nearly-free conjecture at (d, r):
// even degrees and r <= 1 and prime-power degrees are settled results;
// r = d' is the boundary theorem; r <= r0 the threshold theorem (with a
// dedicated label for d = 3 p^k, where the gap closes entirely); r > d'
// contradicts the bound for rational cuspidal curves; anything else is
// open inside [r0+1, d'-1].
CoverageVerdict coverage(long d, long r);

struct OpenCase {
    long d = 0;
    long gap_lo = 0, gap_hi = 0;
};

struct ExceptionTable {
    std::vector<OpenCase> open_cases;           // odd d <= d_max with a nonempty gap
    std::optional<long> min_uncovered_r;        // least r not covered by any listed case
};

ExceptionTable exception_table(long d_max);

// The built-in reference list of open cases for d <= 90, used by the CLI's
// --check-paper mode.
const std::vector<OpenCase>& reference_open_cases_90();

// ceil(3d/7), together with the guarantee r0 >= ceil(3d/7) for odd
// composite d != 15 with at least two prime factors.
long remark_bound(long d);

struct ConjectureReport {
    Classification cls;
    CoverageVerdict cov;
    bool confirms = false;
    bool counterexample_candidate = false;
    std::string detail;
};

// Full pipeline for a curve asserted rational cuspidal: classification,
// the covering result for (d, mdr), and whether this instance confirms
// the free-or-nearly-free conjecture.
ConjectureReport conjecture_report(JacobianGraded& jac, SaturationEngine& sat);

}  // namespace syzcurve
