#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzcurve/defect.hpp"

namespace syzcurve {

enum class Verdict { Free, NearlyFree, Neither };

const char* verdict_name(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Neither;
    std::optional<int> d1, d2;  // exponents, present unless Neither
    long tau = 0;
    int r = 0;       // mdr(f)
    long nu = 0;
    long tau_dr = 0; // (d-1)^2 - r(d-1-r)
    std::string note;
    std::vector<std::string> warnings;
};

// (d-1)^2 - r(d-1-r); the maximal Tjurina number a curve of degree d with
// minimal relation degree r can have, and the freeness test value.
long tau_formula(long d, long r);

// nu(f) decides the verdict; the tau test is a mandatory cross-check and
// any disagreement between the two characterizations aborts loudly.
Classification classify(JacobianGraded& jac, SaturationEngine& sat);

struct BoundCheck {
    bool ok = false;
    bool thmA_boundary = false;  // odd-degree cuspidal curve with r = (d-1)/2
    std::string detail;
};

// Verifies the proven mdr bounds for the verdict, plus r <= (d-1)/2 for
// odd-degree curves asserted rational cuspidal. Throws BoundViolated.
BoundCheck mdr_bound_check(const Classification& cls, int d, bool assume_rational_cuspidal);

}  // namespace syzcurve
