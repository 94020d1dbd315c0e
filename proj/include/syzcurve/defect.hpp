#pragma once

#include <memory>
#include <optional>
#include <string>

#include "syzcurve/jacobian.hpp"

namespace syzcurve {

// Graded dimensions of N(f) = I_f / J_f over 0..T, the middle value nu,
// and how many times the saturation exponent floor had to be escalated
// (expected zero; any escalation is reported by callers).
struct DefectProfile {
    GradedDims n;
    long nu = 0;
    int T = 0;
    int escalations = 0;
};

// Checks nonnegativity, the duality n(j) = n(T-j) and the unimodal
// Lefschetz chain peaking at floor(T/2). Returns false and fills `why`
// on the first violation.
bool verify_defect_laws(const GradedDims& n, int T, std::string* why = nullptr);

// Saturation of the Jacobian ideal by variable powers: (I_f)_k is the
// stable value of V_N = { g in S_k : g x^N, g y^N, g z^N all in J_f },
// each V_N computed by exact linear algebra in degree k + N against a
// quotient-projection table of (J_f)_{k+N}.
class SaturationEngine {
public:
    explicit SaturationEngine(JacobianGraded& jac);

    long sat_dim(int k);
    const DefectProfile& defect_profile();
    long nu();

private:
    struct ModQuotient;
    struct RatQuotient;

    long sat_dim_with_floor(int k, int floor_multiplier);
    long dim_V(int k, int N);
    long dim_V_certified(int k, int N);
    std::shared_ptr<const ModQuotient> quotient_table(int K, std::uint64_t p);
    std::shared_ptr<const RatQuotient> quotient_table_q(int K);

    JacobianGraded& jac_;

    std::mutex mu_;
    std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const ModQuotient>> mod_tables_;
    std::map<int, std::shared_ptr<const RatQuotient>> rat_tables_;
    std::optional<DefectProfile> profile_;
};

}  // namespace syzcurve
