#pragma once

#include <vector>

#include "syzcurve/defect.hpp"

namespace syzcurve {

// Milnor-fiber monodromy eigenvalue indexed by j in 1..d. The eigenvalue
// exp(-2 pi i (j-1)/d) is kept as the residue (j-1) mod d; no complex
// arithmetic is ever performed.
struct EigenspaceQuery {
    int j = 1;
    int d = 2;

    EigenspaceQuery(int j_, int d_) : j(j_), d(d_) {
        if (j < 1 || j > d) throw RangeError("eigenvalue index j must lie in 1..d");
    }
    int k() const { return j - 1; }
    int lambda_residue() const { return (j - 1) % d; }
    bool lambda_is_one() const { return lambda_residue() == 0; }
};

// dim E2^{1,0}(f)_q: the subspace of AR(f)_{q-2} cut out by the divergence
// condition a_x + b_y + c_z = 0, computed as one combined kernel. The
// identification is only available for q <= d; larger q is refused.
long e2_dim(JacobianGraded& jac, int q);

// dim H^1(F, C)_lambda = e2_dim(k) + e2_dim(d - k) with k = j - 1, for a
// rational cuspidal curve and lambda != 1.
long h1_eigen(JacobianGraded& jac, const EigenspaceQuery& query);

struct WaltherRow {
    int j = 0;
    long lhs = 0;      // dim N(f)_{2d-2-j}
    long e2_k = 0;     // dim E2^{1,0}(f)_{j-1}
    long e2_dk = 0;    // dim E2^{1,0}(f)_{d-j+1}
    long h1 = 0;       // e2_k + e2_dk
    long h2 = 0;       // h1 + 1
    bool vacuous = false;
    bool pass = false;
};

struct MonodromyReport {
    std::vector<WaltherRow> rows;
    bool all_pass = false;
};

// Checks dim N(f)_{2d-2-j} <= dim H^2(F,C)_lambda for every j = 2..d,
// deriving h2 from h1 + 1. A violation throws InequalityViolated with the
// failing rows listed, since the inequality is a theorem for rational
// cuspidal curves.
MonodromyReport walther_check(JacobianGraded& jac, const DefectProfile& profile);

// The two-sided window bound dim N(f)_j <= 1 for j <= d-3+r0 and
// j >= 2d-3-r0; callers apply it to odd composite degrees where r0 exists.
struct WindowCheck {
    bool ok = false;
    std::vector<int> violations;
};
WindowCheck defect_window_check(const DefectProfile& profile, int d, long r0);

}  // namespace syzcurve
