#pragma once

// Brute-force reference implementations used to pin expected values in the
// tests. Everything here recomputes dimensions with plain rational Gaussian
// elimination and its own matrix assembly, independently of the library's
// modular/fraction-free/quotient-table machinery it is checking.

#include <vector>

#include "syzcurve/linalg.hpp"
#include "syzcurve/poly.hpp"

namespace oracle {

std::size_t naive_rank(const syzcurve::QMatrix& m);

// Matrix of (a,b,c) -> a f_x + b f_y + c f_z restricted to S_q^3.
syzcurve::QMatrix naive_jacobian_matrix(const syzcurve::CurveContext& ctx, int q);

long naive_ar_dim(const syzcurve::CurveContext& ctx, int q);
long naive_milnor_dim(const syzcurve::CurveContext& ctx, int k);
long naive_tjurina(const syzcurve::CurveContext& ctx);

// dim V_N for V_N = { g in S_k : g x^N, g y^N, g z^N in J_f }, computed as
// one big combined kernel over (g, h_x, h_y, h_z) without any quotient
// tables; N defaults to the provable floor T - k + 1.
long naive_dim_V(const syzcurve::CurveContext& ctx, int k, int N);
long naive_sat_dim(const syzcurve::CurveContext& ctx, int k);

// n(k) = dim (I_f)_k - dim (J_f)_k over 0..T.
std::vector<long> naive_defect_profile(const syzcurve::CurveContext& ctx);
long naive_nu(const syzcurve::CurveContext& ctx);

// dim of the divergence-free subspace of AR(f)_{q-2}.
long naive_e2_dim(const syzcurve::CurveContext& ctx, int q);

}  // namespace oracle
