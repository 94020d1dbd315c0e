#include "syzcurve/monodromy.hpp"

#include <algorithm>
#include <sstream>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

// Stacks the Jacobian relation block on top of the divergence block; the
// kernel of the combined system is E2^{1,0}(f)_q inside S_{q-2}^3.
template <typename Matrix, typename Entry>
void fill_divergence_block(Matrix& m, std::size_t row_offset, int q,
                           const std::function<Entry(long)>& embed_int) {
    const int src_deg = q - 2;
    const long nsrc = dim_S(src_deg);
    constexpr Var vars[3] = {Var::x, Var::y, Var::z};
    for (int block = 0; block < 3; ++block) {
        for (long i = 0; i < nsrc; ++i) {
            const Monomial src = Monomial::at(src_deg, i);
            const int e = src.exponent(vars[block]);
            if (e == 0) continue;
            const Monomial dst = src.times_power(vars[block], -1);
            m.at(row_offset + static_cast<std::size_t>(dst.index()),
                 static_cast<std::size_t>(block * nsrc + i)) = embed_int(e);
        }
    }
}

}  // namespace

long e2_dim(JacobianGraded& jac, int q) {
    const CurveContext& ctx = jac.context();
    if (q < 0 || q > ctx.d)
        throw QOutOfRange("E2 identification is only available for 0 <= q <= d, got q = " +
                          std::to_string(q));
    if (q <= 1) return 0;

    const int src_deg = q - 2;
    const long nsrc = dim_S(src_deg);
    const long rel_rows = dim_S(src_deg + ctx.d - 1);
    const long div_rows = dim_S(q - 3);
    const long total_rows = rel_rows + div_rows;
    const long cols = 3 * nsrc;

    if (jac.options().mode == RankMode::MultiModular) {
        const long full = std::min(total_rows, cols);
        std::optional<long> first;
        int used = 0;
        for (std::uint64_t p : PrimeField::default_primes()) {
            if (used == 2) break;
            ++used;
            PrimeField f{p};
            ModMatrix rel = jac.multiplication_matrix_mod(src_deg, f);
            ModMatrix m(static_cast<std::size_t>(total_rows), static_cast<std::size_t>(cols));
            for (std::size_t r = 0; r < rel.rows(); ++r)
                for (std::size_t c = 0; c < rel.cols(); ++c) m.at(r, c) = rel.at(r, c);
            std::function<std::uint64_t(long)> embed = [&](long e) {
                return static_cast<std::uint64_t>(e) % f.p;
            };
            fill_divergence_block<ModMatrix, std::uint64_t>(m, rel.rows(), q, embed);
            long r = static_cast<long>(mod_rank(m, f));
            if (r == full) return cols - r;
            if (!first) {
                first = cols - r;
                continue;
            }
            if (*first == cols - r) return *first;
            break;  // disagreement: fall through to certified
        }
    }

    QMatrix m(static_cast<std::size_t>(total_rows), static_cast<std::size_t>(cols));
    QMatrix rel = jac.multiplication_matrix(src_deg);
    for (std::size_t r = 0; r < rel.rows(); ++r)
        for (std::size_t c = 0; c < rel.cols(); ++c) m.at(r, c) = rel.at(r, c);
    std::function<Rat(long)> embed = [](long e) { return Rat(e); };
    fill_divergence_block<QMatrix, Rat>(m, rel.rows(), q, embed);
    return cols - static_cast<long>(rank(m, RankMode::Certified));
}

long h1_eigen(JacobianGraded& jac, const EigenspaceQuery& query) {
    const CurveContext& ctx = jac.context();
    if (query.d != ctx.d)
        throw DimensionMismatch("eigenvalue query degree does not match the curve");
    if (!ctx.assume_rational_cuspidal)
        throw NotApplicable("eigenspace formula requires the rational-cuspidal assertion");
    if (query.lambda_is_one())
        throw NotApplicable("lambda = 1 is excluded; H^1(F)_1 vanishes separately");
    const int k = query.k();
    return e2_dim(jac, k) + e2_dim(jac, ctx.d - k);
}

MonodromyReport walther_check(JacobianGraded& jac, const DefectProfile& profile) {
    const CurveContext& ctx = jac.context();
    if (!ctx.assume_rational_cuspidal)
        throw NotApplicable("the eigenspace inequality is checked for rational cuspidal curves");
    const int d = ctx.d;

    MonodromyReport report;
    report.all_pass = true;
    std::vector<WaltherRow> failing;
    for (int j = 2; j <= d; ++j) {
        WaltherRow row;
        row.j = j;
        row.e2_k = e2_dim(jac, j - 1);
        row.e2_dk = e2_dim(jac, d - j + 1);
        row.h1 = row.e2_k + row.e2_dk;
        row.h2 = row.h1 + 1;
        const int deg = 2 * d - 2 - j;
        if (deg < 0 || deg > profile.T) {
            row.vacuous = true;
            row.lhs = 0;
        } else {
            row.lhs = profile.n.at(deg);
        }
        row.pass = row.lhs <= row.h2;
        if (!row.pass) {
            report.all_pass = false;
            failing.push_back(row);
        }
        report.rows.push_back(row);
    }
    if (!report.all_pass) {
        std::ostringstream msg;
        msg << "eigenspace inequality violated:";
        for (const auto& row : failing)
            msg << " [j=" << row.j << " dim N(f)_" << (2 * d - 2 - row.j) << "=" << row.lhs
                << " > h2=" << row.h2 << "]";
        msg << "; the cuspidality assertion or an upstream computation is wrong";
        throw InequalityViolated(msg.str());
    }
    return report;
}

WindowCheck defect_window_check(const DefectProfile& profile, int d, long r0) {
    WindowCheck out;
    const long lo_end = d - 3 + r0;
    const long hi_start = 2 * d - 3 - r0;
    for (int j = 0; j <= profile.T; ++j) {
        if (j <= lo_end || j >= hi_start) {
            if (profile.n.at(j) > 1) out.violations.push_back(j);
        }
    }
    out.ok = out.violations.empty();
    return out;
}

}  // namespace syzcurve
