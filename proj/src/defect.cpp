#include "syzcurve/defect.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"
#include "syzcurve/util.hpp"

namespace syzcurve {

// Quotient-projection table for one degree K: the class of every monomial
// of S_K in M(f)_K = S_K / (J_f)_K, expressed in the basis of non-pivot
// monomials. Built once from a reduced echelon form of the generators of
// (J_f)_K and then shared by every saturation query that lands in K.
struct SaturationEngine::ModQuotient {
    int K = 0;
    PrimeField field{0};
    long qdim = 0;
    std::vector<long> pos;                           // monomial -> quotient position, -1 for pivots
    std::vector<std::vector<std::uint64_t>> rep;     // pivot monomial -> its class
};

struct SaturationEngine::RatQuotient {
    int K = 0;
    long qdim = 0;
    std::vector<long> pos;
    std::vector<std::vector<Rat>> rep;
};

SaturationEngine::SaturationEngine(JacobianGraded& jac) : jac_(jac) {}

bool verify_defect_laws(const GradedDims& n, int T, std::string* why) {
    auto explain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (n.lo() != 0 || n.hi() != T) return explain("profile range is not 0..T");
    for (int j = 0; j <= T; ++j)
        if (n.at(j) < 0) return explain("negative defect dimension at degree " + std::to_string(j));
    for (int j = 0; j <= T; ++j)
        if (n.at(j) != n.at(T - j))
            return explain("duality fails at degree " + std::to_string(j) + ": " +
                           std::to_string(n.at(j)) + " vs " + std::to_string(n.at(T - j)));
    const int mid = T / 2;
    for (int j = 0; j < mid; ++j)
        if (n.at(j) > n.at(j + 1))
            return explain("Lefschetz chain fails rising at degree " + std::to_string(j));
    for (int j = mid; j < T; ++j)
        if (n.at(j) < n.at(j + 1))
            return explain("Lefschetz chain fails falling at degree " + std::to_string(j));
    return true;
}

std::shared_ptr<const SaturationEngine::ModQuotient> SaturationEngine::quotient_table(
    int K, std::uint64_t p) {
    const auto key = std::make_pair(K, p);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mod_tables_.find(key);
        if (it != mod_tables_.end()) return it->second;
    }
    const CurveContext& ctx = jac_.context();
    PrimeField field{p};
    const long nK = dim_S(K);
    const int q = K - (ctx.d - 1);

    auto table = std::make_shared<ModQuotient>();
    table->K = K;
    table->field = field;
    table->pos.assign(static_cast<std::size_t>(nK), -1);

    if (q < 0) {
        // J_f has no part in this degree: the quotient is all of S_K.
        table->qdim = nK;
        for (long i = 0; i < nK; ++i) table->pos[static_cast<std::size_t>(i)] = i;
    } else {
        // Rows of the echelon problem are the generators f_v * m of (J_f)_K.
        ModMatrix gen = jac_.multiplication_matrix_mod(q, field);
        ModMatrix b(gen.cols(), gen.rows());
        for (std::size_t r = 0; r < gen.rows(); ++r)
            for (std::size_t c = 0; c < gen.cols(); ++c) b.at(c, r) = gen.at(r, c);
        ModRREF rref = mod_rref(std::move(b), field);

        table->qdim = nK - static_cast<long>(rref.rank);
        long next = 0;
        for (long i = 0; i < nK; ++i)
            if (rref.col_pivot_row[static_cast<std::size_t>(i)] < 0)
                table->pos[static_cast<std::size_t>(i)] = next++;
        table->rep.assign(static_cast<std::size_t>(nK), {});
        for (long i = 0; i < nK; ++i) {
            long prow = rref.col_pivot_row[static_cast<std::size_t>(i)];
            if (prow < 0) continue;
            std::vector<std::uint64_t> cls(static_cast<std::size_t>(table->qdim), 0);
            for (long j = 0; j < nK; ++j) {
                long qpos = table->pos[static_cast<std::size_t>(j)];
                if (qpos < 0) continue;
                std::uint64_t v = rref.m.at(static_cast<std::size_t>(prow), static_cast<std::size_t>(j));
                cls[static_cast<std::size_t>(qpos)] = field.neg(v);
            }
            table->rep[static_cast<std::size_t>(i)] = std::move(cls);
        }
    }

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = mod_tables_.emplace(key, table);
    return it->second;
}

std::shared_ptr<const SaturationEngine::RatQuotient> SaturationEngine::quotient_table_q(int K) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rat_tables_.find(K);
        if (it != rat_tables_.end()) return it->second;
    }
    const CurveContext& ctx = jac_.context();
    const long nK = dim_S(K);
    const int q = K - (ctx.d - 1);

    auto table = std::make_shared<RatQuotient>();
    table->K = K;
    table->pos.assign(static_cast<std::size_t>(nK), -1);

    if (q < 0) {
        table->qdim = nK;
        for (long i = 0; i < nK; ++i) table->pos[static_cast<std::size_t>(i)] = i;
    } else {
        QMatrix gen = jac_.multiplication_matrix(q);
        // Gauss-Jordan on the transposed generator matrix.
        const std::size_t rows = gen.cols(), cols = gen.rows();
        std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a[r][c] = gen.at(c, r);
        std::vector<long> col_pivot_row(cols, -1);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows && a[pivot][c] == 0) ++pivot;
            if (pivot == rows) continue;
            std::swap(a[pivot], a[rank]);
            const Rat inv = 1 / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == rank || a[i][c] == 0) continue;
                const Rat factor = a[i][c];
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
            }
            col_pivot_row[c] = static_cast<long>(rank);
            ++rank;
        }
        table->qdim = nK - static_cast<long>(rank);
        long next = 0;
        for (long i = 0; i < nK; ++i)
            if (col_pivot_row[static_cast<std::size_t>(i)] < 0)
                table->pos[static_cast<std::size_t>(i)] = next++;
        table->rep.assign(static_cast<std::size_t>(nK), {});
        for (long i = 0; i < nK; ++i) {
            long prow = col_pivot_row[static_cast<std::size_t>(i)];
            if (prow < 0) continue;
            std::vector<Rat> cls(static_cast<std::size_t>(table->qdim), Rat(0));
            for (long j = 0; j < nK; ++j) {
                long qpos = table->pos[static_cast<std::size_t>(j)];
                if (qpos < 0) continue;
                cls[static_cast<std::size_t>(qpos)] = -a[static_cast<std::size_t>(prow)][static_cast<std::size_t>(j)];
            }
            table->rep[static_cast<std::size_t>(i)] = std::move(cls);
        }
    }

    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = rat_tables_.emplace(K, table);
    return it->second;
}

namespace {

constexpr Var kVars[3] = {Var::x, Var::y, Var::z};

}  // namespace

long SaturationEngine::dim_V_certified(int k, int N) {
    const int K = k + N;
    auto table = quotient_table_q(K);
    const long nk = dim_S(k);
    if (table->qdim == 0) return nk;

    QMatrix w(static_cast<std::size_t>(3 * table->qdim), static_cast<std::size_t>(nk));
    for (long i = 0; i < nk; ++i) {
        const Monomial m = Monomial::at(k, i);
        for (int block = 0; block < 3; ++block) {
            const long t = m.times_power(kVars[block], N).index();
            const long base = block * table->qdim;
            const long qpos = table->pos[static_cast<std::size_t>(t)];
            if (qpos >= 0) {
                w.at(static_cast<std::size_t>(base + qpos), static_cast<std::size_t>(i)) = 1;
            } else {
                const auto& cls = table->rep[static_cast<std::size_t>(t)];
                for (long j = 0; j < table->qdim; ++j)
                    if (cls[static_cast<std::size_t>(j)] != 0)
                        w.at(static_cast<std::size_t>(base + j), static_cast<std::size_t>(i)) =
                            cls[static_cast<std::size_t>(j)];
            }
        }
    }
    return nk - static_cast<long>(rank(w, RankMode::Certified));
}

long SaturationEngine::dim_V(int k, int N) {
    if (jac_.options().mode == RankMode::Certified) return dim_V_certified(k, N);

    const int K = k + N;
    const long nk = dim_S(k);
    std::optional<long> first;
    int used = 0;
    for (std::uint64_t p : PrimeField::default_primes()) {
        if (used == 2) break;
        ++used;
        auto table = quotient_table(K, p);
        if (table->qdim == 0) return nk;
        PrimeField field{p};

        ModMatrix w(static_cast<std::size_t>(3 * table->qdim), static_cast<std::size_t>(nk));
        for (long i = 0; i < nk; ++i) {
            const Monomial m = Monomial::at(k, i);
            for (int block = 0; block < 3; ++block) {
                const long t = m.times_power(kVars[block], N).index();
                const long base = block * table->qdim;
                const long qpos = table->pos[static_cast<std::size_t>(t)];
                if (qpos >= 0) {
                    w.at(static_cast<std::size_t>(base + qpos), static_cast<std::size_t>(i)) = 1;
                } else {
                    const auto& cls = table->rep[static_cast<std::size_t>(t)];
                    for (long j = 0; j < table->qdim; ++j)
                        w.at(static_cast<std::size_t>(base + j), static_cast<std::size_t>(i)) =
                            cls[static_cast<std::size_t>(j)];
                }
            }
        }
        long r = static_cast<long>(mod_rank(w, field));
        // Modular rank is a lower bound; reaching either dimension bound is
        // a certificate on its own.
        if (r == std::min<long>(nk, 3 * table->qdim)) return nk - r;
        if (!first) {
            first = nk - r;
            continue;
        }
        if (*first == nk - r) return *first;
        return dim_V_certified(k, N);
    }
    return dim_V_certified(k, N);
}

long SaturationEngine::sat_dim_with_floor(int k, int floor_multiplier) {
    const CurveContext& ctx = jac_.context();
    int N = std::max(1, ctx.T - k + 1) * floor_multiplier;
    long cur = dim_V(k, N);
    // The chain V_N is nondecreasing and bounded by dim S_k, so the loop
    // terminates; the cap converts a logic error into a loud failure.
    const int cap = N + static_cast<int>(dim_S(k)) + 2;
    while (N < cap) {
        long nxt = dim_V(k, N + 1);
        if (nxt == cur) return cur;
        cur = nxt;
        ++N;
    }
    throw ProfileInconsistent("saturation chain failed to stabilize at degree " +
                              std::to_string(k));
}

long SaturationEngine::sat_dim(int k) {
    if (k < 0) throw RangeError("saturation degree must be nonnegative");
    return sat_dim_with_floor(k, 1);
}

const DefectProfile& SaturationEngine::defect_profile() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (profile_) return *profile_;
    }
    const CurveContext& ctx = jac_.context();
    const int T = ctx.T;

    for (int attempt = 0; attempt < 3; ++attempt) {
        const int mult = 1 << attempt;

        // Warm the shared quotient tables before the per-degree sweep.
        // With the default floor every k lands in degrees T+1 and T+2, so
        // four tables cover the whole profile.
        if (jac_.options().mode == RankMode::MultiModular && mult == 1) {
            std::vector<std::pair<int, std::uint64_t>> keys;
            for (int K : {T + 1, T + 2})
                for (int i = 0; i < 2; ++i) keys.emplace_back(K, PrimeField::default_primes()[i]);
            parallel_for(
                keys.size(),
                [&](std::size_t i) { quotient_table(keys[i].first, keys[i].second); },
                jac_.options().threads);
        }

        GradedDims n(0, T);
        std::vector<long> values(static_cast<std::size_t>(T + 1), 0);
        std::exception_ptr first_error;
        std::mutex err_mu;
        parallel_for(
            static_cast<std::size_t>(T + 1),
            [&](std::size_t idx) {
                try {
                    const int k = static_cast<int>(idx);
                    values[idx] = sat_dim_with_floor(k, mult) - jac_.rank_into(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            },
            jac_.options().threads);
        if (first_error) std::rethrow_exception(first_error);

        bool negative = false;
        for (int k = 0; k <= T; ++k) {
            if (values[static_cast<std::size_t>(k)] < 0) {
                negative = true;
                break;
            }
            n.set(k, values[static_cast<std::size_t>(k)]);
        }
        std::string why;
        if (!negative && verify_defect_laws(n, T, &why)) {
            DefectProfile profile;
            profile.n = std::move(n);
            profile.T = T;
            profile.nu = profile.n.at(T / 2);
            profile.escalations = attempt;
            std::lock_guard<std::mutex> lock(mu_);
            if (!profile_) profile_ = std::move(profile);
            return *profile_;
        }
    }
    throw ProfileInconsistent(
        "defect profile failed duality/Lefschetz verification after escalation");
}

long SaturationEngine::nu() { return defect_profile().nu; }

}  // namespace syzcurve
