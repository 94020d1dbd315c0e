#include "syzcurve/jacobian.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

// One common scale factor for all three partials: per-block scaling would
// change the kernel, a global one does not.
std::array<HomPoly, 3> scale_partials(const CurveContext& ctx) {
    Int lcm = 1;
    for (const HomPoly* p : {&ctx.fx, &ctx.fy, &ctx.fz})
        for (const auto& [m, c] : p->terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int content = 0;
    for (const HomPoly* p : {&ctx.fx, &ctx.fy, &ctx.fz})
        for (const auto& [m, c] : p->terms()) {
            Int n = c.get_num() * (lcm / c.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        }
    if (content == 0) content = 1;
    Rat scale(lcm, content);
    scale.canonicalize();
    return {ctx.fx.scaled(scale), ctx.fy.scaled(scale), ctx.fz.scaled(scale)};
}

}  // namespace

JacobianGraded::JacobianGraded(CurveContext ctx, EngineOptions opt)
    : ctx_(std::move(ctx)), opt_(opt), ipartials_(scale_partials(ctx_)) {}

QMatrix JacobianGraded::multiplication_matrix(int q) const {
    const int k = q + ctx_.d - 1;
    const long nrows = dim_S(k), nsrc = dim_S(q);
    QMatrix m(static_cast<std::size_t>(nrows), static_cast<std::size_t>(3 * nsrc));
    for (int block = 0; block < 3; ++block) {
        const HomPoly& g = ipartials_[block];
        for (long i = 0; i < nsrc; ++i) {
            const Monomial src = Monomial::at(q, i);
            const std::size_t col = static_cast<std::size_t>(block * nsrc + i);
            for (const auto& [gm, gc] : g.terms())
                m.at(static_cast<std::size_t>(src.times(gm).index()), col) = gc;
        }
    }
    return m;
}

ModMatrix JacobianGraded::multiplication_matrix_mod(int q, const PrimeField& f) const {
    const int k = q + ctx_.d - 1;
    const long nrows = dim_S(k), nsrc = dim_S(q);
    ModMatrix m(static_cast<std::size_t>(nrows), static_cast<std::size_t>(3 * nsrc));
    for (int block = 0; block < 3; ++block) {
        const HomPoly& g = ipartials_[block];
        for (long i = 0; i < nsrc; ++i) {
            const Monomial src = Monomial::at(q, i);
            const std::size_t col = static_cast<std::size_t>(block * nsrc + i);
            for (const auto& [gm, gc] : g.terms())
                m.at(static_cast<std::size_t>(src.times(gm).index()), col) =
                    reduce_mod(Int(gc.get_num()), f);
        }
    }
    return m;
}

long JacobianGraded::rank_into_uncached(int k) const {
    const int q = k - (ctx_.d - 1);
    if (q < 0) return 0;
    if (opt_.mode == RankMode::Certified)
        return static_cast<long>(rank(multiplication_matrix(q), RankMode::Certified));

    // Entries are integers after scaling, so no prime can be skipped for
    // denominator reasons; two-prime consensus with the full-rank shortcut.
    const long full = std::min<long>(dim_S(k), 3 * dim_S(q));
    std::optional<long> first;
    for (std::uint64_t p : PrimeField::default_primes()) {
        PrimeField f{p};
        ModMatrix mm = multiplication_matrix_mod(q, f);
        long r = static_cast<long>(mod_rank(mm, f));
        if (r == full) return full;
        if (!first) {
            first = r;
            continue;
        }
        if (*first == r) return r;
        return static_cast<long>(rank(multiplication_matrix(q), RankMode::Certified));
    }
    return static_cast<long>(rank(multiplication_matrix(q), RankMode::Certified));
}

long JacobianGraded::rank_into(int k) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rank_cache_.find(k);
        if (it != rank_cache_.end()) return it->second;
    }
    long r = rank_into_uncached(k);
    std::lock_guard<std::mutex> lock(mu_);
    return rank_cache_.emplace(k, r).first->second;
}

long JacobianGraded::ar_dim(int q) {
    if (q < 0) return 0;
    return 3 * dim_S(q) - rank_into(q + ctx_.d - 1);
}

std::vector<SyzygyVector> JacobianGraded::ar_basis(int q) {
    if (q < 0) return {};
    KernelBasis basis = kernel(multiplication_matrix(q));
    const long nsrc = dim_S(q);
    std::vector<SyzygyVector> out;
    out.reserve(basis.vectors.size());
    for (const auto& v : basis.vectors) {
        SyzygyVector s;
        s.q = q;
        HomPoly* parts[3] = {&s.a, &s.b, &s.c};
        for (int block = 0; block < 3; ++block) {
            HomPoly p(q);
            for (long i = 0; i < nsrc; ++i) {
                const Rat& c = v[static_cast<std::size_t>(block * nsrc + i)];
                if (c != 0) p.add_term(Monomial::at(q, i), c);
            }
            *parts[block] = std::move(p);
        }
        HomPoly check = s.a * ctx_.fx + s.b * ctx_.fy + s.c * ctx_.fz;
        if (!check.is_zero())
            throw InternalInconsistency("syzygy candidate fails the defining relation");
        out.push_back(std::move(s));
    }
    return out;
}

int JacobianGraded::mdr() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (mdr_cache_ >= 0) return mdr_cache_;
    }
    int found = -1;
    for (int q = 0; q <= ctx_.d - 1; ++q) {
        if (ar_dim(q) > 0) {
            found = q;
            break;
        }
    }
    if (found < 0)
        throw InternalInconsistency("no Jacobian syzygy up to degree d-1; Koszul guarantee broken");
    std::lock_guard<std::mutex> lock(mu_);
    mdr_cache_ = found;
    return found;
}

long JacobianGraded::milnor_dim(int k) {
    if (k < 0) return 0;
    return dim_S(k) - rank_into(k);
}

long JacobianGraded::tjurina() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (tjurina_cache_ >= 0) return tjurina_cache_;
    }
    const int start = std::max(ctx_.T, ctx_.d - 1);
    long prev = milnor_dim(start);
    long value = prev;
    int equal_run = 1;
    int increase_run = 0;
    for (int k = start + 1;; ++k) {
        long cur = milnor_dim(k);
        if (cur == prev) {
            if (++equal_run == 3) {
                value = cur;
                break;
            }
        } else {
            equal_run = 1;
        }
        if (cur > prev) {
            if (++increase_run >= ctx_.d)
                throw NonReducedInput(
                    "Hilbert function of the Jacobian algebra keeps growing; "
                    "the curve is most likely non-reduced");
        } else {
            increase_run = 0;
        }
        prev = cur;
    }
    std::lock_guard<std::mutex> lock(mu_);
    tjurina_cache_ = value;
    return value;
}

GradedDims JacobianGraded::milnor_table(int lo, int hi) {
    GradedDims t(lo, hi);
    for (int k = lo; k <= hi; ++k) t.set(k, milnor_dim(k));
    return t;
}

GradedDims JacobianGraded::ar_table(int lo, int hi) {
    GradedDims t(lo, hi);
    for (int q = lo; q <= hi; ++q) t.set(q, ar_dim(q));
    return t;
}

}  // namespace syzcurve
