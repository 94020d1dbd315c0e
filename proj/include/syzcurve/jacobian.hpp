#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "syzcurve/linalg.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// A triple (a, b, c) of degree-q polynomials with a f_x + b f_y + c f_z = 0.
struct SyzygyVector {
    int q = 0;
    HomPoly a, b, c;
};

// Finite table degree -> dimension with a declared range; out-of-range
// queries are errors, not zeros.
class GradedDims {
public:
    GradedDims() = default;
    GradedDims(int lo, int hi) : lo_(lo), v_(hi >= lo ? hi - lo + 1 : 0, 0) {
        if (hi < lo) throw RangeError("empty graded range");
    }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(v_.size()) - 1; }
    bool contains(int k) const { return k >= lo() && k <= hi(); }

    long at(int k) const {
        if (!contains(k))
            throw RangeError("degree " + std::to_string(k) + " outside graded range [" +
                             std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
        return v_[k - lo_];
    }
    void set(int k, long value) {
        if (!contains(k)) throw RangeError("degree outside graded range");
        if (value < 0) throw RangeError("negative graded dimension");
        v_[k - lo_] = value;
    }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
    int lo_ = 0;
    std::vector<long> v_;
};

struct EngineOptions {
    RankMode mode = RankMode::MultiModular;
    unsigned threads = 0;  // 0 = hardware default
};

// Graded invariants of the Jacobian ideal of one curve, with a shared cache
// of multiplication-map ranks. All public methods are safe to call
// concurrently; cached values are computed once per degree.
class JacobianGraded {
public:
    explicit JacobianGraded(CurveContext ctx, EngineOptions opt = {});

    const CurveContext& context() const { return ctx_; }
    const EngineOptions& options() const { return opt_; }

    // dim AR(f)_q: kernel dimension of S_q^3 -> S_{q+d-1}.
    long ar_dim(int q);

    // Canonical kernel basis reassembled into verified polynomial triples.
    std::vector<SyzygyVector> ar_basis(int q);

    // Least q >= 0 with AR(f)_q != 0; the Koszul relations bound the search
    // by d - 1.
    int mdr();

    // dim M(f)_k for M(f) = S / J_f.
    long milnor_dim(int k);

    // Stable value of the Hilbert function of M(f), scanned from
    // max(T, d-1) until three consecutive degrees agree. A window of d
    // strictly increasing values beyond that start signals non-reduced
    // input and aborts.
    long tjurina();

    GradedDims milnor_table(int lo, int hi);
    GradedDims ar_table(int lo, int hi);

    // Rank of the multiplication map (a,b,c) -> a f_x + b f_y + c f_z
    // landing in S_k (zero when k < d - 1). Cached per degree.
    long rank_into(int k);

    // Exact matrix of S_q^3 -> S_{q+d-1}, columns ordered a-block, b-block,
    // c-block, each block by the dense monomial order of S_q.
    QMatrix multiplication_matrix(int q) const;
    ModMatrix multiplication_matrix_mod(int q, const PrimeField& f) const;

    // Partials scaled by one common factor to integer content-free form;
    // the scaling leaves every rank and kernel in this module unchanged.
    const std::array<HomPoly, 3>& scaled_partials() const { return ipartials_; }

private:
    long rank_into_uncached(int k) const;

    CurveContext ctx_;
    EngineOptions opt_;
    std::array<HomPoly, 3> ipartials_;

    std::mutex mu_;
    std::map<int, long> rank_cache_;
    int mdr_cache_ = -1;
    long tjurina_cache_ = -1;
};

}  // namespace syzcurve
