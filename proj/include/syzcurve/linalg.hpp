#pragma once

#include <cstddef>
#include <vector>

#include "syzcurve/modular.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// Dense matrix with exact rational entries.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

enum class RankMode { Certified, MultiModular };

// Exact rank over Q. Certified runs fraction-free elimination over the
// integers. MultiModular reduces modulo word-size primes and accepts when
// two primes agree (or when one prime already reaches min(rows, cols),
// which is a certificate on its own); any disagreement escalates to the
// certified path.
std::size_t rank(const QMatrix& m, RankMode mode = RankMode::MultiModular);

struct KernelBasis {
    std::size_t dimension = 0;
    // Canonical vectors: integral entries, content 1, first nonzero positive.
    std::vector<std::vector<Rat>> vectors;
};

// Basis of the right null space over Q; every vector is re-verified against
// the matrix by exact multiplication before being returned.
KernelBasis kernel(const QMatrix& m);

// True iff target lies in the column span of m (exact solve).
bool member(const QMatrix& m, const std::vector<Rat>& target);

// Canonicalizes in place: scales to integral entries with content 1 and
// first nonzero entry positive. No-op on the zero vector.
void canonicalize_vector(std::vector<Rat>& v);

}  // namespace syzcurve
