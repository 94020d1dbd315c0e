#include "syzcurve/linalg.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

// Row-scaled integer copy; scaling rows by positive constants does not
// change rank, kernel, or column span.
std::vector<std::vector<Int>> integer_rows(const QMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Int& den = m.at(r, c).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rat& q = m.at(r, c);
            rows[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }
    return rows;
}

// Bareiss fraction-free elimination on integer rows; all divisions are
// exact, so entries stay at minor size instead of exploding.
std::size_t rank_bareiss(std::vector<std::vector<Int>> a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            // rows with a zero leading entry still need the exact rescale
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t rank_certified(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rank_bareiss(integer_rows(m), m.rows(), m.cols());
}

std::optional<std::size_t> rank_one_prime(const QMatrix& m, const PrimeField& f) {
    ModMatrix mm(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto v = reduce_mod(m.at(r, c), f);
            if (!v) return std::nullopt;  // denominator hit this prime
            mm.at(r, c) = *v;
        }
    return mod_rank(mm, f);
}

std::size_t rank_multimodular(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t full = std::min(m.rows(), m.cols());
    std::optional<std::size_t> first;
    for (std::uint64_t p : PrimeField::default_primes()) {
        PrimeField f{p};
        auto r = rank_one_prime(m, f);
        if (!r) continue;
        // A modular rank is a lower bound for the rational rank, so hitting
        // min(rows, cols) is already a certificate.
        if (*r == full) return full;
        if (!first) {
            first = r;
            continue;
        }
        if (*first == *r) return *r;
        return rank_certified(m);
    }
    // Every default prime divided some denominator; fall back.
    return rank_certified(m);
}

}  // namespace

std::size_t rank(const QMatrix& m, RankMode mode) {
    return mode == RankMode::Certified ? rank_certified(m) : rank_multimodular(m);
}

void canonicalize_vector(std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    Int content = 0;
    for (Rat& q : v) {
        q *= lcm;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (content == 0) return;
    int sign = 0;
    for (Rat& q : v) {
        q /= content;
        if (sign == 0 && q != 0) sign = sgn(q) > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (Rat& q : v) q = -q;
}

KernelBasis kernel(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // Gauss-Jordan over Q on a working copy.
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

    std::vector<long> pivot_row_of_col(cols, -1);
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
        pivot_row_of_col[c] = static_cast<long>(rank);
        ++rank;
    }

    KernelBasis basis;
    basis.dimension = cols - rank;
    basis.vectors.reserve(basis.dimension);
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (pivot_row_of_col[fc] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            long pr = pivot_row_of_col[c];
            if (pr >= 0) v[c] = -a[static_cast<std::size_t>(pr)][fc];
        }
        canonicalize_vector(v);
        basis.vectors.push_back(std::move(v));
    }

    // Exact re-verification of M v = 0 before returning anything.
    for (const auto& v : basis.vectors) {
        for (std::size_t r = 0; r < rows; ++r) {
            Rat acc = 0;
            for (std::size_t c = 0; c < cols; ++c)
                if (v[c] != 0) acc += m.at(r, c) * v[c];
            if (acc != 0)
                throw InternalInconsistency("kernel vector fails exact verification");
        }
    }
    return basis;
}

bool member(const QMatrix& m, const std::vector<Rat>& target) {
    if (target.size() != m.rows())
        throw DimensionMismatch("target length " + std::to_string(target.size()) +
                                " does not match row count " + std::to_string(m.rows()));
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
        a[r][cols] = target[r];
    }
    // Forward elimination on [M | t]; t is in the span iff no pivot lands
    // in the augmented column.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const Rat factor = a[i][c] / a[rank][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (a[r][cols] != 0) return false;
    return true;
}

}  // namespace syzcurve
