#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syzcurve/poly.hpp"

namespace syzcurve {

// Arithmetic modulo a word-size prime. Primes sit just below 2^61 so that
// products fit in unsigned __int128 with headroom.
struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    // The default prime stream, largest primes below 2^61 in decreasing
    // order. Deterministic, so multi-modular results are reproducible.
    static const std::vector<std::uint64_t>& default_primes();
};

bool is_prime_u64(std::uint64_t n);

// Dense matrix over F_p, row-major.
class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    std::uint64_t* row(std::size_t r) { return e_.data() + r * cols_; }
    const std::uint64_t* row(std::size_t r) const { return e_.data() + r * cols_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> e_;
};

// In-place row echelon; returns the rank.
std::size_t mod_rank(ModMatrix& m, const PrimeField& f);

// Reduced row echelon form. pivot_col[i] is the pivot column of row i;
// col_pivot_row[c] is the pivot row of column c or -1.
struct ModRREF {
    ModMatrix m;
    std::vector<std::size_t> pivot_col;
    std::vector<long> col_pivot_row;
    std::size_t rank = 0;
};
ModRREF mod_rref(ModMatrix m, const PrimeField& f);

// Image of a rational in F_p, or nullopt when the denominator vanishes
// mod p (the prime must then be skipped for this matrix).
std::optional<std::uint64_t> reduce_mod(const Rat& q, const PrimeField& f);
std::uint64_t reduce_mod(const Int& n, const PrimeField& f);

}  // namespace syzcurve
