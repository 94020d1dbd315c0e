#include "syzcurve/modular.hpp"

#include <mutex>

namespace syzcurve {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const { return pow(a % p, p - 2); }

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; the listed bases decide primality for all
// n < 3.3 * 10^24, far past the 2^61 range used here.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

const std::vector<std::uint64_t>& PrimeField::default_primes() {
    static std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        std::uint64_t candidate = (std::uint64_t(1) << 61) - 1;
        while (ps.size() < 8) {
            if (is_prime_u64(candidate)) ps.push_back(candidate);
            candidate -= 2;
        }
        return ps;
    }();
    return primes;
}

std::size_t mod_rank(ModMatrix& m, const PrimeField& f) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const std::uint64_t inv = f.inv(m.at(rank, c));
        std::uint64_t* prow = m.row(rank);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t* irow = m.row(i);
            if (irow[c] == 0) continue;
            const std::uint64_t factor = f.mul(irow[c], inv);
            irow[c] = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (prow[j] == 0) continue;
                irow[j] = f.sub(irow[j], f.mul(factor, prow[j]));
            }
        }
        ++rank;
    }
    return rank;
}

ModRREF mod_rref(ModMatrix m, const PrimeField& f) {
    const std::size_t rows = m.rows(), cols = m.cols();
    ModRREF out;
    out.col_pivot_row.assign(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const std::uint64_t inv = f.inv(m.at(rank, c));
        std::uint64_t* prow = m.row(rank);
        for (std::size_t j = c; j < cols; ++j)
            if (prow[j]) prow[j] = f.mul(prow[j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::uint64_t* irow = m.row(i);
            if (irow[c] == 0) continue;
            const std::uint64_t factor = irow[c];
            irow[c] = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (prow[j] == 0) continue;
                irow[j] = f.sub(irow[j], f.mul(factor, prow[j]));
            }
        }
        out.pivot_col.push_back(c);
        out.col_pivot_row[c] = static_cast<long>(rank);
        ++rank;
    }
    out.rank = rank;
    out.m = std::move(m);
    return out;
}

std::optional<std::uint64_t> reduce_mod(const Rat& q, const PrimeField& f) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), f.p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), f.p);
    if (num == 0) return 0;
    return f.mul(num, f.inv(den));
}

std::uint64_t reduce_mod(const Int& n, const PrimeField& f) {
    return mpz_fdiv_ui(n.get_mpz_t(), f.p);
}

}  // namespace syzcurve
