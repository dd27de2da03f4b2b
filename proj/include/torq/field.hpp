#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torq {

/* Arithmetic in the prime field F_p. Dimensions of hom/ext spaces in the
 * categories handled here are characteristic independent, so any odd prime
 * works; the default is 101 and a second prime is used for cross checks. */
struct fp_field {
    uint32_t p;

    explicit fp_field(uint32_t prime = 101) : p(prime) {
        if (prime < 2)
            throw std::invalid_argument("field characteristic must be a prime >= 2");
    }

    uint32_t reduce(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p);
        if (r < 0)
            r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p - b % p) % p; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a % p == 0)
            throw std::domain_error("inverse of zero in F_p");
        return pow(a % p, p - 2);
    }
};

/* Dense row-major matrix over F_p. Sizes stay small (desk scale), so no
 * sparsity tricks. */
struct fmat {
    int rows = 0;
    int cols = 0;
    std::vector<uint32_t> a;

    fmat() = default;
    fmat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static fmat identity(int n) {
        fmat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }
    bool is_zero() const {
        for (uint32_t v : a)
            if (v)
                return false;
        return true;
    }
};

fmat mat_mul(const fp_field& F, const fmat& A, const fmat& B);
fmat mat_add(const fp_field& F, const fmat& A, const fmat& B);
fmat mat_sub(const fp_field& F, const fmat& A, const fmat& B);
fmat mat_scale(const fp_field& F, uint32_t c, const fmat& A);
fmat mat_transpose(const fmat& A);
fmat mat_hstack(const fmat& A, const fmat& B);

/* In-place reduced row echelon form; returns the pivot columns in order.
 * Pivoting always takes the first nonzero entry column by column, so the
 * result is deterministic. */
std::vector<int> rref(const fp_field& F, fmat& M);

int rank(const fp_field& F, fmat M);

/* Basis of the null space of M (as rows of the returned matrix). */
fmat kernel_basis(const fp_field& F, fmat M);

/* Solves A x = b for one particular solution. Returns false when the system
 * is inconsistent. */
bool solve(const fp_field& F, const fmat& A, const std::vector<uint32_t>& b,
           std::vector<uint32_t>& x);

/* Solves A X = B column by column; false when any column is inconsistent. */
bool solve_mat(const fp_field& F, const fmat& A, const fmat& B, fmat& X);

/* Inverse of a square invertible matrix; throws on singular input. */
fmat mat_inverse(const fp_field& F, const fmat& A);

/* Incremental row space: add() reduces the vector against the rows collected
 * so far and keeps it when independent. Used for rank bookkeeping and for
 * deterministic complement choices. */
struct row_space {
    const fp_field* F;
    int cols;
    std::vector<std::vector<uint32_t>> rows;  // reduced, pivot-normalized
    std::vector<int> pivots;

    row_space(const fp_field& field, int ncols) : F(&field), cols(ncols) {}

    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;
    bool add(std::vector<uint32_t> v);  // true when rank grew
    int dim() const { return static_cast<int>(rows.size()); }
};

}  // namespace torq
