#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <tuple>
#include <vector>

#include "e8/fp.hpp"

namespace e8 {

// Dense square matrix over Z.  Exact arithmetic everywhere; callers that
// need speed reduce to FpMat and work mod p.
struct ZMat {
    int n = 0;
    std::vector<mpz_class> a;  // row-major

    ZMat() = default;
    explicit ZMat(int n_) : n(n_), a((size_t)n_ * n_) {}
    static ZMat identity(int n);

    mpz_class& at(int i, int j) { return a[(size_t)i * n + j]; }
    const mpz_class& at(int i, int j) const { return a[(size_t)i * n + j]; }

    bool operator==(const ZMat& o) const { return n == o.n && a == o.a; }

    size_t nonzero_count() const;
    mpz_class max_abs_entry() const;
    // max row sum of absolute values (the operator infinity-norm)
    mpz_class inf_norm() const;
};

// Sparse matrix with exact integer entries, kept as sorted (row, col, value)
// triplets.  Duplicate positions are not allowed.
struct SparseZ {
    int n = 0;
    std::vector<std::tuple<int, int, mpz_class>> t;
};

ZMat mul(const ZMat& a, const ZMat& b);
// a * s with s sparse; this is the workhorse for products of generator
// matrices, which have ~320 nonzeros out of 61504
ZMat mul_sparse(const ZMat& a, const SparseZ& s);

// Dense matrix of field residues (plain form for SmallFp, Montgomery form
// for Mont64; the field object that produced it must be carried alongside).
struct FpMat {
    int n = 0;
    std::vector<u64> a;

    FpMat() = default;
    explicit FpMat(int n_) : n(n_), a((size_t)n_ * n_, 0) {}
    u64& at(int i, int j) { return a[(size_t)i * n + j]; }
    u64 at(int i, int j) const { return a[(size_t)i * n + j]; }
};

template <class F>
FpMat reduce_mod(const ZMat& m, const F& f) {
    FpMat r(m.n);
    for (size_t k = 0; k < m.a.size(); k++) {
        u64 v = mpz_fdiv_ui(m.a[k].get_mpz_t(), f.p);
        r.a[k] = f.embed(v);
    }
    return r;
}

}  // namespace e8
