#pragma once

#include <gmpxx.h>

#include <vector>

#include "e8/fp.hpp"
#include "e8/intpoly.hpp"
#include "e8/zmat.hpp"

namespace e8 {

// Characteristic polynomial det(T*I - A) mod p.  Works for every prime: the
// similarity reduction to Hessenberg form pivots by a row/column swap, so no
// unlucky-modulus case exists.  Input entries must be in the field form of f;
// output coefficients are plain residues, ascending, monic of degree n.
template <class F>
std::vector<u64> charpoly_mod(FpMat A, const F& f);

// Plan for exact reconstruction: word-size reconstruction primes whose
// product exceeds twice the coefficient bound, plus control primes that are
// excluded from reconstruction and used only to cross-check the result.
struct CrtPlan {
    std::vector<u64> recon;
    std::vector<u64> control;
    mpz_class bound;
};

// Coefficient bound max_k binom(n,k) * prod(k largest row 2-norms), from the
// minor expansion of det(T*I - A) and Hadamard's inequality.
mpz_class charpoly_coeff_bound(const ZMat& A);

CrtPlan make_crt_plan(const ZMat& A, int control_count = 2);

// Exact characteristic polynomial by CRT over the plan's reconstruction
// primes with a symmetric lift, then re-verified against every control
// prime; a control mismatch throws.  If stabilize is true the prime loop
// additionally stops early once the lifted coefficients survive two extra
// primes unchanged (still control-checked afterwards); the default runs the
// full bound-driven schedule.
IntPoly charpoly_exact(const ZMat& A, const CrtPlan& plan, bool stabilize = false);
IntPoly charpoly_exact(const ZMat& A);

}  // namespace e8
