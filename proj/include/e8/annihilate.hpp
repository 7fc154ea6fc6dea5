#pragma once

#include <cstdint>

#include "e8/intpoly.hpp"
#include "e8/zmat.hpp"

namespace e8 {

// Decides whether (M - Id) * P(M) is the zero matrix, working column by
// column mod word-size primes (Horner on Krylov vectors; M is used as a
// sparse operator).  A nonzero residue anywhere exits false immediately.
//
// rigorous = true: primes are consumed until their product exceeds twice an
// entry bound for (M - Id) P(M), so a true answer is a proof over Z.
// rigorous = false: exactly `evidence_primes` primes and `evidence_vectors`
// random probe vectors per prime instead of the full column sweep; a cheap
// randomized check for bulk experiments.
//
// The primes come from a deterministic block disjoint from the ones the CRT
// reconstruction paths use.
struct AnnihilationResult {
    bool zero = false;
    int primes_used = 0;
    bool rigorous = false;
};

AnnihilationResult annihilation_check(const ZMat& M, const IntPoly& P, bool rigorous = true,
                                      int evidence_primes = 3, int evidence_vectors = 8,
                                      uint64_t seed = 1);

}  // namespace e8
