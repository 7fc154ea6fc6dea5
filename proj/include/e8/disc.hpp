#pragma once

#include <gmpxx.h>

#include "e8/fp.hpp"
#include "e8/intpoly.hpp"

namespace e8 {

// resultant of the reductions of a and b mod p (Euclidean remainder chain)
u64 resultant_mod(const IntPoly& a, const IntPoly& b, const Mont64& f);

// Exact discriminant of a monic polynomial:
//   disc(P) = (-1)^(d(d-1)/2) * res(P, P')
// computed by CRT over word-size primes against the Hadamard bound of the
// Sylvester matrix, with two control primes re-checking the lift.
mpz_class discriminant_exact(const IntPoly& P);

}  // namespace e8
