#pragma once

#include <set>
#include <vector>

#include "e8/factor.hpp"

namespace e8 {

// Feasible degrees of a rational factor, given factorization patterns at
// several good primes: a degree is feasible only if it is a subset sum of
// every pattern.  0 and the full degree are always present; a result of
// exactly {0, n} certifies irreducibility over Q.
std::set<int> factor_degree_sieve(const std::vector<DegreePattern>& patterns);

}  // namespace e8
