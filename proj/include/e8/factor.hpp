#pragma once

#include <map>
#include <vector>

#include "e8/fp.hpp"
#include "e8/intpoly.hpp"

namespace e8 {

// degree of an irreducible factor -> number of distinct such factors
using DegreePattern = std::map<int, int>;

struct PatternResult {
    u64 p = 0;
    bool squarefree = false;
    // distinct-degree data; when the reduction is not squarefree this is the
    // pattern of its squarefree part (distinct irreducible factors)
    DegreePattern degrees;
};

// reduction of P mod p, squarefree detection via gcd(f, f'), and the
// distinct-degree factorization of the squarefree part; p < 2^31
PatternResult factor_degree_pattern(const IntPoly& P, u64 p);

// same computation starting from an already-reduced polynomial (plain
// residues, ascending)
PatternResult degree_pattern_mod(std::vector<u64> f, const SmallFp& fp);

// sign of any permutation whose cycle type matches the pattern on
// sum(deg * count) points: (-1)^(points - number of cycles)
int pattern_signature(const DegreePattern& d);

// full factorization into irreducibles by equal-degree splitting
// (Cantor-Zassenhaus); odd p only; returns monic factors with multiplicity,
// deterministic for a fixed seed
std::vector<std::pair<std::vector<u64>, int>> factor_mod_p(const IntPoly& P, u64 p,
                                                           uint64_t seed = 1);

// canonical short encoding "d^c d^c ..." with degrees ascending
std::string pattern_to_string(const DegreePattern& d);

}  // namespace e8
