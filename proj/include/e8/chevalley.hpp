#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "e8/roots.hpp"

namespace e8 {

// Structure constants for the 248-dimensional Lie algebra in a Chevalley
// basis {h_1..h_8} u {e_r : r root}.  Basis slots: 0..7 are the Cartan
// generators h_i dual to the simple roots, slot 8+r is e_{roots[r]}.
//
// Brackets:
//   [h_i, h_j] = 0
//   [h_i, e_b] = (b, alpha_i) e_b
//   [e_a, e_b] = n(a,b) e_{a+b}        if a + b is a root
//              = sum_i m_i(a) h_i      if b = -a   (m = expansion of a)
//              = 0                      otherwise
//
// The table n is produced either by the extraspecial-pair recursion (the
// default; the free sign of every extraspecial pair is an input) or from a
// bimultiplicative sign form on the root lattice (an independent
// construction used to cross-check the first).  Both are validated against
// the Jacobi identity on seeded random triples at construction time.
struct Chevalley {
    const RootSystem* rs = nullptr;

    // n[i][j] in {-1, 0, +1}; nonzero exactly when roots[i] + roots[j] is a root
    std::vector<std::array<int8_t, 240>> n;

    // the 112 extraspecial pairs (a, b), a < b in the canonical order, one for
    // each positive non-simple root a+b; empty for the sign-form construction
    std::vector<std::pair<int, int>> extraspecial;

    // sha256 keying the sign convention (covers the construction kind and,
    // for the recursion, the chosen extraspecial signs)
    std::string signs_hash;

    // sparse vector in the 248-slot basis
    using Sparse = std::vector<std::pair<int, int64_t>>;

    // [basis_i, basis_j] for slot indices
    Sparse basis_bracket(int si, int sj) const;

    // bracket of two dense coefficient vectors
    std::vector<int64_t> bracket(const std::vector<int64_t>& x, const std::vector<int64_t>& y) const;

    // ad(e_r) as triplets (row, col, value) over the 248-slot basis
    std::vector<std::tuple<int, int, int>> ad_root_triplets(int r) const;

    // checks [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on `count` seeded random
    // basis triples; throws on the first failure
    void jacobi_spot_check(uint64_t seed, int count) const;

    // extraspecial-pair recursion; signs[k] is the sign (+1/-1) assigned to
    // extraspecial pair k in the order the pairs are discovered (ascending
    // canonical index of the sum root)
    static Chevalley build(const RootSystem& rs, const std::vector<int>& signs);

    // all extraspecial signs +1 (the convention used everywhere by default)
    static Chevalley build_default(const RootSystem& rs);

    // independent route: n(a,b) from a bimultiplicative form on the lattice
    static Chevalley build_from_sign_form(const RootSystem& rs);

    // cache round trip (text file keyed by ordering + signs hashes)
    bool save_cache(const std::string& path) const;
    static bool load_cache(const std::string& path, const RootSystem& rs,
                           const std::string& expected_signs_hash, Chevalley& out);
};

}  // namespace e8
