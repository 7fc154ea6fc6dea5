#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace e8 {

// A root is stored as twice its real coordinates in the standard orthonormal
// frame of R^8, so every entry is an integer: the 112 integer roots have
// doubled coordinates in {0, +-2} and the 128 half-integer roots have all
// entries +-1.  For every root the doubled coordinates satisfy sum_i v_i^2 = 8.
using RootVector = std::array<int, 8>;

struct RootSystem {
    // All 240 roots in canonical order: the 120 positive roots first, sorted
    // by (height ascending, simple-root coefficient vector lexicographically
    // descending), then their negatives in the same relative order, so
    // roots[120 + i] == -roots[i].  The first eight entries are the simple
    // roots in Dynkin numbering.
    std::vector<RootVector> roots;

    // expansion of each root over the simple roots (integral; all entries of
    // one sign), and its sum
    std::vector<std::array<int, 8>> coeffs;
    std::vector<int> heights;

    // index lookups
    int index_of(const RootVector& v) const;        // -1 if not a root
    int negate(int i) const { return (i + 120) % 240; }
    bool is_positive(int i) const { return i < 120; }

    // sum_index[i][j] = index of roots[i] + roots[j], or -1 if the sum is not
    // a root (including the case roots[i] + roots[j] == 0)
    std::vector<std::array<int16_t, 240>> sum_index;

    static RootSystem build();

    // inner product of two doubled-coordinate vectors divided by 2, i.e. the
    // actual inner product (u, v); roots have (v, v) = 2
    static int pairing(const RootVector& u, const RootVector& v);

    int pairing_idx(int i, int j) const { return pairing(roots[i], roots[j]); }

    // image of root j under the reflection in root i
    int reflect(int i, int j) const;

    // simple roots ordered by the Dynkin numbering; Cartan matrix
    // C[i][j] = (alpha_i, alpha_j)
    std::array<std::array<int, 8>, 8> cartan() const;

    // sha256 over the canonical ordering (used to key the constants cache)
    std::string ordering_hash() const;
};

}  // namespace e8
