#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "e8/perm.hpp"
#include "e8/rng.hpp"
#include "e8/roots.hpp"

namespace e8 {

// permutation action of the reflection in simple root i (0..7)
Perm simple_reflection_perm(const RootSystem& rs, int i);

// The reflection group on the 240 roots, held as a stabilizer chain
// (base-and-strong-generating-set).  Build verifies the chain by sifting all
// Schreier generators, so order() is certified, membership tests are exact,
// and random_element() samples exactly uniformly (independent transversal
// picks at every level).
struct WeylGroup {
    const RootSystem* rs = nullptr;

    struct Level {
        int base = -1;
        std::vector<Perm> gens;              // generators fixing all earlier bases
        std::vector<int> orbit;              // discovery order, orbit[0] == base
        std::array<int32_t, 240> tpos;       // point -> index into transversal, -1 outside
        std::vector<Perm> transversal;       // transversal[k] maps base -> orbit[k]
    };
    std::vector<Level> levels;

    static WeylGroup build(const RootSystem& rs);

    mpz_class order() const;
    bool contains(const Perm& g) const;
    Perm random_element(Rng& rng) const;
    // s_1 s_2 ... s_8 (a Coxeter element)
    Perm coxeter_element() const;
};

// true iff the linear map sending each simple root to its image under g
// preserves the Cartan pairing and maps the root set onto itself, acting on
// every root the way the permutation says
bool lattice_automorphism_check(const RootSystem& rs, const Perm& g);
// the same predicate for an arbitrary integral 8x8 matrix in the simple-root
// basis (columns are images); lets tests feed in non-automorphisms like 2*Id
bool lattice_automorphism_matrix_check(const RootSystem& rs,
                                       const std::array<std::array<int, 8>, 8>& mat);

// N uniform samples; returns cycle type -> count, encoded canonically
std::map<std::string, long> class_frequency_experiment(const WeylGroup& w, long samples,
                                                       uint64_t seed);

}  // namespace e8
