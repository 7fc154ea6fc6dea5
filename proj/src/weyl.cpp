#include "e8/weyl.hpp"

#include <stdexcept>

namespace e8 {

Perm simple_reflection_perm(const RootSystem& rs, int i) {
    if (i < 0 || i >= 8) throw std::invalid_argument("simple_reflection_perm: index out of range");
    Perm p;
    for (int j = 0; j < 240; j++) p.img[j] = (uint8_t)rs.reflect(i, j);
    return p;
}

namespace {

void recompute_orbit(WeylGroup::Level& lv) {
    lv.orbit.clear();
    lv.tpos.fill(-1);
    lv.transversal.clear();
    lv.orbit.push_back(lv.base);
    lv.tpos[lv.base] = 0;
    lv.transversal.push_back(Perm::identity());
    for (size_t q = 0; q < lv.orbit.size(); q++) {
        int x = lv.orbit[q];
        for (const Perm& s : lv.gens) {
            int y = s[x];
            if (lv.tpos[y] < 0) {
                lv.tpos[y] = (int32_t)lv.orbit.size();
                lv.orbit.push_back(y);
                lv.transversal.push_back(s * lv.transversal[lv.tpos[x]]);
            }
        }
    }
}

}  // namespace

// strips g through levels [from, end); returns the residue and the level at
// which sifting stopped (levels.size() if it ran off the chain)
static std::pair<Perm, size_t> sift(const std::vector<WeylGroup::Level>& levels, Perm g,
                                    size_t from) {
    for (size_t l = from; l < levels.size(); l++) {
        if (g.is_identity()) return {g, l};
        int x = g[levels[l].base];
        if (levels[l].tpos[x] < 0) return {g, l};
        g = levels[l].transversal[levels[l].tpos[x]].inverse() * g;
    }
    return {g, levels.size()};
}

WeylGroup WeylGroup::build(const RootSystem& rs) {
    WeylGroup w;
    w.rs = &rs;

    // verify(l): with deeper levels already verified, recompute level l's
    // orbit and sift every Schreier generator; a nontrivial residue extends a
    // deeper level (or opens a new one) and reverifies the stretch between
    // w.levels may grow (and reallocate) inside the sweep, so the level is
    // re-indexed on every access and loop values are copied out; level l's
    // own gens, orbit and transversal never change during its sweep
    std::function<void(size_t)> verify = [&](size_t l) {
        recompute_orbit(w.levels[l]);
        for (size_t q = 0; q < w.levels[l].orbit.size(); q++) {
            int x = w.levels[l].orbit[q];
            Perm tx = w.levels[l].transversal[w.levels[l].tpos[x]];
            for (size_t gi = 0; gi < w.levels[l].gens.size(); gi++) {
                Perm s = w.levels[l].gens[gi];
                Perm schreier = w.levels[l].transversal[w.levels[l].tpos[s[x]]].inverse() * (s * tx);
                auto [h, m] = sift(w.levels, std::move(schreier), l + 1);
                if (h.is_identity()) continue;
                if (m == w.levels.size()) {
                    Level fresh;
                    fresh.base = h.first_moved();
                    w.levels.push_back(std::move(fresh));
                }
                // h fixes the bases of levels l..m-1, so it joins every
                // generator list in l+1..m
                for (size_t k = l + 1; k <= m; k++) w.levels[k].gens.push_back(h);
                for (size_t k = m; k > l; k--) verify(k);
                // level l's own orbit is unchanged (h lies in the group the
                // existing generators span), so continue the sweep
            }
        }
    };

    Level top;
    top.base = -1;
    std::vector<Perm> gens;
    for (int i = 0; i < 8; i++) gens.push_back(simple_reflection_perm(rs, i));
    for (const Perm& g : gens)
        if (!g.is_identity() && top.base < 0) top.base = g.first_moved();
    if (top.base < 0) throw std::logic_error("WeylGroup: generators are all trivial");
    top.gens = std::move(gens);
    w.levels.push_back(std::move(top));
    verify(0);
    return w;
}

mpz_class WeylGroup::order() const {
    mpz_class o = 1;
    for (const auto& lv : levels) o *= (long)lv.orbit.size();
    return o;
}

bool WeylGroup::contains(const Perm& g) const {
    auto [h, l] = sift(levels, g, 0);
    (void)l;
    return h.is_identity();
}

Perm WeylGroup::random_element(Rng& rng) const {
    Perm g = Perm::identity();
    for (const auto& lv : levels) {
        size_t k = (size_t)rng.below(lv.orbit.size());
        g = g * lv.transversal[k];
    }
    return g;
}

Perm WeylGroup::coxeter_element() const {
    Perm c = simple_reflection_perm(*rs, 0);
    for (int i = 1; i < 8; i++) c = c * simple_reflection_perm(*rs, i);
    return c;
}

bool lattice_automorphism_matrix_check(const RootSystem& rs,
                                       const std::array<std::array<int, 8>, 8>& mat) {
    // Gram preservation: (A e_i, A e_j) must equal the Cartan pairing, where
    // columns of A are coefficient vectors over the simple roots
    auto cart = rs.cartan();
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 8; j++) {
            long acc = 0;
            for (int a = 0; a < 8; a++)
                for (int b = 0; b < 8; b++) acc += (long)mat[a][i] * cart[a][b] * mat[b][j];
            if (acc != cart[i][j]) return false;
        }
    }
    // the image of every root must be a root
    for (int r = 0; r < 240; r++) {
        std::array<int, 8> im{};
        for (int a = 0; a < 8; a++)
            for (int b = 0; b < 8; b++) im[a] += mat[a][b] * rs.coeffs[r][b];
        bool found = false;
        for (int s = 0; s < 240 && !found; s++)
            if (rs.coeffs[s] == im) found = true;
        if (!found) return false;
    }
    return true;
}

bool lattice_automorphism_check(const RootSystem& rs, const Perm& g) {
    std::array<std::array<int, 8>, 8> mat{};
    for (int j = 0; j < 8; j++)
        for (int a = 0; a < 8; a++) mat[a][j] = rs.coeffs[g[j]][a];
    if (!lattice_automorphism_matrix_check(rs, mat)) return false;
    // the linear map must reproduce the permutation on all 240 roots
    for (int r = 0; r < 240; r++) {
        std::array<int, 8> im{};
        for (int a = 0; a < 8; a++)
            for (int b = 0; b < 8; b++) im[a] += mat[a][b] * rs.coeffs[r][b];
        if (im != rs.coeffs[g[r]]) return false;
    }
    return true;
}

std::map<std::string, long> class_frequency_experiment(const WeylGroup& w, long samples,
                                                       uint64_t seed) {
    std::map<std::string, long> counts;
    for (long i = 0; i < samples; i++) {
        Rng rng = Rng::substream(seed, (uint64_t)i);
        Perm g = w.random_element(rng);
        counts[cycle_type_to_string(cycle_type(g))]++;
    }
    return counts;
}

}  // namespace e8
