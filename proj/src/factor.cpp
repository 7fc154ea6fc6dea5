#include "e8/factor.hpp"

#include <sstream>
#include <stdexcept>

#include "e8/modpoly.hpp"
#include "e8/rng.hpp"

namespace e8 {

namespace {

// p-th root of a polynomial with zero derivative (f is then a polynomial in
// x^p and c^p = c over the prime field)
std::vector<u64> pth_root(const std::vector<u64>& f, const SmallFp& fp) {
    std::vector<u64> g((f.size() - 1) / fp.p + 1, 0);
    for (size_t i = 0; i < f.size(); i += fp.p) g[i / fp.p] = f[i];
    return g;
}

// product of the distinct monic irreducible factors of f
std::vector<u64> radical(std::vector<u64> f, const SmallFp& fp) {
    std::vector<u64> rad{fp.unit()};
    f = mp_monic(std::move(f), fp);
    while (f.size() > 1) {
        auto d = mp_derivative(f, fp);
        if (d.empty()) {
            f = pth_root(f, fp);
            continue;
        }
        // u carries one copy of every factor whose multiplicity is not
        // divisible by p
        auto u = mp_div_exact(f, mp_gcd(f, d, fp), fp);
        rad = mp_mul(mp_div_exact(rad, mp_gcd(rad, u, fp), fp), u, fp);
        // strip all copies of u's factors; what survives has only
        // multiplicities divisible by p and is handled by the root branch
        while (true) {
            auto g = mp_gcd(f, u, fp);
            if (g.size() <= 1) break;
            f = mp_div_exact(std::move(f), g, fp);
        }
    }
    return rad;
}

// distinct-degree factorization of a squarefree monic f
DegreePattern ddf(std::vector<u64> f, const SmallFp& fp) {
    DegreePattern pat;
    const std::vector<u64> x{0, fp.unit()};
    std::vector<u64> h = mp_rem(x, f, fp);
    int d = 0;
    while ((int)f.size() - 1 >= 2 * (d + 1)) {
        d++;
        h = mp_powmod(std::move(h), mpz_class((unsigned long)fp.p), f, fp);
        auto g = mp_gcd(mp_sub(h, x, fp), f, fp);
        if (g.size() > 1) {
            int dg = (int)g.size() - 1;
            if (dg % d != 0) throw std::logic_error("ddf: block degree not a multiple");
            pat[d] += dg / d;
            f = mp_div_exact(std::move(f), g, fp);
            h = mp_rem(std::move(h), f, fp);
        }
    }
    if (f.size() > 1) pat[(int)f.size() - 1]++;
    return pat;
}

// equal-degree splitting (Cantor-Zassenhaus) of a squarefree product of
// irreducibles of degree d; odd p
void edf(std::vector<u64> g, int d, const SmallFp& fp, Rng& rng,
         std::vector<std::vector<u64>>& out) {
    int deg = (int)g.size() - 1;
    if (deg == d) {
        out.push_back(mp_monic(std::move(g), fp));
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)fp.p, (unsigned long)d);
    e = (e - 1) / 2;
    while (true) {
        std::vector<u64> r(deg);
        for (auto& c : r) c = rng.below(fp.p);
        mp_normalize<SmallFp>(r);
        if (r.size() <= 1) continue;
        auto s = mp_powmod(std::move(r), e, g, fp);
        if (s.empty()) continue;
        s[0] = fp.sub(s[0], fp.unit());
        auto t = mp_gcd(s, g, fp);
        if (t.size() > 1 && t.size() < g.size()) {
            edf(t, d, fp, rng, out);
            edf(mp_div_exact(std::move(g), t, fp), d, fp, rng, out);
            return;
        }
    }
}

}  // namespace

PatternResult degree_pattern_mod(std::vector<u64> f, const SmallFp& fp) {
    PatternResult res;
    res.p = fp.p;
    mp_normalize<SmallFp>(f);
    if (f.size() <= 1) throw std::invalid_argument("degree_pattern_mod: constant polynomial");
    f = mp_monic(std::move(f), fp);
    auto d = mp_derivative(f, fp);
    res.squarefree = !d.empty() && mp_gcd(f, d, fp).size() == 1;
    res.degrees = ddf(res.squarefree ? std::move(f) : radical(std::move(f), fp), fp);
    return res;
}

PatternResult factor_degree_pattern(const IntPoly& P, u64 p) {
    SmallFp fp(p);
    auto f = mp_from_intpoly(P, fp);
    if ((int)f.size() - 1 != P.degree())
        throw std::domain_error("factor_degree_pattern: leading coefficient vanishes mod p");
    return degree_pattern_mod(std::move(f), fp);
}

int pattern_signature(const DegreePattern& d) {
    long points = 0, cycles = 0;
    for (auto [deg, cnt] : d) {
        points += (long)deg * cnt;
        cycles += cnt;
    }
    return (points - cycles) % 2 == 0 ? 1 : -1;
}

std::string pattern_to_string(const DegreePattern& d) {
    std::ostringstream os;
    bool first = true;
    for (auto [deg, cnt] : d) {
        if (!first) os << " ";
        os << deg << "^" << cnt;
        first = false;
    }
    return os.str();
}

std::vector<std::pair<std::vector<u64>, int>> factor_mod_p(const IntPoly& P, u64 p,
                                                           uint64_t seed) {
    if (p == 2) throw std::invalid_argument("factor_mod_p: equal-degree splitting needs odd p");
    SmallFp fp(p);
    Rng rng(seed);
    auto f0 = mp_from_intpoly(P, fp);
    if ((int)f0.size() - 1 != P.degree())
        throw std::domain_error("factor_mod_p: leading coefficient vanishes mod p");
    f0 = mp_monic(std::move(f0), fp);

    // distinct-degree pass over the radical, then equal-degree splitting
    std::vector<std::vector<u64>> irreducibles;
    auto f = radical(f0, fp);
    const std::vector<u64> x{0, fp.unit()};
    std::vector<u64> h = mp_rem(x, f, fp);
    int d = 0;
    while ((int)f.size() - 1 >= 2 * (d + 1)) {
        d++;
        h = mp_powmod(std::move(h), mpz_class((unsigned long)p), f, fp);
        auto g = mp_gcd(mp_sub(h, x, fp), f, fp);
        if (g.size() > 1) {
            edf(g, d, fp, rng, irreducibles);
            f = mp_div_exact(std::move(f), g, fp);
            h = mp_rem(std::move(h), f, fp);
        }
    }
    if (f.size() > 1) irreducibles.push_back(f);

    std::vector<std::pair<std::vector<u64>, int>> out;
    for (auto& irr : irreducibles) {
        int mult = 0;
        while (true) {
            auto r = mp_rem(f0, irr, fp);
            if (!r.empty()) break;
            f0 = mp_div_exact(std::move(f0), irr, fp);
            mult++;
        }
        if (mult == 0) throw std::logic_error("factor_mod_p: found factor does not divide");
        out.emplace_back(std::move(irr), mult);
    }
    if (f0.size() != 1) throw std::logic_error("factor_mod_p: leftover factor");
    return out;
}

}  // namespace e8
