#include "e8/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace e8 {

template <class F>
std::vector<u64> charpoly_mod(FpMat A, const F& f) {
    const int n = A.n;
    auto a = [&](int i, int j) -> u64& { return A.a[(size_t)i * n + j]; };

    // similarity reduction to upper Hessenberg with row/column swap pivoting
    for (int j = 0; j + 2 < n; j++) {
        int piv = -1;
        for (int i = j + 1; i < n; i++)
            if (a(i, j) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int k = 0; k < n; k++) std::swap(a(piv, k), a(j + 1, k));
            for (int k = 0; k < n; k++) std::swap(a(k, piv), a(k, j + 1));
        }
        u64 inv = f.inv(a(j + 1, j));
        for (int i = j + 2; i < n; i++) {
            if (a(i, j) == 0) continue;
            u64 t = f.mul(a(i, j), inv);
            for (int k = j; k < n; k++) a(i, k) = f.sub(a(i, k), f.mul(t, a(j + 1, k)));
            for (int r = 0; r < n; r++) a(r, j + 1) = f.add(a(r, j + 1), f.mul(t, a(r, i)));
        }
    }

    // p_m = charpoly of the leading m x m block of the Hessenberg matrix:
    // p_m = (x - H_mm) p_{m-1} - sum_i H_im (prod_{j=i+1..m} H_{j,j-1}) p_{i-1}
    std::vector<std::vector<u64>> p(n + 1);
    p[0] = {f.unit()};
    for (int m = 1; m <= n; m++) {
        p[m].assign(m + 1, 0);
        u64 diag = a(m - 1, m - 1);
        for (int k = 0; k < m; k++) {
            p[m][k + 1] = f.add(p[m][k + 1], p[m - 1][k]);
            if (diag) p[m][k] = f.sub(p[m][k], f.mul(diag, p[m - 1][k]));
        }
        u64 prod = f.unit();
        for (int i = m - 1; i >= 1; i--) {
            prod = f.mul(prod, a(i, i - 1));
            if (prod == 0) break;  // all remaining terms vanish
            u64 coef = f.mul(a(i - 1, m - 1), prod);
            if (coef == 0) continue;
            for (int k = 0; k < i; k++)
                p[m][k] = f.sub(p[m][k], f.mul(coef, p[i - 1][k]));
        }
    }
    std::vector<u64> out(n + 1);
    for (int k = 0; k <= n; k++) out[k] = f.normalize(p[n][k]);
    return out;
}

template std::vector<u64> charpoly_mod<SmallFp>(FpMat, const SmallFp&);
template std::vector<u64> charpoly_mod<Mont64>(FpMat, const Mont64&);

mpz_class charpoly_coeff_bound(const ZMat& A) {
    const int n = A.n;
    std::vector<mpz_class> norms(n);
    for (int i = 0; i < n; i++) {
        mpz_class s = 0;
        for (int j = 0; j < n; j++) s += A.at(i, j) * A.at(i, j);
        mpz_class r = sqrt(s);
        if (r * r < s) r += 1;  // ceil
        norms[i] = r;
    }
    std::sort(norms.begin(), norms.end(), std::greater<mpz_class>());
    mpz_class best = 1, binom = 1, prod = 1;
    for (int k = 1; k <= n; k++) {
        binom = binom * (n - k + 1) / k;
        prod *= norms[k - 1];
        mpz_class cand = binom * prod;
        if (cand > best) best = cand;
    }
    return best;
}

CrtPlan make_crt_plan(const ZMat& A, int control_count) {
    CrtPlan plan;
    plan.bound = charpoly_coeff_bound(A);
    // the first control_count primes of the deterministic sequence are
    // reserved as controls; reconstruction primes come after them
    plan.control = crt_primes(control_count, 0);
    mpz_class target = 2 * plan.bound, have = 1;
    size_t skip = control_count;
    while (have <= target) {
        for (u64 p : crt_primes(16, skip)) {
            plan.recon.push_back(p);
            have *= p;
            if (have > target) break;
        }
        skip += 16;
    }
    return plan;
}

namespace {

std::vector<u64> charpoly_residues(const ZMat& A, u64 p) {
    Mont64 f(p);
    return charpoly_mod(reduce_mod(A, f), f);
}

}  // namespace

IntPoly charpoly_exact(const ZMat& A, const CrtPlan& plan, bool stabilize) {
    const int n = A.n;
    std::vector<mpz_class> acc(n + 1, 0);  // combined residues in [0, modulus)
    mpz_class modulus = 1;
    std::vector<mpz_class> lifted(n + 1);
    int stable_rounds = 0;
    size_t used = 0;
    for (u64 p : plan.recon) {
        std::vector<u64> r = charpoly_residues(A, p);
        // Garner step: acc += modulus * ((r - acc) * modulus^{-1} mod p)
        Mont64 f(p);
        u64 minv = f.normalize(f.inv(f.embed(mpz_fdiv_ui(modulus.get_mpz_t(), p))));
        for (int k = 0; k <= n; k++) {
            u64 cur = mpz_fdiv_ui(acc[k].get_mpz_t(), p);
            u64 diff = r[k] >= cur ? r[k] - cur : r[k] + p - cur;
            u64 delta = (u64)(((u128)diff * minv) % p);
            acc[k] += modulus * delta;
        }
        modulus *= p;
        used++;
        if (stabilize) {
            std::vector<mpz_class> lift(n + 1);
            mpz_class half = modulus / 2;
            for (int k = 0; k <= n; k++)
                lift[k] = acc[k] > half ? acc[k] - modulus : acc[k];
            if (used > 1 && lift == lifted) {
                stable_rounds++;
                if (stable_rounds >= 2) { lifted = lift; break; }
            } else {
                stable_rounds = 0;
            }
            lifted = lift;
        }
    }
    if (!stabilize || stable_rounds < 2) {
        mpz_class half = modulus / 2;
        for (int k = 0; k <= n; k++)
            lifted[k] = acc[k] > half ? acc[k] - modulus : acc[k];
    }
    for (u64 q : plan.control) {
        std::vector<u64> r = charpoly_residues(A, q);
        for (int k = 0; k <= n; k++) {
            u64 want = mpz_fdiv_ui(lifted[k].get_mpz_t(), q);
            if (want != r[k])
                throw std::runtime_error("charpoly_exact: control prime mismatch");
        }
    }
    return IntPoly(std::move(lifted));
}

IntPoly charpoly_exact(const ZMat& A) { return charpoly_exact(A, make_crt_plan(A)); }

}  // namespace e8
