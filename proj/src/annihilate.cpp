#include "e8/annihilate.hpp"

#include <tuple>
#include <vector>

#include "e8/modpoly.hpp"
#include "e8/rng.hpp"

namespace e8 {

namespace {

struct SparseOp {
    int n = 0;
    // CSR-ish: per row, (col, value in field form)
    std::vector<std::vector<std::pair<int, u64>>> rows;
};

SparseOp to_sparse_mod(const ZMat& M, const Mont64& f) {
    SparseOp s;
    s.n = M.n;
    s.rows.resize(M.n);
    for (int i = 0; i < M.n; i++)
        for (int j = 0; j < M.n; j++) {
            if (M.at(i, j) == 0) continue;
            u64 v = f.embed(mpz_fdiv_ui(M.at(i, j).get_mpz_t(), f.p));
            if (v) s.rows[i].emplace_back(j, v);
        }
    return s;
}

void apply(const SparseOp& s, const std::vector<u64>& x, std::vector<u64>& out, const Mont64& f) {
    for (int i = 0; i < s.n; i++) {
        u64 acc = 0;
        for (auto [j, v] : s.rows[i])
            if (x[j]) acc = f.add(acc, f.mul(v, x[j]));
        out[i] = acc;
    }
}

// w = (M - Id) * P(M) * x for one probe vector x; true iff w == 0
bool probe_zero(const SparseOp& s, const std::vector<u64>& pcoef, const std::vector<u64>& x,
                const Mont64& f) {
    const int n = s.n;
    std::vector<u64> w(n, 0), tmp(n, 0);
    for (size_t k = pcoef.size(); k-- > 0;) {
        apply(s, w, tmp, f);
        std::swap(w, tmp);
        if (pcoef[k])
            for (int i = 0; i < n; i++) w[i] = f.add(w[i], f.mul(pcoef[k], x[i]));
    }
    // multiply by (M - Id)
    apply(s, w, tmp, f);
    for (int i = 0; i < n; i++)
        if (f.sub(tmp[i], w[i]) != 0) return false;
    return true;
}

}  // namespace

AnnihilationResult annihilation_check(const ZMat& M, const IntPoly& P, bool rigorous,
                                      int evidence_primes, int evidence_vectors, uint64_t seed) {
    AnnihilationResult res;
    res.rigorous = rigorous;

    // entry bound: |(M - Id) P(M)|_max <= (|M|_inf + 1) * sum_k |c_k| |M|_inf^k
    mpz_class target = 1;
    if (rigorous) {
        mpz_class nrm = M.inf_norm();
        mpz_class sum = 0, pw = 1;
        for (const auto& c : P.c) {
            sum += abs(c) * pw;
            pw *= nrm;
        }
        target = 2 * (nrm + 1) * sum;
    }

    // primes from a block far past anything the CRT plans consume
    const size_t kFreshSkip = 4096;
    mpz_class modulus = 1;
    size_t batch = 0;
    int used = 0;
    while (true) {
        auto primes = crt_primes(8, kFreshSkip + batch * 8);
        batch++;
        for (u64 p : primes) {
            Mont64 f(p);
            SparseOp s = to_sparse_mod(M, f);
            auto pc = mp_from_intpoly(P, f);
            pc.resize(P.c.size());  // keep zero coefficients for Horner
            if (rigorous) {
                // full column sweep: probe with every coordinate vector
                std::vector<u64> e(M.n, 0);
                for (int j = 0; j < M.n; j++) {
                    e[j] = f.unit();
                    if (!probe_zero(s, pc, e, f)) { res.primes_used = used + 1; return res; }
                    e[j] = 0;
                }
            } else {
                Rng rng(Rng::substream(seed, p).next());
                for (int t = 0; t < evidence_vectors; t++) {
                    std::vector<u64> x(M.n);
                    for (auto& v : x) v = f.embed(rng.below(f.p));
                    if (!probe_zero(s, pc, x, f)) { res.primes_used = used + 1; return res; }
                }
            }
            used++;
            modulus *= p;
            bool enough = rigorous ? (modulus > target && used >= 3) : (used >= evidence_primes);
            if (enough) {
                res.zero = true;
                res.primes_used = used;
                return res;
            }
        }
    }
}

}  // namespace e8
