#include "e8/zmat.hpp"

#include <stdexcept>

namespace e8 {

ZMat ZMat::identity(int n) {
    ZMat m(n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

size_t ZMat::nonzero_count() const {
    size_t c = 0;
    for (const auto& v : a)
        if (v != 0) c++;
    return c;
}

mpz_class ZMat::max_abs_entry() const {
    mpz_class m = 0;
    for (const auto& v : a) {
        mpz_class av = abs(v);
        if (av > m) m = av;
    }
    return m;
}

mpz_class ZMat::inf_norm() const {
    mpz_class best = 0;
    for (int i = 0; i < n; i++) {
        mpz_class s = 0;
        for (int j = 0; j < n; j++) s += abs(at(i, j));
        if (s > best) best = s;
    }
    return best;
}

ZMat mul(const ZMat& a, const ZMat& b) {
    if (a.n != b.n) throw std::invalid_argument("ZMat mul: size mismatch");
    ZMat c(a.n);
    mpz_class tmp;
    for (int i = 0; i < a.n; i++) {
        for (int k = 0; k < a.n; k++) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n; j++) {
                if (b.at(k, j) == 0) continue;
                tmp = aik * b.at(k, j);
                c.at(i, j) += tmp;
            }
        }
    }
    return c;
}

ZMat mul_sparse(const ZMat& a, const SparseZ& s) {
    if (a.n != s.n) throw std::invalid_argument("mul_sparse: size mismatch");
    ZMat c(a.n);
    mpz_class tmp;
    for (const auto& [j, k, v] : s.t) {
        // C[:,k] += A[:,j] * v
        for (int i = 0; i < a.n; i++) {
            const mpz_class& aij = a.at(i, j);
            if (aij == 0) continue;
            tmp = aij * v;
            c.at(i, k) += tmp;
        }
    }
    return c;
}

}  // namespace e8
