#include "e8/disc.hpp"

#include <stdexcept>

#include "e8/modpoly.hpp"

namespace e8 {

u64 resultant_mod(const IntPoly& pa, const IntPoly& pb, const Mont64& f) {
    auto a = mp_from_intpoly(pa, f);
    auto b = mp_from_intpoly(pb, f);
    if ((int)a.size() - 1 != pa.degree() || (int)b.size() - 1 != pb.degree())
        throw std::domain_error("resultant_mod: degree drops mod p");
    u64 res = f.unit();
    while (b.size() > 1) {
        auto r = mp_rem(a, b, f);
        int da = (int)a.size() - 1, db = (int)b.size() - 1;
        int dr = (int)r.size() - 1;  // -1 when r == 0
        if ((da & 1) && (db & 1)) res = f.neg(res);
        res = f.mul(res, f.pow(b.back(), (u64)(da - (dr < 0 ? 0 : dr))));
        if (r.empty()) return 0;
        a = std::move(b);
        b = std::move(r);
    }
    if (b.empty()) return a.size() > 1 ? 0 : f.normalize(f.unit());
    // b is a nonzero constant
    res = f.mul(res, f.pow(b[0], (u64)(a.size() - 1)));
    return f.normalize(res);
}

mpz_class discriminant_exact(const IntPoly& P) {
    if (!P.is_monic()) throw std::invalid_argument("discriminant_exact: polynomial must be monic");
    int d = P.degree();
    if (d < 1) throw std::invalid_argument("discriminant_exact: degree must be positive");
    IntPoly dP = derivative(P);

    // Hadamard bound on the Sylvester determinant: (d-1) rows of P and d rows
    // of P', each bounded by its coefficient 2-norm
    auto norm2 = [](const IntPoly& q) {
        mpz_class s = 0;
        for (const auto& c : q.c) s += c * c;
        mpz_class r = sqrt(s);
        if (r * r < s) r += 1;
        return r;
    };
    mpz_class bound = 1;
    mpz_class np = norm2(P), ndp = norm2(dP);
    for (int i = 0; i < d - 1; i++) bound *= np;
    for (int i = 0; i < d; i++) bound *= ndp;
    mpz_class target = 2 * bound;

    std::vector<u64> control = crt_primes(2, 0);
    mpz_class acc = 0, modulus = 1;
    size_t skip = 2;
    while (modulus <= target) {
        for (u64 p : crt_primes(16, skip)) {
            Mont64 f(p);
            u64 r = resultant_mod(P, dP, f);
            u64 minv = f.normalize(f.inv(f.embed(mpz_fdiv_ui(modulus.get_mpz_t(), p))));
            u64 cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
            u64 diff = r >= cur ? r - cur : r + p - cur;
            acc += modulus * (u64)(((u128)diff * minv) % p);
            modulus *= p;
            if (modulus > target) break;
        }
        skip += 16;
    }
    mpz_class res = acc > modulus / 2 ? acc - modulus : acc;
    for (u64 q : control) {
        Mont64 f(q);
        if (resultant_mod(P, dP, f) != mpz_fdiv_ui(res.get_mpz_t(), q))
            throw std::runtime_error("discriminant_exact: control prime mismatch");
    }
    // monic: no leading-coefficient division; only the sign normalization
    if (((long)d * (d - 1) / 2) % 2 != 0) res = -res;
    return res;
}

}  // namespace e8
