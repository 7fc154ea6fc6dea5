#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "e8/fp.hpp"
#include "e8/intpoly.hpp"

namespace e8 {

// Polynomials over F_p: coefficients ascending, entries in the field form of
// F (plain residues for SmallFp, Montgomery form for Mont64), no trailing
// zeros.  Free functions carry the field explicitly.

template <class F>
void mp_normalize(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class F>
std::vector<u64> mp_from_intpoly(const IntPoly& p, const F& f) {
    std::vector<u64> out(p.c.size());
    for (size_t i = 0; i < p.c.size(); i++) {
        u64 r = mpz_fdiv_ui(p.c[i].get_mpz_t(), f.p);
        out[i] = f.embed(r);
    }
    mp_normalize<F>(out);
    return out;
}

template <class F>
std::vector<u64> mp_mul(const std::vector<u64>& a, const std::vector<u64>& b, const F& f) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            if (b[j]) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    mp_normalize<F>(r);
    return r;
}

template <class F>
std::vector<u64> mp_sub(const std::vector<u64>& a, const std::vector<u64>& b, const F& f) {
    std::vector<u64> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = f.sub(x, y);
    }
    mp_normalize<F>(r);
    return r;
}

// remainder of a by b (b nonzero); divides through by lc(b)
template <class F>
std::vector<u64> mp_rem(std::vector<u64> a, const std::vector<u64>& b, const F& f) {
    if (b.empty()) throw std::invalid_argument("mp_rem: zero divisor");
    u64 lcinv = f.inv(b.back());
    while (a.size() >= b.size()) {
        u64 q = f.mul(a.back(), lcinv);
        if (q != 0) {
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); i++)
                a[off + i] = f.sub(a[off + i], f.mul(q, b[i]));
        }
        a.pop_back();
        mp_normalize<F>(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

// exact quotient of a by b; throws if the division leaves a remainder
template <class F>
std::vector<u64> mp_div_exact(std::vector<u64> a, const std::vector<u64>& b, const F& f) {
    if (b.empty()) throw std::invalid_argument("mp_div_exact: zero divisor");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::domain_error("mp_div_exact: not divisible");
    u64 lcinv = f.inv(b.back());
    std::vector<u64> q(a.size() - b.size() + 1, 0);
    for (size_t k = q.size(); k-- > 0;) {
        u64 cur = a.size() > k + b.size() - 1 ? a[k + b.size() - 1] : 0;
        u64 qk = f.mul(cur, lcinv);
        q[k] = qk;
        if (qk != 0)
            for (size_t i = 0; i < b.size(); i++)
                a[k + i] = f.sub(a[k + i], f.mul(qk, b[i]));
    }
    for (u64 v : a)
        if (v != 0) throw std::domain_error("mp_div_exact: not divisible");
    mp_normalize<F>(q);
    return q;
}

template <class F>
std::vector<u64> mp_monic(std::vector<u64> a, const F& f) {
    if (a.empty()) return a;
    u64 inv = f.inv(a.back());
    for (auto& v : a) v = f.mul(v, inv);
    return a;
}

template <class F>
std::vector<u64> mp_gcd(std::vector<u64> a, std::vector<u64> b, const F& f) {
    while (!b.empty()) {
        a = mp_rem(std::move(a), b, f);
        std::swap(a, b);
    }
    return mp_monic(std::move(a), f);
}

template <class F>
std::vector<u64> mp_derivative(const std::vector<u64>& a, const F& f) {
    if (a.size() <= 1) return {};
    std::vector<u64> r(a.size() - 1);
    for (size_t i = 1; i < a.size(); i++) {
        u64 ki = f.embed(i % f.p);
        r[i - 1] = f.mul(a[i], ki);
    }
    mp_normalize<F>(r);
    return r;
}

// a^e mod m, with an arbitrary-precision exponent
template <class F>
std::vector<u64> mp_powmod(std::vector<u64> a, const mpz_class& e, const std::vector<u64>& m,
                           const F& f) {
    std::vector<u64> r{f.unit()};
    a = mp_rem(std::move(a), m, f);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mp_rem(mp_mul(r, r, f), m, f);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(mp_mul(r, a, f), m, f);
    }
    return r;
}

template <class F>
u64 mp_eval(const std::vector<u64>& a, u64 x, const F& f) {
    u64 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

}  // namespace e8
