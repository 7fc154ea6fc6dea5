#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace e8 {

using u32 = uint32_t;
using u64 = uint64_t;
using u128 = unsigned __int128;

// Prime field with Barrett reduction, valid for any modulus p with 2 <= p < 2^31.
// All hot loops in the small-prime paths (factorization patterns, walks) go
// through mul(), which costs two multiplies and a conditional subtract instead
// of a hardware division.
struct SmallFp {
    u64 p = 0;
    u64 magic = 0;  // floor(2^64 / p)

    SmallFp() = default;
    explicit SmallFp(u64 p_) : p(p_) {
        if (p < 2 || p >= (u64(1) << 31))
            throw std::invalid_argument("SmallFp: modulus out of range");
        magic = (u64)((u128(1) << 64) / p);
    }

    u64 reduce(u64 a) const {
        // a < 2^62 required (product of two values < 2^31)
        u64 q = (u64)(((u128)a * magic) >> 64);
        u64 r = a - q * p;
        if (r >= p) r -= p;
        return r;
    }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a ? p - a : 0; }
    u64 mul(u64 a, u64 b) const { return reduce(a * b); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        // extended Euclid; p need not be prime as long as gcd(a,p)=1
        int64_t t = 0, nt = 1, r = (int64_t)p, nr = (int64_t)(a % p);
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("SmallFp::inv: not invertible");
        return t < 0 ? (u64)(t + (int64_t)p) : (u64)t;
    }
    u64 from_int(int64_t v) const {
        int64_t m = v % (int64_t)p;
        return m < 0 ? (u64)(m + (int64_t)p) : (u64)m;
    }
    // field-form conversions; trivial here, Montgomery form elsewhere
    u64 embed(u64 v) const { return v % p; }
    u64 normalize(u64 v) const { return v; }
    u64 unit() const { return 1 % p; }
};

// Montgomery arithmetic for odd moduli up to 2^62.  Values are kept in
// Montgomery form (x * 2^64 mod p); convert with to_mont / from_mont.
// Used by the CRT reconstruction paths where the primes are ~61 bits.
struct Mont64 {
    u64 p = 0;
    u64 ninv = 0;   // -p^{-1} mod 2^64
    u64 r2 = 0;     // 2^128 mod p
    u64 one = 0;    // 2^64 mod p

    Mont64() = default;
    explicit Mont64(u64 p_) : p(p_) {
        if (p < 3 || (p & 1) == 0 || p >= (u64(1) << 62))
            throw std::invalid_argument("Mont64: need odd modulus < 2^62");
        u64 inv = p;  // Newton iteration: inv *= 2 - p*inv, five rounds for 64 bits
        for (int i = 0; i < 5; i++) inv *= 2 - p * inv;
        ninv = ~inv + 1;
        u128 r = (u128(1) << 64) % p;
        one = (u64)r;
        r2 = (u64)((r * r) % p);
    }

    u64 redc(u128 t) const {
        u64 m = (u64)t * ninv;
        u128 s = (t + (u128)m * p) >> 64;
        u64 r = (u64)s;
        return r >= p ? r - p : r;
    }
    u64 to_mont(u64 a) const { return redc((u128)(a % p) * r2); }
    u64 from_mont(u64 a) const { return redc((u128)a); }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a ? p - a : 0; }
    u64 mul(u64 a, u64 b) const { return redc((u128)a * b); }
    u64 pow(u64 a, u64 e) const {
        u64 r = one;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        // p prime in all our uses
        return pow(a, p - 2);
    }
    u64 from_int(int64_t v) const {
        int64_t m = v % (int64_t)p;
        return to_mont(m < 0 ? (u64)(m + (int64_t)p) : (u64)m);
    }
    u64 embed(u64 v) const { return to_mont(v); }
    u64 normalize(u64 v) const { return from_mont(v); }
    u64 unit() const { return one; }
};

// Deterministic 61-bit prime sequence for CRT work.  Starts just above 2^61
// and walks upward, so the k-th prime is the same in every run.
std::vector<u64> crt_primes(size_t count, size_t skip = 0);

// Miller-Rabin, deterministic for all 64-bit inputs.
bool is_prime_u64(u64 n);

}  // namespace e8
