#include "e8/fp.hpp"

namespace e8 {

static u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

static u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    // these witnesses decide primality for all n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> crt_primes(size_t count, size_t skip) {
    std::vector<u64> out;
    out.reserve(count);
    u64 c = (u64(1) << 61) + 1;
    size_t skipped = 0;
    while (out.size() < count) {
        if (is_prime_u64(c)) {
            if (skipped < skip) skipped++;
            else out.push_back(c);
        }
        c += 2;
    }
    return out;
}

}  // namespace e8
