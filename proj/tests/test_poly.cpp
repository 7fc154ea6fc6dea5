#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <string>
#include <vector>

#include "e8/annihilate.hpp"
#include "e8/charpoly.hpp"
#include "e8/disc.hpp"
#include "e8/factor.hpp"
#include "e8/fp.hpp"
#include "e8/intpoly.hpp"
#include "e8/rng.hpp"
#include "e8/sieve.hpp"
#include "e8/zmat.hpp"

using namespace e8;

namespace {

IntPoly rand_poly(Rng& rng, int deg, long lo, long hi) {
    std::vector<mpz_class> c(deg + 1);
    for (int k = 0; k < deg; k++) c[k] = rng.range(lo, hi);
    c[deg] = 1;
    return IntPoly(std::move(c));
}

ZMat rand_mat(Rng& rng, int n, long lo, long hi) {
    ZMat m(n);
    for (auto& v : m.a) v = rng.range(lo, hi);
    return m;
}

// companion matrix of a monic polynomial, acting on column vectors
ZMat companion(const IntPoly& f) {
    int n = f.degree();
    ZMat m(n);
    for (int i = 1; i < n; i++) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; i++) m.at(i, n - 1) = -f.c[(size_t)i];
    return m;
}

// Faddeev-LeVerrier: c_{n-k} = -tr(A M_k)/k with M_k = A M_{k-1} + c_{n-k+1} I.
// Division-free in the sense that every division by k is exact over Z, so the
// whole run is a single-pass integer recursion independent of the CRT path.
IntPoly charpoly_resolvent(const ZMat& A) {
    int n = A.n;
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    ZMat M(n);
    for (int k = 1; k <= n; k++) {
        // M <- A*M + c[n-k+1]*I
        ZMat next = mul(A, M);
        for (int i = 0; i < n; i++) next.at(i, i) += c[n - k + 1];
        M = std::move(next);
        ZMat AM = mul(A, M);
        mpz_class tr = 0;
        for (int i = 0; i < n; i++) tr += AM.at(i, i);
        REQUIRE(tr % k == 0);
        c[n - k] = -tr / k;
    }
    return IntPoly(std::move(c));
}

u64 naive_mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

}  // namespace

TEST_CASE("integer polynomial arithmetic basics") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(IntPoly::from_ints({5, 0, 0}).degree() == 0);  // trailing zeros trimmed
    CHECK(IntPoly::from_ints({0}).is_zero());

    IntPoly a = IntPoly::from_ints({-1, 2, 3});  // 3T^2 + 2T - 1
    IntPoly b = IntPoly::from_ints({4, -5});     // -5T + 4
    CHECK(add(a, b) == IntPoly::from_ints({3, -3, 3}));
    CHECK(sub(add(a, b), b) == a);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, b).degree() == 3);
    CHECK(derivative(a) == IntPoly::from_ints({2, 6}));
    CHECK(a.eval(2) == 15);
    CHECK(a.eval(-1) == 0);

    Rng rng(42);
    for (int t = 0; t < 20; t++) {
        IntPoly p = rand_poly(rng, 1 + (int)rng.below(6), -50, 50);
        IntPoly q = rand_poly(rng, 1 + (int)rng.below(6), -50, 50);
        CHECK(divide_exact(mul(p, q), q) == p);
        // Horner evaluation against a plain power sum
        mpz_class x = rng.range(-9, 9), s = 0, xp = 1;
        for (int k = 0; k <= p.degree(); k++) { s += p.c[(size_t)k] * xp; xp *= x; }
        CHECK(p.eval(x) == s);
    }
    CHECK_THROWS_AS(divide_exact(IntPoly::from_ints({1, 1}), IntPoly::from_ints({1, 1, 1})),
                    std::exception);
}

TEST_CASE("unit eigenvalue stripping divides out (T-1)^k exactly") {
    IntPoly tm1 = IntPoly::from_ints({-1, 1});
    IntPoly f = IntPoly::from_ints({2, 1});  // T + 2
    IntPoly a = f;
    for (int k = 0; k < 3; k++) a = mul(a, tm1);
    CHECK(strip_unit_eigenvalue(a, 3) == f);
    CHECK(strip_unit_eigenvalue(a, 0) == a);
    CHECK(strip_unit_eigenvalue(a, 2) == mul(f, tm1));
    CHECK_THROWS_AS(strip_unit_eigenvalue(a, 4), std::exception);
    CHECK_THROWS_AS(strip_unit_eigenvalue(IntPoly::from_ints({1, 1}), 1), std::exception);
}

TEST_CASE("palindromic transform inverts building a(T) = T^m q(T + 1/T)") {
    Rng rng(7);
    IntPoly t2p1 = IntPoly::from_ints({1, 0, 1});  // T^2 + 1
    for (int t = 0; t < 20; t++) {
        int m = 1 + (int)rng.below(8);
        IntPoly q = rand_poly(rng, m, -50, 50);
        // a = sum_k q_k T^(m-k) (T^2+1)^k, the palindromic lift of q
        IntPoly a;
        for (int k = 0; k <= m; k++) {
            IntPoly term = IntPoly::from_ints({1});
            for (int i = 0; i < k; i++) term = mul(term, t2p1);
            std::vector<mpz_class> shift((size_t)(m - k), 0);
            shift.insert(shift.end(), term.c.begin(), term.c.end());
            for (auto& v : shift) v *= q.c[(size_t)k];
            a = add(a, IntPoly(std::move(shift)));
        }
        REQUIRE(a.is_palindromic());
        CHECK(reciprocal_transform(a) == q);
    }
    CHECK_THROWS_AS(reciprocal_transform(IntPoly::from_ints({2, 1})), std::exception);
    CHECK_FALSE(IntPoly::from_ints({1, 2, 3}).is_palindromic());
    CHECK(IntPoly::from_ints({3, 2, 3}).is_palindromic());
}

TEST_CASE("polynomial text format round trips byte for byte") {
    Rng rng(99);
    for (int t = 0; t < 10; t++) {
        IntPoly p = rand_poly(rng, 1 + (int)rng.below(10), -1000000, 1000000);
        std::string text = poly_to_text(p);
        CHECK(poly_from_text(text) == p);
        CHECK(poly_to_text(poly_from_text(text)) == text);
    }
    IntPoly big(std::vector<mpz_class>{mpz_class("-123456789012345678901234567890"), 1});
    CHECK(poly_from_text(poly_to_text(big)) == big);
}

TEST_CASE("small prime field matches naive arithmetic") {
    Rng rng(1);
    for (u64 p : {2ull, 3ull, 5ull, 101ull, 65537ull, 2147483629ull}) {
        SmallFp f(p);
        CHECK(f.unit() == 1 % p);
        for (int t = 0; t < 200; t++) {
            u64 a = rng.below(p), b = rng.below(p);
            CHECK(f.add(a, b) == (a + b) % p);
            CHECK(f.sub(a, b) == (a + p - b) % p);
            CHECK(f.mul(a, b) == naive_mulmod(a, b, p));
            CHECK(f.neg(a) == (p - a) % p);
            if (a) {
                CHECK(f.mul(a, f.inv(a)) == 1 % p);
                CHECK(f.pow(a, p - 1) == 1 % p);  // Fermat
            }
        }
        CHECK(f.from_int(-1) == p - 1);
        CHECK(f.from_int(-(int64_t)p) == 0);
    }
    CHECK_THROWS_AS(SmallFp(1), std::invalid_argument);
    CHECK_THROWS_AS(SmallFp(u64(1) << 31), std::invalid_argument);
}

TEST_CASE("montgomery field matches naive arithmetic") {
    Rng rng(2);
    for (u64 p : {3ull, 1000003ull, 2305843009213693951ull}) {
        Mont64 f(p);
        for (int t = 0; t < 200; t++) {
            u64 a = rng.below(p), b = rng.below(p);
            u64 ma = f.to_mont(a), mb = f.to_mont(b);
            CHECK(f.from_mont(ma) == a);
            CHECK(f.from_mont(f.add(ma, mb)) == (a + b) % p);
            CHECK(f.from_mont(f.mul(ma, mb)) == naive_mulmod(a, b, p));
            if (a) CHECK(f.from_mont(f.mul(ma, f.inv(ma))) == 1);
        }
        CHECK(f.normalize(f.embed(5 % p)) == 5 % p);
        CHECK(f.from_int(-1) == f.to_mont(p - 1));
    }
    CHECK_THROWS_AS(Mont64(4), std::invalid_argument);
}

TEST_CASE("deterministic CRT prime sequence is prime and disjoint across skips") {
    auto a = crt_primes(10);
    auto b = crt_primes(4, 10);
    for (u64 p : a) CHECK(is_prime_u64(p));
    for (u64 p : b) CHECK(is_prime_u64(p));
    CHECK(a == crt_primes(10));  // stable
    for (u64 p : b)
        for (u64 q : a) CHECK(p != q);
    CHECK(a[0] > (u64(1) << 61));
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK_FALSE(is_prime_u64(u64(6700417) * 6700417));
}

TEST_CASE("charpoly mod p reproduces known characteristic polynomials") {
    IntPoly f = IntPoly::from_ints({-5, 7, -2, 3, 1});
    ZMat C = companion(f);
    for (u64 p : {2ull, 3ull, 7ull, 101ull}) {
        SmallFp fp(p);
        auto c = charpoly_mod(reduce_mod(C, fp), fp);
        REQUIRE((int)c.size() == f.degree() + 1);
        for (int k = 0; k <= f.degree(); k++)
            CHECK(c[(size_t)k] == fp.from_int(f.c[(size_t)k].get_si()));
    }
    // identity: (T-1)^n
    SmallFp fp(13);
    FpMat id(4);
    for (int i = 0; i < 4; i++) id.at(i, i) = 1;
    auto c = charpoly_mod(id, fp);
    CHECK(c == std::vector<u64>{1, 13 - 4, 6, 13 - 4, 1});
}

TEST_CASE("exact charpoly equals the trace recursion oracle on random matrices") {
    Rng rng(0x20250819);
    for (int t = 0; t < 50; t++) {
        ZMat A = rand_mat(rng, 20, -100, 100);
        IntPoly want = charpoly_resolvent(A);
        IntPoly got = charpoly_exact(A);
        CHECK(got == want);
        if (t % 10 == 0) {
            // the stabilized schedule must agree and stay control-checked
            CHECK(charpoly_exact(A, make_crt_plan(A), true) == want);
        }
    }
}

TEST_CASE("charpoly coefficient bound dominates the real coefficients") {
    Rng rng(5);
    for (int t = 0; t < 10; t++) {
        ZMat A = rand_mat(rng, 8, -60, 60);
        mpz_class bound = charpoly_coeff_bound(A);
        for (const auto& v : charpoly_exact(A).c) CHECK(abs(v) <= bound);
    }
}

TEST_CASE("exact charpoly reductions commute with matrix reduction") {
    Rng rng(6);
    ZMat A = rand_mat(rng, 12, -30, 30);
    IntPoly c = charpoly_exact(A);
    for (u64 p : {2ull, 3ull, 5ull, 101ull}) {
        SmallFp fp(p);
        auto cm = charpoly_mod(reduce_mod(A, fp), fp);
        for (int k = 0; k <= c.degree(); k++)
            CHECK(cm[(size_t)k] == mpz_fdiv_ui(c.c[(size_t)k].get_mpz_t(), p));
    }
    Mont64 fm(1000003);
    auto cm = charpoly_mod(reduce_mod(A, fm), fm);
    for (int k = 0; k <= c.degree(); k++)
        CHECK(cm[(size_t)k] == mpz_fdiv_ui(c.c[(size_t)k].get_mpz_t(), fm.p));
}

TEST_CASE("factor degree patterns of known polynomials") {
    IntPoly f = IntPoly::from_ints({1, 0, 1});  // T^2 + 1
    PatternResult r5 = factor_degree_pattern(f, 5);
    CHECK(r5.squarefree);
    CHECK(r5.degrees == DegreePattern{{1, 2}});
    PatternResult r3 = factor_degree_pattern(f, 3);
    CHECK(r3.squarefree);
    CHECK(r3.degrees == DegreePattern{{2, 1}});
    PatternResult r2 = factor_degree_pattern(f, 2);  // (T+1)^2
    CHECK_FALSE(r2.squarefree);
    CHECK(r2.degrees == DegreePattern{{1, 1}});  // radical pattern

    // leading coefficient must survive the reduction
    IntPoly g(std::vector<mpz_class>{1, 7});
    CHECK_THROWS_AS(factor_degree_pattern(g, 7), std::exception);

    CHECK(pattern_to_string(DegreePattern{{4, 2}, {8, 29}}) == "4^2 8^29");
}

TEST_CASE("pattern signature is the permutation parity of Frobenius") {
    CHECK(pattern_signature(DegreePattern{{1, 2}}) == 1);
    CHECK(pattern_signature(DegreePattern{{2, 1}}) == -1);
    CHECK(pattern_signature(DegreePattern{{15, 16}}) == 1);
    CHECK(pattern_signature(DegreePattern{{4, 2}, {8, 29}}) == -1);
    CHECK(pattern_signature(DegreePattern{{3, 5}}) == 1);
}

TEST_CASE("full factorization mod p reassembles the input") {
    SmallFp fp(7);
    // (T-1)^3 (T-2) (T^2+1): repeated, linear and irreducible-quadratic parts
    IntPoly f = IntPoly::from_ints({1});
    IntPoly tm1 = IntPoly::from_ints({-1, 1});
    for (int i = 0; i < 3; i++) f = mul(f, tm1);
    f = mul(f, IntPoly::from_ints({-2, 1}));
    f = mul(f, IntPoly::from_ints({1, 0, 1}));
    auto factors = factor_mod_p(f, 7, 123);
    int total = 0;
    std::vector<u64> prod{1};
    for (const auto& [g, e] : factors) {
        total += ((int)g.size() - 1) * e;
        for (int i = 0; i < e; i++) {
            std::vector<u64> next(prod.size() + g.size() - 1, 0);
            for (size_t a = 0; a < prod.size(); a++)
                for (size_t b = 0; b < g.size(); b++)
                    next[a + b] = fp.add(next[a + b], fp.mul(prod[a], g[b]));
            prod = std::move(next);
        }
    }
    CHECK(total == f.degree());
    for (int k = 0; k <= f.degree(); k++)
        CHECK(prod[(size_t)k] == fp.from_int(f.c[(size_t)k].get_si()));
    // (T-1) appears cubed, (T-2) once, T^2+1 irreducible over F_7
    bool saw_cube = false, saw_quad = false;
    for (const auto& [g, e] : factors) {
        if (e == 3) saw_cube = true;
        if ((int)g.size() - 1 == 2) { saw_quad = true; CHECK(e == 1); }
    }
    CHECK(saw_cube);
    CHECK(saw_quad);
}

TEST_CASE("degree sieve keeps only subset sums common to all patterns") {
    std::vector<DegreePattern> pats{{{4, 2}, {8, 29}}, {{15, 16}}};
    CHECK(factor_degree_sieve(pats) == std::set<int>{0, 60, 120, 180, 240});
    pats.push_back({{1, 2}, {7, 34}});
    CHECK(factor_degree_sieve(pats) == std::set<int>{0, 120, 240});
    pats.push_back({{1, 2}, {2, 2}, {18, 13}});
    CHECK(factor_degree_sieve(pats) == std::set<int>{0, 240});
    CHECK(factor_degree_sieve({{{1, 1}, {3, 1}}}) == std::set<int>{0, 1, 3, 4});
}

TEST_CASE("exact discriminant on known families") {
    CHECK(discriminant_exact(IntPoly::from_ints({1, -3, 1})) == 5);
    CHECK(discriminant_exact(IntPoly::from_ints({1, 0, 1})) == -4);
    CHECK(discriminant_exact(IntPoly::from_ints({1, -2, 0, 1})) == 5);  // T^3 - 2T + 1
    CHECK(discriminant_exact(IntPoly::from_ints({1, -2, 1})) == 0);     // (T-1)^2

    // product of distinct linear factors: disc = prod (r_i - r_j)^2
    IntPoly f = IntPoly::from_ints({1});
    for (long r = 1; r <= 6; r++) f = mul(f, IntPoly(std::vector<mpz_class>{-r, 1}));
    mpz_class want = 1;
    for (long i = 1; i <= 6; i++)
        for (long j = i + 1; j <= 6; j++) want *= mpz_class(j - i) * (j - i);
    CHECK(discriminant_exact(f) == want);

    Mont64 fm(97);
    CHECK(resultant_mod(IntPoly::from_ints({1, 0, 1}), IntPoly::from_ints({1, 1}), fm) == 2);
}

TEST_CASE("annihilation check accepts the minimal polynomial and rejects others") {
    Rng rng(11);
    IntPoly P = rand_poly(rng, 5, -9, 9);
    IntPoly tm1 = IntPoly::from_ints({-1, 1});
    ZMat good = companion(mul(tm1, P));
    auto res = annihilation_check(good, P, true);
    CHECK(res.zero);
    CHECK(res.rigorous);
    CHECK(res.primes_used > 0);
    auto fast = annihilation_check(good, P, false);
    CHECK(fast.zero);
    CHECK_FALSE(fast.rigorous);

    ZMat bad = companion(mul(IntPoly::from_ints({-2, 1}), P));
    CHECK_FALSE(annihilation_check(bad, P, true).zero);
    CHECK_FALSE(annihilation_check(bad, P, false).zero);
}
