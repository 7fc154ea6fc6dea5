#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <cstdio>
#include <set>
#include <vector>

#include "e8/chevalley.hpp"
#include "e8/rng.hpp"
#include "e8/roots.hpp"
#include "e8/unipotent.hpp"
#include "e8/zmat.hpp"

using namespace e8;

namespace {

const RootSystem& root_system() {
    static RootSystem rs = RootSystem::build();
    return rs;
}

const Chevalley& constants() {
    static Chevalley ch = Chevalley::build_default(root_system());
    return ch;
}

// bracket of basis slots as a dense 248-vector
std::vector<int64_t> dense_bracket(const Chevalley& ch, int si, int sj) {
    std::vector<int64_t> v(248, 0);
    for (const auto& [slot, val] : ch.basis_bracket(si, sj)) v[(size_t)slot] += val;
    return v;
}

}  // namespace

TEST_CASE("root enumeration matches the direct coordinate description") {
    const RootSystem& rs = root_system();
    REQUIRE(rs.roots.size() == 240);

    // independent re-enumeration straight from the definition
    std::set<RootVector> direct;
    for (int i = 0; i < 8; i++)
        for (int j = i + 1; j < 8; j++)
            for (int si : {-2, 2})
                for (int sj : {-2, 2}) {
                    RootVector v{};
                    v[(size_t)i] = si;
                    v[(size_t)j] = sj;
                    direct.insert(v);
                }
    CHECK(direct.size() == 112);
    int half = 0;
    for (int mask = 0; mask < 256; mask++) {
        if (__builtin_popcount(mask) % 2) continue;  // even number of minus signs
        RootVector v;
        for (int i = 0; i < 8; i++) v[(size_t)i] = (mask >> i) & 1 ? -1 : 1;
        direct.insert(v);
        half++;
    }
    CHECK(half == 128);
    CHECK(direct.size() == 240);
    CHECK(direct == std::set<RootVector>(rs.roots.begin(), rs.roots.end()));

    for (int i = 0; i < 240; i++) {
        int s = 0;
        for (int k = 0; k < 8; k++) s += rs.roots[(size_t)i][(size_t)k] * rs.roots[(size_t)i][(size_t)k];
        CHECK(s == 8);  // doubled coordinates of a norm-2 vector
        for (int k = 0; k < 8; k++)
            CHECK(rs.roots[(size_t)(120 + i) % 240][(size_t)k] == -rs.roots[(size_t)i][(size_t)k]);
        CHECK(rs.index_of(rs.roots[(size_t)i]) == i);
    }
    CHECK(rs.index_of(RootVector{1, 1, 1, 1, 1, 1, 1, 3}) == -1);
}

TEST_CASE("simple roots realize the Dynkin diagram and generate all heights") {
    const RootSystem& rs = root_system();
    auto C = rs.cartan();
    std::set<std::pair<int, int>> edges{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) {
            if (i == j) CHECK(C[(size_t)i][(size_t)j] == 2);
            else if (edges.count({std::min(i, j), std::max(i, j)}))
                CHECK(C[(size_t)i][(size_t)j] == -1);
            else CHECK(C[(size_t)i][(size_t)j] == 0);
        }

    int max_h = 0, h1 = 0;
    for (int i = 0; i < 120; i++) {
        CHECK(rs.heights[(size_t)i] >= 1);
        CHECK(rs.heights[(size_t)(i + 120)] == -rs.heights[(size_t)i]);
        max_h = std::max(max_h, rs.heights[(size_t)i]);
        h1 += rs.heights[(size_t)i] == 1;
        if (i + 1 < 120) CHECK(rs.heights[(size_t)i] <= rs.heights[(size_t)(i + 1)]);
        // expansion over simple roots reproduces the vector
        RootVector acc{};
        for (int k = 0; k < 8; k++)
            for (int c = 0; c < 8; c++)
                acc[(size_t)c] += rs.coeffs[(size_t)i][(size_t)k] * rs.roots[(size_t)k][(size_t)c];
        CHECK(acc == rs.roots[(size_t)i]);
    }
    CHECK(max_h == 29);  // height of the highest root
    CHECK(h1 == 8);
    // sum of positive-root heights = sum_i e_i(e_i+1)/2 over the exponents
    long hsum = 0;
    for (int i = 0; i < 120; i++) hsum += rs.heights[(size_t)i];
    CHECK(hsum == 1240);

    for (int i = 0; i < 8; i++) {
        std::set<int> image;
        for (int j = 0; j < 240; j++) image.insert(rs.reflect(i, j));
        CHECK((int)image.size() == 240);  // reflections permute the root set
        CHECK(rs.reflect(i, i) == rs.negate(i));
    }
}

TEST_CASE("sum index table agrees with coordinate addition") {
    const RootSystem& rs = root_system();
    Rng rng(3);
    for (int t = 0; t < 2000; t++) {
        int i = (int)rng.below(240), j = (int)rng.below(240);
        RootVector s;
        for (int k = 0; k < 8; k++) s[(size_t)k] = rs.roots[(size_t)i][(size_t)k] + rs.roots[(size_t)j][(size_t)k];
        int direct = rs.index_of(s);
        CHECK(rs.sum_index[(size_t)i][(size_t)j] == direct);
    }
}

TEST_CASE("structure constants: support, antisymmetry and the rotation rule") {
    const RootSystem& rs = root_system();
    const Chevalley& ch = constants();
    CHECK(ch.extraspecial.size() == 112);  // one pair per positive non-simple root
    CHECK(ch.n[0][2] == 1);                // the first extraspecial pair keeps its default sign

    long nonzero = 0;
    for (int a = 0; a < 240; a++)
        for (int b = 0; b < 240; b++) {
            int8_t v = ch.n[(size_t)a][(size_t)b];
            if (rs.sum_index[(size_t)a][(size_t)b] >= 0) {
                CHECK((v == 1 || v == -1));
                nonzero++;
                CHECK(v == -ch.n[(size_t)b][(size_t)a]);
                CHECK(ch.n[(size_t)rs.negate(a)][(size_t)rs.negate(b)] == -v);
                // rotation rule for the zero-sum triple (a, b, -(a+b))
                int c = rs.negate(rs.sum_index[(size_t)a][(size_t)b]);
                CHECK(ch.n[(size_t)b][(size_t)c] == v);
                CHECK(ch.n[(size_t)c][(size_t)a] == v);
            } else {
                CHECK(v == 0);
            }
        }
    // every root has 56 neighbours at inner product 1, so 240 * 56 ordered pairs
    CHECK(nonzero == 13440);
}

TEST_CASE("both constructions satisfy Jacobi and differ only by a rescaling") {
    const RootSystem& rs = root_system();
    const Chevalley& ch = constants();
    Chevalley alt = Chevalley::build_from_sign_form(rs);
    ch.jacobi_spot_check(0xa5a5a5, 1000);
    alt.jacobi_spot_check(0xa5a5a5, 1000);
    CHECK(alt.extraspecial.empty());
    CHECK(ch.signs_hash != alt.signs_hash);

    // The two tables describe the same algebra in bases e'_r = lambda_r e_r
    // with lambda_r = lambda_{-r} in {+-1}.  Derive lambda by height
    // induction in the gauge lambda_simple = +1, then confirm the relation
    // n'(a,b) = lambda_a lambda_b lambda_{a+b} n(a,b) on the whole support.
    std::vector<int> lam(240, 0);
    for (int i = 0; i < 8; i++) lam[(size_t)i] = lam[(size_t)(120 + i)] = 1;
    for (const auto& [a, b] : ch.extraspecial) {
        int c = rs.sum_index[(size_t)a][(size_t)b];
        REQUIRE(lam[(size_t)a] != 0);
        REQUIRE(lam[(size_t)b] != 0);
        lam[(size_t)c] = lam[(size_t)rs.negate(c)] =
            lam[(size_t)a] * lam[(size_t)b] * ch.n[(size_t)a][(size_t)b] * alt.n[(size_t)a][(size_t)b];
    }
    for (int a = 0; a < 240; a++)
        for (int b = 0; b < 240; b++) {
            int c = rs.sum_index[(size_t)a][(size_t)b];
            if (c < 0) continue;
            CHECK(alt.n[(size_t)a][(size_t)b] ==
                  lam[(size_t)a] * lam[(size_t)b] * lam[(size_t)c] * ch.n[(size_t)a][(size_t)b]);
        }

    // Jacobi identity on dense brackets over random basis triples
    Rng rng(17);
    for (int t = 0; t < 200; t++) {
        int x = (int)rng.below(248), y = (int)rng.below(248), z = (int)rng.below(248);
        std::vector<int64_t> ex(248, 0), ey(248, 0), ez(248, 0);
        ex[(size_t)x] = 1; ey[(size_t)y] = 1; ez[(size_t)z] = 1;
        auto j1 = ch.bracket(ch.bracket(ex, ey), ez);
        auto j2 = ch.bracket(ch.bracket(ey, ez), ex);
        auto j3 = ch.bracket(ch.bracket(ez, ex), ey);
        for (int k = 0; k < 248; k++) CHECK(j1[(size_t)k] + j2[(size_t)k] + j3[(size_t)k] == 0);
    }
}

TEST_CASE("bracket relations of the Chevalley basis") {
    const RootSystem& rs = root_system();
    const Chevalley& ch = constants();
    Rng rng(23);

    // [h_i, h_j] = 0 and [h_i, e_b] = (b, alpha_i) e_b
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) CHECK(ch.basis_bracket(i, j).empty());
    for (int t = 0; t < 100; t++) {
        int i = (int)rng.below(8), b = (int)rng.below(240);
        auto v = dense_bracket(ch, i, 8 + b);
        for (int k = 0; k < 248; k++)
            CHECK(v[(size_t)k] == (k == 8 + b ? rs.pairing_idx(b, i) : 0));
    }

    // [[e_a, e_-a], e_b] = (a, b) e_b: the coroot acts by the pairing
    for (int t = 0; t < 100; t++) {
        int a = (int)rng.below(240), b = (int)rng.below(240);
        std::vector<int64_t> ea(248, 0), ena(248, 0), eb(248, 0);
        ea[(size_t)(8 + a)] = 1;
        ena[(size_t)(8 + rs.negate(a))] = 1;
        eb[(size_t)(8 + b)] = 1;
        auto h = ch.bracket(ea, ena);
        for (int k = 8; k < 248; k++) CHECK(h[(size_t)k] == 0);  // lands in the Cartan
        auto act = ch.bracket(h, eb);
        for (int k = 0; k < 248; k++)
            CHECK(act[(size_t)k] == (k == 8 + b ? rs.pairing_idx(a, b) : 0));
    }

    // ad(e_r)^3 = 0 on sampled roots (applied column by column through the
    // sparse triplet form)
    for (int t = 0; t < 25; t++) {
        int r = (int)rng.below(240);
        auto trip = ch.ad_root_triplets(r);
        for (int col = 0; col < 248; col++) {
            std::vector<int64_t> v(248, 0);
            v[(size_t)col] = 1;
            for (int it = 0; it < 3; it++) {
                std::vector<int64_t> w(248, 0);
                for (const auto& [row, c, val] : trip) w[(size_t)row] += val * v[(size_t)c];
                v = std::move(w);
            }
            long nz = 0;
            for (int k = 0; k < 248; k++) nz += v[(size_t)k] != 0;
            CHECK(nz == 0);
        }
    }
}

TEST_CASE("one parameter subgroups compose additively") {
    const Chevalley& ch = constants();
    Rng rng(31);
    for (int t = 0; t < 10; t++) {
        int r = (int)rng.below(240);
        mpz_class u = rng.range(-5, 5), v = rng.range(-5, 5);
        Word sum{{r, u + v}};
        Word split{{r, u}, {r, v}};
        CHECK(word_product(ch, split) == word_product(ch, sum));
    }
    // x_r(u) x_r(-u) = identity
    for (int t = 0; t < 10; t++) {
        int r = (int)rng.below(240);
        mpz_class u = rng.range(-7, 7);
        Word w{{r, u}, {r, -u}};
        CHECK(word_product(ch, w) == ZMat::identity(248));
    }
}

TEST_CASE("modular word products equal reductions of the exact product") {
    const Chevalley& ch = constants();
    Rng rng(37);
    Word w;
    for (int k = 0; k < 25; k++) {
        int r = rng.below(2) ? (int)rng.below(8) : 120 + (int)rng.below(8);
        w.push_back({r, mpz_class(rng.range(-2, 2))});
    }
    ZMat M = word_product(ch, w);
    for (u64 p : {2ull, 3ull, 101ull}) {
        SmallFp fp(p);
        FpMat direct = word_product_mod(ch, w, fp);
        FpMat reduced = reduce_mod(M, fp);
        CHECK(direct.a == reduced.a);
    }
}

TEST_CASE("word text format round trips") {
    Word w = default_word();
    REQUIRE(w.size() == 16);
    for (int i = 0; i < 8; i++) {
        CHECK(w[(size_t)i].root == i);
        CHECK(w[(size_t)i].u == 1);
        CHECK(w[(size_t)(8 + i)].root == 120 + i);
        CHECK(w[(size_t)(8 + i)].u == 1);
    }
    std::string text = word_to_text(w);
    CHECK(parse_word(text) == w);

    Word mixed = parse_word("1 3\n-4 -2\nr17 5\n# comment\n\nr239 -1\n");
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[0] == Letter{0, 3});
    CHECK(mixed[1] == Letter{123, -2});
    CHECK(mixed[2] == Letter{17, 5});
    CHECK(mixed[3] == Letter{239, -1});
    CHECK(parse_word(word_to_text(mixed)) == mixed);
    CHECK_THROWS_AS(parse_word("9 1"), std::exception);
    CHECK_THROWS_AS(parse_word("r240 1"), std::exception);
}

TEST_CASE("constants cache round trips and rejects foreign conventions") {
    const RootSystem& rs = root_system();
    const Chevalley& ch = constants();
    std::string path = "test-constants-cache.txt";
    REQUIRE(ch.save_cache(path));
    Chevalley back;
    CHECK(Chevalley::load_cache(path, rs, ch.signs_hash, back));
    CHECK(back.n == ch.n);
    CHECK(back.signs_hash == ch.signs_hash);
    Chevalley reject;
    CHECK_FALSE(Chevalley::load_cache(path, rs, "0000", reject));
    CHECK_FALSE(Chevalley::load_cache("no-such-file.txt", rs, ch.signs_hash, reject));
    std::remove(path.c_str());
}
