#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "e8/chevalley.hpp"
#include "e8/zmat.hpp"

namespace e8 {

// One unipotent generator x_r(u): r indexes a root in canonical order, u is
// an exact integer parameter.
struct Letter {
    int root = 0;
    mpz_class u = 1;

    bool operator==(const Letter& o) const { return root == o.root && u == o.u; }
};
using Word = std::vector<Letter>;

// x_{a_1}(1) ... x_{a_8}(1) x_{-a_1}(1) ... x_{-a_8}(1): a product over the
// simple roots and then their negatives, all with parameter 1.  This is the
// bundled default element whose adjoint matrix drives the whole pipeline.
Word default_word();

// Adjoint matrix of x_r(u) on the 248-slot basis.  Since ad(e_r)^3 = 0 and
// ad(e_r)^2 has the single entry -2 in (slot e_r, slot e_{-r}), the
// exponential truncates to I + u ad(e_r) + u^2/2 ad(e_r)^2 with integral
// entries for every integer u.
SparseZ ad_unipotent(const Chevalley& ch, int root, const mpz_class& u);

// Dense product of the word's generator matrices, exact over Z.
ZMat word_product(const Chevalley& ch, const Word& w);

// Same product with every generator reduced mod f.p first (entries in field
// form).  Equals the reduction of word_product by compatibility of ring maps.
template <class F>
FpMat word_product_mod(const Chevalley& ch, const Word& w, const F& f) {
    FpMat m(248);
    for (int i = 0; i < 248; i++) m.at(i, i) = f.unit();
    for (const auto& let : w) {
        SparseZ s = ad_unipotent(ch, let.root, let.u);
        FpMat c(248);
        for (const auto& [j, k, v] : s.t) {
            u64 fv = f.embed(mpz_fdiv_ui(v.get_mpz_t(), f.p));
            if (fv == 0) continue;
            for (int i = 0; i < 248; i++) {
                u64 x = m.at(i, j);
                if (x) c.at(i, k) = f.add(c.at(i, k), f.mul(x, fv));
            }
        }
        m = std::move(c);
    }
    return m;
}

// Text format: one letter per line, "<token> <u>", where token is a signed
// simple-root index in 1..8 (negative for the opposite root) or r<idx> with a
// canonical root index in 0..239.  Blank lines and #-comments are skipped.
Word parse_word(const std::string& text);
std::string word_to_text(const Word& w);
Word read_word_file(const std::string& path);

}  // namespace e8
