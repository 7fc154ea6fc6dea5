#include "e8/chevalley.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "e8/rng.hpp"
#include "e8/util.hpp"

namespace e8 {

namespace {

// Dynkin edges (0-based, i < j); nodes i, j are joined iff (alpha_i, alpha_j) = -1
constexpr std::pair<int, int> kEdges[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};

void check_complete(const RootSystem& rs, const std::vector<std::array<int8_t, 240>>& n) {
    for (int i = 0; i < 240; i++) {
        for (int j = 0; j < 240; j++) {
            bool is_root_sum = rs.sum_index[i][j] >= 0;
            if (is_root_sum != (n[i][j] != 0))
                throw std::logic_error("structure constants: support mismatch");
            if (n[i][j] != 0 && n[i][j] != -n[j][i])
                throw std::logic_error("structure constants: antisymmetry violated");
        }
    }
}

}  // namespace

Chevalley Chevalley::build(const RootSystem& rs, const std::vector<int>& signs) {
    Chevalley ch;
    ch.rs = &rs;
    ch.n.assign(240, {});

    // Pass 1: positive pairs, by increasing canonical index of the sum root.
    // For each positive non-simple root g the extraspecial pair is the special
    // pair (a, b), a < b, a + b = g with the smallest possible a; its sign is
    // free (an input).  Every other special pair (xi, eta) of g is then forced
    // by the Jacobi identity applied to (e_xi, e_eta, e_{-a}):
    //
    //   n(xi,eta) = -n(a,b) * [ n(a,d)n(d,xi) + n(e,a)n(e,eta) ]
    //
    // where e = xi - a and d = eta - a, a term being present only when the
    // difference is a root.  Exactly one of the two is: (a,xi) + (a,eta) =
    // (a,g) = 1 and for distinct norm-2 roots x, y the difference x - y is a
    // root iff (x,y) = 1.  Every constant referenced has a sum of strictly
    // smaller height, so the recursion is well founded.
    for (int g = 8; g < 120; g++) {
        int a_es = -1, b_es = -1;
        std::vector<std::pair<int, int>> special;
        for (int a = 0; a < 120; a++) {
            int b = rs.sum_index[g][rs.negate(a)];  // index of g - a, if a root
            if (b < 0 || b >= 120 || a >= b) continue;
            special.emplace_back(a, b);
            if (a_es < 0) { a_es = a; b_es = b; }
        }
        if (a_es < 0) throw std::logic_error("positive non-simple root with no special pair");
        size_t k = ch.extraspecial.size();
        if (k >= signs.size() || (signs[k] != 1 && signs[k] != -1))
            throw std::invalid_argument("extraspecial sign vector too short or not +-1");
        ch.extraspecial.emplace_back(a_es, b_es);
        ch.n[a_es][b_es] = (int8_t)signs[k];
        ch.n[b_es][a_es] = (int8_t)-signs[k];

        for (auto [xi, eta] : special) {
            if (xi == a_es) continue;
            int e = rs.sum_index[xi][rs.negate(a_es)];
            int d = rs.sum_index[eta][rs.negate(a_es)];
            int val = 0;
            if (d >= 0) {
                if (d >= 120) throw std::logic_error("special-pair difference not positive");
                val += ch.n[a_es][d] * ch.n[d][xi];
            }
            if (e >= 0) {
                if (e >= 120) throw std::logic_error("special-pair difference not positive");
                val += ch.n[e][a_es] * ch.n[e][eta];
            }
            if (val != 1 && val != -1)
                throw std::logic_error("structure constant recursion inconsistency");
            int s = -(int)ch.n[a_es][b_es] * val;
            ch.n[xi][eta] = (int8_t)s;
            ch.n[eta][xi] = (int8_t)-s;
        }
    }
    if (ch.extraspecial.size() != 112)
        throw std::logic_error("expected 112 extraspecial pairs");

    // Pass 2: the remaining pairs follow from n(-u,-v) = -n(u,v) and the
    // rotation rule n(u,v) = n(v,w) = n(w,u) for u + v + w = 0.  For any pair
    // with a root sum, exactly one rotation of (u,v,w) or (-u,-v,-w) has its
    // first two members positive.
    for (int i = 0; i < 240; i++) {
        for (int j = 0; j < 240; j++) {
            if (rs.sum_index[i][j] < 0) continue;
            if (i < 120 && j < 120) continue;
            int w = rs.negate(rs.sum_index[i][j]);
            int tri[3] = {i, j, w};
            int found = 0, value = 0;
            for (int rot = 0; rot < 3; rot++) {
                int x = tri[rot], y = tri[(rot + 1) % 3];
                if (x < 120 && y < 120) { value = ch.n[x][y]; found++; }
                int nx = rs.negate(x), ny = rs.negate(y);
                if (nx < 120 && ny < 120) { value = -ch.n[nx][ny]; found++; }
            }
            if (found != 1) throw std::logic_error("rotation rule ambiguity");
            ch.n[i][j] = (int8_t)value;
        }
    }
    check_complete(rs, ch.n);

    std::ostringstream os;
    os << "extraspecial-recursion-v1";
    for (int s : signs) os << (s > 0 ? "+" : "-");
    ch.signs_hash = sha256_hex(os.str());

    ch.jacobi_spot_check(0x5eedc0de, 1000);
    return ch;
}

Chevalley Chevalley::build_default(const RootSystem& rs) {
    return build(rs, std::vector<int>(112, 1));
}

Chevalley Chevalley::build_from_sign_form(const RootSystem& rs) {
    Chevalley ch;
    ch.rs = &rs;
    ch.n.assign(240, {});

    // Bimultiplicative form on the root lattice: for coefficient vectors a, b
    //   beta(a, b) = sum_i a_i b_i + sum_{edges (i,j), i<j} a_i b_j   (mod 2)
    // It satisfies beta(a,a) = (a,a)/2 and beta(a,b) + beta(b,a) = (a,b)
    // mod 2, which is what makes (-1)^beta a valid set of signs.  The basis
    // rescaling e_v -> -e_v on negative roots restores the normalization
    // [e_a, e_{-a}] = h_a used by the rest of the library.
    auto beta = [&](const std::array<int, 8>& a, const std::array<int, 8>& b) {
        int s = 0;
        for (int i = 0; i < 8; i++) s += a[i] * b[i];
        for (auto [i, j] : kEdges) s += a[i] * b[j];
        return s & 1;
    };
    for (int i = 0; i < 240; i++) {
        for (int j = 0; j < 240; j++) {
            int s = rs.sum_index[i][j];
            if (s < 0) continue;
            int v = beta(rs.coeffs[i], rs.coeffs[j]) ? -1 : 1;
            if (i >= 120) v = -v;
            if (j >= 120) v = -v;
            if (s >= 120) v = -v;
            ch.n[i][j] = (int8_t)v;
        }
    }
    check_complete(rs, ch.n);
    ch.signs_hash = sha256_hex("sign-form-v1");
    ch.jacobi_spot_check(0x5eedc0de, 1000);
    return ch;
}

Chevalley::Sparse Chevalley::basis_bracket(int si, int sj) const {
    Sparse out;
    if (si < 8 && sj < 8) return out;
    if (si < 8 || sj < 8) {
        int hi = si < 8 ? si : sj;
        int r = si < 8 ? sj - 8 : si - 8;
        int c = RootSystem::pairing(rs->roots[r], rs->roots[hi]);
        if (c != 0) out.emplace_back(8 + r, si < 8 ? c : -c);
        return out;
    }
    int a = si - 8, b = sj - 8;
    if (b == rs->negate(a)) {
        for (int i = 0; i < 8; i++)
            if (rs->coeffs[a][i] != 0) out.emplace_back(i, rs->coeffs[a][i]);
        return out;
    }
    int s = rs->sum_index[a][b];
    if (s >= 0) out.emplace_back(8 + s, n[a][b]);
    return out;
}

std::vector<int64_t> Chevalley::bracket(const std::vector<int64_t>& x,
                                        const std::vector<int64_t>& y) const {
    if (x.size() != 248 || y.size() != 248)
        throw std::invalid_argument("bracket: need 248-dimensional vectors");
    std::vector<int64_t> out(248, 0);
    for (int i = 0; i < 248; i++) {
        if (x[i] == 0) continue;
        for (int j = 0; j < 248; j++) {
            if (y[j] == 0) continue;
            for (auto [slot, v] : basis_bracket(i, j)) out[slot] += x[i] * y[j] * v;
        }
    }
    return out;
}

std::vector<std::tuple<int, int, int>> Chevalley::ad_root_triplets(int r) const {
    std::vector<std::tuple<int, int, int>> t;
    for (int i = 0; i < 8; i++) {
        int c = RootSystem::pairing(rs->roots[r], rs->roots[i]);
        if (c != 0) t.emplace_back(8 + r, i, -c);  // [e_r, h_i] = -(r, alpha_i) e_r
    }
    for (int b = 0; b < 240; b++) {
        if (b == rs->negate(r)) {
            for (int i = 0; i < 8; i++)
                if (rs->coeffs[r][i] != 0) t.emplace_back(i, 8 + b, rs->coeffs[r][i]);
        } else if (int s = rs->sum_index[r][b]; s >= 0) {
            t.emplace_back(8 + s, 8 + b, n[r][b]);
        }
    }
    std::sort(t.begin(), t.end());
    return t;
}

void Chevalley::jacobi_spot_check(uint64_t seed, int count) const {
    Rng rng(seed);
    for (int iter = 0; iter < count; iter++) {
        int si = (int)rng.below(248), sj = (int)rng.below(248), sk = (int)rng.below(248);
        int64_t acc[248] = {0};
        int idx[3] = {si, sj, sk};
        for (int rot = 0; rot < 3; rot++) {
            int u = idx[rot], v = idx[(rot + 1) % 3], w = idx[(rot + 2) % 3];
            for (auto [slot, val] : basis_bracket(u, v))
                for (auto [slot2, val2] : basis_bracket(slot, w)) acc[slot2] += val * val2;
        }
        for (int s = 0; s < 248; s++)
            if (acc[s] != 0) throw std::logic_error("Jacobi identity failed in spot check");
    }
}

bool Chevalley::save_cache(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << "e8-constants v1\n";
    f << "ordering " << rs->ordering_hash() << "\n";
    f << "signs " << signs_hash << "\n";
    f << "extraspecial " << extraspecial.size() << "\n";
    for (auto [a, b] : extraspecial) f << a << " " << b << "\n";
    size_t nnz = 0;
    for (int i = 0; i < 240; i++)
        for (int j = 0; j < 240; j++)
            if (n[i][j]) nnz++;
    f << "table " << nnz << "\n";
    for (int i = 0; i < 240; i++)
        for (int j = 0; j < 240; j++)
            if (n[i][j]) f << i << " " << j << " " << (int)n[i][j] << "\n";
    return (bool)f;
}

bool Chevalley::load_cache(const std::string& path, const RootSystem& rs,
                           const std::string& expected_signs_hash, Chevalley& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::string line, word, hash;
    if (!std::getline(f, line) || line != "e8-constants v1") return false;
    if (!(f >> word >> hash) || word != "ordering" || hash != rs.ordering_hash()) return false;
    if (!(f >> word >> hash) || word != "signs" || hash != expected_signs_hash) return false;
    size_t cnt = 0;
    if (!(f >> word >> cnt) || word != "extraspecial") return false;
    out = Chevalley();
    out.rs = &rs;
    out.signs_hash = hash;
    out.n.assign(240, {});
    out.extraspecial.resize(cnt);
    for (auto& [a, b] : out.extraspecial)
        if (!(f >> a >> b)) return false;
    size_t nnz = 0;
    if (!(f >> word >> nnz) || word != "table") return false;
    for (size_t k = 0; k < nnz; k++) {
        int i, j, v;
        if (!(f >> i >> j >> v)) return false;
        if (i < 0 || i >= 240 || j < 0 || j >= 240 || (v != 1 && v != -1)) return false;
        out.n[i][j] = (int8_t)v;
    }
    try {
        check_complete(rs, out.n);
        out.jacobi_spot_check(0x5eedc0de, 100);
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

}  // namespace e8
