#include "e8/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "e8/util.hpp"

namespace e8 {

namespace {

// the eight simple roots in doubled coordinates, Dynkin numbering
const std::array<RootVector, 8> kSimple = {{
    {1, -1, -1, -1, -1, -1, -1, 1},   // (x1 - x2 - ... - x7 + x8) / 2
    {2, 2, 0, 0, 0, 0, 0, 0},         // x1 + x2
    {-2, 2, 0, 0, 0, 0, 0, 0},        // x2 - x1
    {0, -2, 2, 0, 0, 0, 0, 0},        // x3 - x2
    {0, 0, -2, 2, 0, 0, 0, 0},        // x4 - x3
    {0, 0, 0, -2, 2, 0, 0, 0},        // x5 - x4
    {0, 0, 0, 0, -2, 2, 0, 0},        // x6 - x5
    {0, 0, 0, 0, 0, -2, 2, 0},        // x7 - x6
}};

int64_t det_int(const std::vector<std::vector<int64_t>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    int64_t d = 0;
    for (size_t j = 0; j < n; j++) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<int64_t>> sub(n - 1, std::vector<int64_t>(n - 1));
        for (size_t r = 1; r < n; r++) {
            size_t cc = 0;
            for (size_t c = 0; c < n; c++)
                if (c != j) sub[r - 1][cc++] = m[r][c];
        }
        int64_t term = m[0][j] * det_int(sub);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

// inverse of an 8x8 integer matrix with determinant +-1, via the adjugate
std::array<std::array<int64_t, 8>, 8> inverse_unimodular(const std::array<std::array<int, 8>, 8>& a) {
    std::vector<std::vector<int64_t>> m(8, std::vector<int64_t>(8));
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) m[i][j] = a[i][j];
    int64_t d = det_int(m);
    if (d != 1 && d != -1) throw std::logic_error("inverse_unimodular: determinant not a unit");
    std::array<std::array<int64_t, 8>, 8> inv{};
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 8; j++) {
            std::vector<std::vector<int64_t>> sub(7, std::vector<int64_t>(7));
            size_t rr = 0;
            for (int r = 0; r < 8; r++) {
                if (r == i) continue;
                size_t cc = 0;
                for (int c = 0; c < 8; c++)
                    if (c != j) sub[rr][cc++] = m[r][c];
                rr++;
            }
            int64_t cof = det_int(sub);
            if ((i + j) % 2) cof = -cof;
            inv[j][i] = d * cof;  // adjugate transposes the cofactor grid
        }
    }
    return inv;
}

}  // namespace

int RootSystem::pairing(const RootVector& u, const RootVector& v) {
    int dot = 0;
    for (int i = 0; i < 8; i++) dot += u[i] * v[i];
    if (dot % 4 != 0) throw std::logic_error("pairing: doubled coordinates misaligned");
    return dot / 4;
}

RootSystem RootSystem::build() {
    // enumerate the 240 roots: +-2e_i +-2e_j for i < j, and all +-1 vectors
    // with an even number of negative entries
    std::vector<RootVector> all;
    all.reserve(240);
    for (int i = 0; i < 8; i++) {
        for (int j = i + 1; j < 8; j++) {
            for (int si : {2, -2}) {
                for (int sj : {2, -2}) {
                    RootVector v{};
                    v[i] = si;
                    v[j] = sj;
                    all.push_back(v);
                }
            }
        }
    }
    for (int mask = 0; mask < 256; mask++) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        RootVector v;
        for (int i = 0; i < 8; i++) v[i] = (mask >> i) & 1 ? -1 : 1;
        all.push_back(v);
    }
    if (all.size() != 240) throw std::logic_error("root enumeration size");

    // Cartan matrix and its (integral) inverse give each root's expansion
    // over the simple roots: C * m = vector of pairings with the simple roots
    std::array<std::array<int, 8>, 8> cart;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) cart[i][j] = pairing(kSimple[i], kSimple[j]);
    auto cinv = inverse_unimodular(cart);

    struct Entry {
        RootVector v;
        std::array<int, 8> m;
        int height;
    };
    std::vector<Entry> pos;
    for (const auto& v : all) {
        std::array<int, 8> m{};
        int h = 0;
        for (int i = 0; i < 8; i++) {
            int64_t acc = 0;
            for (int j = 0; j < 8; j++) acc += cinv[i][j] * pairing(v, kSimple[j]);
            m[i] = (int)acc;
            h += m[i];
        }
        // check the expansion reproduces the root and has entries of one sign
        RootVector rec{};
        bool nonneg = true, nonpos = true;
        for (int i = 0; i < 8; i++) {
            for (int k = 0; k < 8; k++) rec[k] += m[i] * kSimple[i][k];
            if (m[i] < 0) nonneg = false;
            if (m[i] > 0) nonpos = false;
        }
        if (rec != v) throw std::logic_error("root expansion failed");
        if (!nonneg && !nonpos) throw std::logic_error("root expansion mixes signs");
        if (h > 0) pos.push_back({v, m, h});
    }
    if (pos.size() != 120) throw std::logic_error("positive root count");

    std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.m > b.m;  // lexicographically larger coefficient vector first
    });

    RootSystem rs;
    rs.roots.resize(240);
    rs.coeffs.resize(240);
    rs.heights.resize(240);
    for (int i = 0; i < 120; i++) {
        rs.roots[i] = pos[i].v;
        rs.coeffs[i] = pos[i].m;
        rs.heights[i] = pos[i].height;
        RootVector nv;
        std::array<int, 8> nm;
        for (int k = 0; k < 8; k++) nv[k] = -pos[i].v[k];
        for (int k = 0; k < 8; k++) nm[k] = -pos[i].m[k];
        rs.roots[120 + i] = nv;
        rs.coeffs[120 + i] = nm;
        rs.heights[120 + i] = -pos[i].height;
    }
    for (int i = 0; i < 8; i++)
        if (rs.roots[i] != kSimple[i]) throw std::logic_error("simple roots not leading the order");

    std::map<RootVector, int> lookup;
    for (int i = 0; i < 240; i++) lookup[rs.roots[i]] = i;
    rs.sum_index.assign(240, {});
    for (int i = 0; i < 240; i++) {
        for (int j = 0; j < 240; j++) {
            RootVector s;
            for (int k = 0; k < 8; k++) s[k] = rs.roots[i][k] + rs.roots[j][k];
            auto it = lookup.find(s);
            rs.sum_index[i][j] = it == lookup.end() ? int16_t(-1) : int16_t(it->second);
        }
    }
    return rs;
}

int RootSystem::index_of(const RootVector& v) const {
    for (int i = 0; i < 240; i++)
        if (roots[i] == v) return i;
    return -1;
}

int RootSystem::reflect(int i, int j) const {
    int c = pairing_idx(j, i);  // <root_j, root_i^vee> since all roots have norm 2
    RootVector v = roots[j];
    for (int k = 0; k < 8; k++) v[k] -= c * roots[i][k];
    int idx = index_of(v);
    if (idx < 0) throw std::logic_error("reflect: image is not a root");
    return idx;
}

std::array<std::array<int, 8>, 8> RootSystem::cartan() const {
    std::array<std::array<int, 8>, 8> c;
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) c[i][j] = pairing(roots[i], roots[j]);
    return c;
}

std::string RootSystem::ordering_hash() const {
    std::ostringstream os;
    os << "roots-v1";
    for (const auto& r : roots) {
        os << ";";
        for (int k = 0; k < 8; k++) os << r[k] << (k < 7 ? "," : "");
    }
    return sha256_hex(os.str());
}

}  // namespace e8
