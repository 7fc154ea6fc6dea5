#include "e8/perm.hpp"

#include <numeric>
#include <sstream>

namespace e8 {

Perm Perm::identity() {
    Perm p;
    for (int i = 0; i < 240; i++) p.img[i] = (uint8_t)i;
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    for (int i = 0; i < 240; i++) r.img[i] = img[o.img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    for (int i = 0; i < 240; i++) r.img[img[i]] = (uint8_t)i;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < 240; i++)
        if (img[i] != i) return false;
    return true;
}

int Perm::first_moved() const {
    for (int i = 0; i < 240; i++)
        if (img[i] != i) return i;
    return -1;
}

CycleType cycle_type(const Perm& p) {
    CycleType t;
    bool seen[240] = {false};
    for (int i = 0; i < 240; i++) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = true;
            j = p.img[j];
            len++;
        } while (j != i);
        t[len]++;
    }
    return t;
}

int perm_order(const Perm& p) {
    long ord = 1;
    for (auto [len, cnt] : cycle_type(p)) ord = std::lcm(ord, (long)len);
    return (int)ord;
}

int signature(const Perm& p) {
    int cycles = 0;
    for (auto [len, cnt] : cycle_type(p)) cycles += cnt;
    return (240 - cycles) % 2 == 0 ? 1 : -1;
}

std::string cycle_type_to_string(const CycleType& t) {
    std::ostringstream os;
    bool first = true;
    for (auto [len, cnt] : t) {
        if (!first) os << " ";
        os << len << "^" << cnt;
        first = false;
    }
    return os.str();
}

}  // namespace e8
