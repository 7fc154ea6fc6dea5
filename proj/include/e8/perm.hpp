#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace e8 {

// Permutation of the 240 canonical root indices.
struct Perm {
    std::array<uint8_t, 240> img;

    static Perm identity();
    // composition: (a * b)(x) = a(b(x)), i.e. apply b first
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    int operator[](int x) const { return img[x]; }
    bool operator==(const Perm& o) const { return img == o.img; }
    // smallest moved point, or -1 for the identity
    int first_moved() const;
};

// cycle length -> number of cycles (fixed points included as length 1)
using CycleType = std::map<int, int>;

CycleType cycle_type(const Perm& p);
int perm_order(const Perm& p);
// sign character: (-1)^(240 - number of cycles)
int signature(const Perm& p);
std::string cycle_type_to_string(const CycleType& t);

}  // namespace e8
