#include "e8/sieve.hpp"

#include <stdexcept>
#include <vector>

namespace e8 {

std::set<int> factor_degree_sieve(const std::vector<DegreePattern>& patterns) {
    if (patterns.empty()) throw std::invalid_argument("factor_degree_sieve: no patterns");
    long total = -1;
    std::vector<bool> feasible;
    for (const auto& pat : patterns) {
        long n = 0;
        for (auto [d, c] : pat) n += (long)d * c;
        if (total < 0) {
            total = n;
            feasible.assign(total + 1, true);
        } else if (n != total) {
            throw std::invalid_argument("factor_degree_sieve: patterns of different total degree");
        }
        // bounded-knapsack subset sums for this pattern
        std::vector<bool> reach(total + 1, false);
        reach[0] = true;
        for (auto [d, c] : pat)
            for (int rep = 0; rep < c; rep++)
                for (int s = (int)total; s >= d; s--)
                    if (reach[s - d]) reach[s] = true;
        for (long s = 0; s <= total; s++)
            if (!reach[s]) feasible[s] = false;
    }
    std::set<int> out;
    for (long s = 0; s <= total; s++)
        if (feasible[s]) out.insert((int)s);
    return out;
}

}  // namespace e8
