// tests/oracle_baskets.hpp — brute-force re-derivation of basket enumeration, kept
// deliberately independent of src/basket.cpp (point-by-point rational accumulation here
// versus the integral-weight search there) so the two can cross-check each other.
#pragma once

#include "orbirr/basket.hpp"
#include "orbirr/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// All normalized point types (b, r) with r >= 2, r | iX, gcd(b, r) = 1, 2b <= r.
inline std::vector<orbirr::OrbifoldPoint> point_types(long iX) {
    std::vector<orbirr::OrbifoldPoint> types;
    for (long r = 2; r <= iX; ++r) {
        if (iX % r != 0) continue;
        for (long b = 1; 2 * b <= r; ++b)
            if (std::gcd(b, r) == 1) types.push_back({b, r});
    }
    return types;
}

// Every multiset over point_types(iX) whose chi contributions (r^2-1)/(24r) sum to exactly
// chi and whose index lcm is exactly iX.  Depth-first search adding one point at a time
// with non-decreasing type index; prunes as soon as the running sum overshoots, which is
// sound because every contribution is positive.
inline std::vector<orbirr::Basket> enumerate(long chi, long iX) {
    using orbirr::Rat;
    const auto types = point_types(iX);
    const Rat target(chi);
    std::vector<orbirr::Basket> out;
    std::vector<orbirr::OrbifoldPoint> chosen;
    std::function<void(std::size_t, Rat)> grow = [&](std::size_t from, Rat acc) {
        if (acc == target) {
            long l = 1;
            for (const auto& pt : chosen) l = std::lcm(l, pt.r);
            if (l == iX) out.push_back(orbirr::Basket(chosen));
            return;  // any extension overshoots
        }
        if (acc > target) return;
        for (std::size_t t = from; t < types.size(); ++t) {
            chosen.push_back(types[t]);
            grow(t, acc + Rat(types[t].r * types[t].r - 1, 24 * types[t].r));
            chosen.pop_back();
        }
    };
    grow(0, Rat(0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace oracle
