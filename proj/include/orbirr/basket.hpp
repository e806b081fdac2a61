// include/orbirr/basket.hpp — Reid baskets of terminal cyclic quotient points and their
// enumeration under the numerical and classification constraints for K ≡ 0 threefolds.
#pragma once

#include "orbirr/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbirr {

// One orbifold point of type 1/r(1,-1,b), normalized so that gcd(b,r)=1 and 0 < b <= r/2.
struct OrbifoldPoint {
    long b = 0;
    long r = 0;

    friend bool operator==(const OrbifoldPoint&, const OrbifoldPoint&) = default;
    // Canonical order is by (r, b).
    friend bool operator<(const OrbifoldPoint& x, const OrbifoldPoint& y) {
        return x.r != y.r ? x.r < y.r : x.b < y.b;
    }
};

// True iff (b,r) is a valid normalized point type: r >= 2, 1 <= b <= r/2, gcd(b,r) = 1.
bool validate_point(long b, long r);

// Multiset of orbifold points, kept in canonical form: entries sorted by (r,b), multiplicities
// merged and positive. Immutable after construction.
class Basket {
public:
    Basket() = default;
    // From a flat list of points (any order, repeats allowed). Throws std::invalid_argument
    // if any point is invalid.
    explicit Basket(const std::vector<OrbifoldPoint>& points);
    // From (point, multiplicity) pairs. Throws on invalid points or multiplicities < 1.
    explicit Basket(const std::vector<std::pair<OrbifoldPoint, long>>& entries);

    // Parse the run-length text form "5x(1,2) 4x(1,3) 1x(1,6)"; bare "(b,r)" counts once;
    // "{}" is the empty basket. Throws std::invalid_argument on malformed input.
    static Basket from_text(const std::string& text);

    const std::vector<std::pair<OrbifoldPoint, long>>& entries() const { return entries_; }
    // Multiplicity-expanded point list in canonical order.
    std::vector<OrbifoldPoint> expanded() const;
    long point_count() const;
    bool empty() const { return entries_.empty(); }

    // Run-length serialization matching from_text; "{}" for the empty basket.
    std::string to_text() const;

    friend bool operator==(const Basket&, const Basket&) = default;
    // Deterministic order for sorted lists of baskets (lexicographic on canonical entries).
    friend bool operator<(const Basket& x, const Basket& y);

private:
    std::vector<std::pair<OrbifoldPoint, long>> entries_;
};

// chi(O_X) = sum over points of (r^2-1)/(24r).
Rat chi_of(const Basket& basket);

// lcm of the point indices r; 1 for the empty basket.
long cartier_index(const Basket& basket);

// All valid point types (b,r) with r >= 2 and r dividing iX, in canonical order.
std::vector<OrbifoldPoint> admissible_point_types(long iX);

// True iff (chi, iX) is an admissible pair for enumeration: chi = 0 only with iX = 1,
// chi in {1,2,3,4} with iX in {2,3,4,6}, and chi = 1 with iX in {5,8,10,12}.
bool admissible_pair(long chi, long iX);

// The chi values admissible for a given iX (used when sweeping over all baskets of an index).
std::vector<long> allowed_chis(long iX);

// All point multisets over admissible_point_types(iX) with chi_of = chi and lcm of indices
// exactly iX.  Pure numerical search; no classification input.  Sorted deterministically.
std::vector<Basket> arithmetic_baskets(long chi, long iX);

// The classified singularity data for the indices where the global and local index coincide
// (iX in {5,8,10,12}): Morrison's explicit families.  Sorted deterministically.
std::vector<Basket> classified_families(long iX);

// Baskets consistent with every constraint: the numerical search, intersected with the
// classification for iX in {5,8,10,12} (where the numerical constraints alone are slightly
// weaker; see arithmetic_baskets).  Throws std::invalid_argument on inadmissible (chi, iX).
std::vector<Basket> enumerate_baskets(long chi, long iX);

}  // namespace orbirr
