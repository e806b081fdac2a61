// include/orbirr/reid.hpp — Reid's orbifold Riemann-Roch on terminal threefolds with K ≡ 0:
// local contributions, exact plurigenus formulas, and linear lower-bound forms in (L^3, λ).
#pragma once

#include "orbirr/basket.hpp"
#include "orbirr/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace orbirr {

// Local Reid contribution c_Q(D) of a point Q of type 1/r(1,-1,b) to chi(O_X(D)), where
// D has local index i at Q (D ~ iK_X near Q), 0 <= i < r:
//   c_Q = -i (r^2-1)/(12 r) + sum_{j=0}^{i-1} jb_bar (r - jb_bar) / (2 r),
// with x_bar the least non-negative residue mod r.  Throws std::invalid_argument if i is
// out of range.
Rat contribution(const OrbifoldPoint& pt, long i);

// The full row c_Q(0), ..., c_Q(r-1).
std::vector<Rat> contribution_row(const OrbifoldPoint& pt);

// Sum of one full row; equals -(r^2-1)/24 for every valid point (telescoping).
Rat periodic_contribution_sum(const OrbifoldPoint& pt);

// The twelve point types that occur in baskets with K ≡ 0, paired with their rows.
std::vector<std::pair<OrbifoldPoint, std::vector<Rat>>> table_a();

// How unknown local indices are bounded.  "paper" reproduces the conservative estimates of
// the case analysis (a stride divisible by r pins the contribution to 0, anything else falls
// back to the full-row minimum); "sharp" minimizes over the subgroup actually reachable.
enum class MinMode { paper, sharp };

// Minimum of c_Q(i) over all residues i.
Rat row_min(const OrbifoldPoint& pt);

// Minimum of c_Q over the reachable indices {stride * s mod r : s in Z}, i.e. over the
// subgroup generated by gcd(stride, r).  This is the sharp semantics.
Rat min_contribution(const OrbifoldPoint& pt, long stride);

// Mode-dependent lower bound for c_Q(stride * s mod r) over unknown s.
Rat min_contribution_mode(const OrbifoldPoint& pt, long stride, MinMode mode);

// min over s in [0,r) of sum_{t in shifts} c_Q((k*s + t) mod r).  Bounds the joint
// contribution of one point to several torsion twists of kL at once.
Rat shift_set_sum(const OrbifoldPoint& pt, long k, const std::vector<long>& shifts);

// Numerical data of a polarized threefold (X, L): basket of singularities, chi(O_X)
// (determined by the basket), L^3, and lambda(L) = L^3/6 + (L·c2)/12.
struct Numerics {
    Basket basket;
    Rat chi;
    Rat L3;
    Rat lambda;

    static Numerics for_basket(const Basket& basket, const Rat& L3, const Rat& lambda);
    // Throws std::invalid_argument unless the data could come from a polarized threefold:
    // chi matches the basket, i(X)·L^3 and i(X)·lambda are positive integers (both lattice
    // facts for the ample generator), and lambda >= L^3/6 (Miyaoka's bound on L·c2).
    // Deliberately not called by h0_exact / h0_lower_bound, which accept hypothetical
    // corner data.
    void validate() const;
};

// Exact h^0(X, mL + T) for K ≡ 0 via orbifold Riemann-Roch (valid once vanishing holds):
//   chi(O_X) + (m^3 - m)/6 L^3 + m lambda + sum_Q c_Q(i_Q),
// where residues lists the local indices i_Q of the full divisor mL + T, aligned with
// n.basket.expanded().  Throws on length mismatch or out-of-range residues.
Rat h0_exact(const Numerics& n, long m, const std::vector<long>& residues);

// What is known about i_Q(L) at one point: either a fixed residue s (so mL gets local index
// m*s mod r), or nothing (minimize over reachable indices per MinMode).
struct ResidueConstraint {
    bool is_fixed = false;
    long s = 0;

    static ResidueConstraint fixed(long s) { return {true, s}; }
    static ResidueConstraint any() { return {false, 0}; }
};

// Affine form a + b L^3 + c lambda with exact rational coefficients; the currency of every
// lower-bound argument here.
struct MarginForm {
    Rat constant;
    Rat L3_coeff;
    Rat lambda_coeff;

    Rat eval(const Rat& L3, const Rat& lambda) const;

    // Infimum over the feasible region {L^3 >= 1/iX, lambda >= 1/iX, lambda >= L^3/6}
    // (the first two since iX*L^3 and iX*lambda are positive integers, the last by
    // Miyaoka).  The region is a polyhedron with vertices (1/iX, 1/iX) and (6/iX, 1/iX);
    // the form is bounded below iff lambda_coeff >= 0 and L3_coeff + lambda_coeff/6 >= 0,
    // and then attains its minimum at one of the two vertices.  std::nullopt if unbounded.
    std::optional<Rat> min_over_region(long iX) const;

    friend bool operator==(const MarginForm&, const MarginForm&) = default;
};

// lambda(kL) as a form in (L^3, lambda): {0, (k^3-k)/6, k}.
MarginForm lambda_form(long k);

// h^0(mL) >= this form evaluated at (L^3, lambda), for any L with the given residue
// knowledge. constant = chi + sum of per-point contribution bounds; linear part as in
// h0_exact.  residues aligned with basket.expanded(); throws on length mismatch.
MarginForm h0_bound_form(const Rat& chi, const Basket& basket, long m,
                         const std::vector<ResidueConstraint>& residues, MinMode mode);

// h0_bound_form evaluated at concrete (L^3, lambda).
Rat h0_lower_bound(const Numerics& n, long m, const std::vector<ResidueConstraint>& residues,
                   MinMode mode);

// Averaging bound: summing h^0(kL + tK) over a full torsion orbit t = 0..i(X)-1 gives
// i(X) * lambda(kL) exactly (the local contributions telescope), so the best twist has
// h^0 >= lambda(kL) = (k^3-k)/6 L^3 + k lambda; returned exactly, ceiling left to callers.
Rat averaging_floor(const Numerics& n, long k);

}  // namespace orbirr
