// include/orbirr/certify.hpp — certified birationality bounds for |K + mL + T| on terminal
// threefolds with K ≡ 0: rho0, pencil certificates, mu0 / zeta estimates, the threshold
// criterion, and the complete per-index case analysis with audit-trail certificates.
#pragma once

#include "orbirr/basket.hpp"
#include "orbirr/rational.hpp"
#include "orbirr/reid.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbirr {

// The least k such that h^0(mL + T') > 0 is certified for every m >= k, every numerically
// trivial T', and every basket of the given index over the chi values supplied.  Uses
// full-row contribution minima (T' makes every local index unknowable), so the value is
// mode-independent.  Throws std::invalid_argument on inadmissible input.
long rho0_bound(long iX, const std::vector<long>& chis);
// Same, over all chi admissible for iX.
long rho0_bound(long iX);

// Outcome of a non-pencil certification attempt: if h^0(mL0 + T) > i(X) L0^3 m + 1 then
// |mL0 + T| is not composed with a pencil of surfaces, so `margin` is the certified
// h^0 floor minus (i(X) m L^3 + 1) as a form in (L^3, lambda).
struct NonPencilResult {
    bool certified = false;
    MarginForm margin;
    // Minimum of the margin over the feasible region (corner variants) or its value at the
    // given numerics (concrete variant); nullopt when the form is unbounded below.
    std::optional<Rat> margin_min;
};

// Corner variant: minimizes the margin over {L^3 >= 1/iX, lambda >= 1/iX, lambda >= L^3/6}
// with iX = cartier_index(basket); certifies the system for every admissible (L^3, lambda).
NonPencilResult non_pencil_corner(const Rat& chi, const Basket& basket, long m,
                                  const std::vector<ResidueConstraint>& residues, MinMode mode);

// Concrete variant: evaluates the margin at the given numerics.
NonPencilResult non_pencil_certified(const Numerics& n, long m,
                                     const std::vector<ResidueConstraint>& residues,
                                     MinMode mode);

// Averaged variant: the h^0 floor is the torsion-averaging bound lambda(mL) instead of a
// direct Riemann-Roch estimate; certifies the best twist's system.
NonPencilResult non_pencil_averaged(long iX, long m);

// mu0 <= k/iota_k.  In the same-pencil case iota_k = h^0(kL0) - 1 (pencils are rational
// because q(X) = 0), so the bound is k/(h0_floor - 1); otherwise iota_k >= 1 gives k.
// Throws unless h0_floor >= 2.
Rat mu0_upper(long k, long h0_floor, bool same_pencil);

// zeta >= ceil(iX * min{1, 3/(mu0 + m1 + 1)}) / iX, evaluated with the mu0 upper bound
// (safe: the right side decreases in mu0).  Throws unless mu0_ub > 0.
Rat zeta_lower(long iX, const Rat& mu0_ub, long m1);

// The threshold criterion: |K + mL + T| is birational for every
//   m > max{m0 + m1 + rho0 - 1, mu0 + m1 + 2/zeta}.
struct BirationalityBound {
    Rat rho_threshold;
    Rat epsilon_threshold;
    long final_m = 0;  // least integer strictly above both thresholds
};
BirationalityBound birational_criterion(long m0, long m1, const Rat& mu0_ub, long rho0,
                                        const Rat& zeta_lb);
// Just the final integer.
long birational_from(long m0, long m1, const Rat& mu0_ub, long rho0, const Rat& zeta_lb);

// One branch of a case analysis: a set of pencil hypotheses together with the certified
// data valid under them.  All rationals are exact; floors are worst-case over the family.
struct Scenario {
    std::string label;
    long chi_lo = 0;
    long chi_hi = 0;
    long m0 = 0;
    long m1 = 0;
    std::vector<std::string> pencil_hypotheses;
    Rat mu0_upper;
    std::map<long, long> iota_floor;  // multiple k -> certified lower bound on iota_k
    std::map<long, long> h0_floors;   // multiple k -> certified floor for h^0(kL0 (+tK))
    Rat zeta_lb;
    Rat rho_threshold;
    Rat epsilon_threshold;
    long final_m = 0;
};

// Audit trail for one index: the basket family covered, rho0, every scenario with its
// certified bound, and the case bound (max over scenarios).
struct BoundCertificate {
    long iX = 0;
    MinMode mode = MinMode::paper;
    long chi_lo = 0;
    long chi_hi = 0;
    std::vector<Basket> baskets;  // enumerated family the certificate ranges over
    long rho0 = 0;
    std::vector<Scenario> scenarios;
    long case_bound = 0;
    std::vector<std::string> notes;
};

// Replays the published decision tree for one index: certifies h^0 floors (direct,
// averaged, or shift-pair-averaged), non-pencil certificates, mu0 and zeta bounds for
// every pencil hypothesis branch, and assembles the case bound.  The branch structure is
// declarative data; the engine performs no per-case arithmetic shortcuts.  Throws
// std::invalid_argument on inadmissible iX and std::logic_error if any internal
// certification fails (which would make the certificate unsound).
BoundCertificate case_analysis(long iX, MinMode mode = MinMode::paper);

// The global result: max of all case bounds, with the per-index table and the recorded
// Gorenstein constant (i(X) = 1 is classical and out of scope for this engine).
struct GlobalBound {
    long bound = 0;
    std::map<long, long> per_case;
    long gorenstein_bound = 0;
};
GlobalBound global_bound(MinMode mode = MinMode::paper);

// Independent re-verification of an emitted certificate: recomputes rho0, zeta, both
// thresholds and the final bound from the stored fields and checks the structural
// invariants (m1 >= m0, 0 < mu0 <= m0, iX * zeta a positive integer, case_bound = max).
// Returns human-readable problems; an empty vector means the certificate is sound.
std::vector<std::string> soundness_issues(const BoundCertificate& cert);

}  // namespace orbirr
