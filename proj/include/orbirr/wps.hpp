// Weighted complete intersection threefolds with trivial canonical class: Hilbert series,
// invariant fitting, and cross-checks against the orbifold Riemann-Roch formula.
#pragma once

#include <string>
#include <vector>

#include "orbirr/reid.hpp"

namespace orbirr {

// X_{d_1,...,d_c} in P(w_1,...,w_n), threefold (n - c = 4) with sum d = sum w, so that a
// general member has K = O.  Only the numerical data lives here; quasismoothness of the
// classical examples is taken as known.
struct WeightedVariety {
    std::string name;
    std::vector<long> degrees;
    std::vector<long> weights;

    void validate() const;  // throws std::invalid_argument on bad shape
    std::string to_text() const;
};

// Parses "X10 in P(1,1,1,2,5)" or "X2,6 in P(1,1,1,1,1,3)".
WeightedVariety parse_weighted(const std::string& text);

// The classical trio: X10 in P(1,1,1,2,5), X8 in P(1,1,1,1,4), X2,6 in P(1,1,1,1,1,3).
std::vector<WeightedVariety> weighted_catalogue();

// Accepts a catalogue name ("X10"), a full catalogue entry, or any parseable description.
WeightedVariety resolve_weighted(const std::string& text);

// Coefficients of prod (1 - t^d) / prod (1 - t^w) up to degree m_max inclusive; entry m is
// h^0(X, mL) for a general member.
std::vector<Int> hilbert_coeffs(const WeightedVariety& v, long m_max);

// L^3 = prod d / prod w.
Rat degree_L3(const WeightedVariety& v);

// Recovers (chi, L^3, lambda) from the first few Hilbert coefficients, checks them against
// the degree and the K-trivial constraint chi = 0, and returns the (empty-basket) numerics.
Numerics fit_invariants(const WeightedVariety& v);

// True when the Hilbert series agrees with the plurigenus formula for all 1 <= m <= m_max.
bool cross_check_reid(const WeightedVariety& v, long m_max);

// Birationality bound for |K + mL + T|: |L| itself is free and big on these examples, so
// m0 = m1 = 1 with mu0 <= 1 and rho0 = 1, while zeta = L^3.
long birational_bound(const WeightedVariety& v);

}  // namespace orbirr
