// Rendering and self-verification: every CLI subcommand builds one JSON value and both
// output styles (aligned text, JSON lines) are derived from it, so the two can never
// drift apart.
#pragma once

#include <string>
#include <vector>

#include "orbirr/certify.hpp"
#include "orbirr/wps.hpp"

namespace orbirr {

enum class OutputFormat { text, jsonl };

std::string render_table_a(OutputFormat f);
std::string render_chi(const Basket& basket, OutputFormat f);
std::string render_baskets(long chi, long iX, OutputFormat f);

struct H0Query {
    Basket basket;
    Rat L3;
    Rat lambda;
    long m = 1;
    std::vector<ResidueConstraint> residues;  // empty means all free
    MinMode mode = MinMode::paper;
};
std::string render_h0(const H0Query& q, OutputFormat f);

std::string render_rho0(long iX, OutputFormat f);
std::string render_bound(long m0, long m1, const Rat& mu0, long rho0, const Rat& zeta,
                         OutputFormat f);
std::string render_case(const BoundCertificate& cert, OutputFormat f);
std::string render_wps(const WeightedVariety& v, long check_m, OutputFormat f);

// One entry per verification check; the numbering is stable and the details carry the
// published value next to the computed one.
struct CheckResult {
    int number = 0;
    std::string label;
    bool pass = false;
    std::string detail;
};
std::vector<CheckResult> run_verification();
bool all_pass(const std::vector<CheckResult>& results);
std::string render_verification(const std::vector<CheckResult>& results, OutputFormat f);

// Basket serialization as [[b, r, mult], ...]; from-JSON validates like the constructors.
std::string basket_to_json(const Basket& basket);
Basket basket_from_json(const std::string& text);

// Residue tokens as accepted on the command line: one "*" (unknown) or integer in [0, r)
// per expanded basket point; an empty list means every point is unknown.
std::vector<ResidueConstraint> parse_residue_tokens(const Basket& basket,
                                                    const std::vector<std::string>& tokens);

}  // namespace orbirr
