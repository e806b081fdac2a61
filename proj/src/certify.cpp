// src/certify.cpp — the bound-certification engine: certified floors, pencil dichotomies,
// and the declarative per-index case analysis.
#include "orbirr/certify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbirr {

namespace {

void require_index(long iX) {
    static const std::set<long> ok{2, 3, 4, 5, 6, 8, 10, 12};
    if (!ok.count(iX)) throw std::invalid_argument("index must be one of 2,3,4,5,6,8,10,12");
}

long to_long(const Int& n) { return n.convert_to<long>(); }

}  // namespace

long rho0_bound(long iX, const std::vector<long>& chis) {
    require_index(iX);
    long worst = 1;
    for (long chi : chis) {
        for (const Basket& basket : enumerate_baskets(chi, iX)) {
            Rat mins = 0;
            for (const auto& [pt, mult] : basket.entries()) mins += Rat(mult) * row_min(pt);
            // An arbitrary torsion twist makes every local index unknowable, so the floor
            // is chi + (m^3-m)/(6 iX) + m/iX + (full-row minima), strictly increasing in m.
            long k = 1;
            while (Rat(chi) + Rat(k * k * k - k, 6 * iX) + Rat(k, iX) + mins <= 0)
                if (++k > 64) throw std::logic_error("rho0 search did not terminate");
            worst = std::max(worst, k);
        }
    }
    return worst;
}

long rho0_bound(long iX) { return rho0_bound(iX, allowed_chis(iX)); }

namespace {

NonPencilResult finish_corner(MarginForm margin, long iX) {
    NonPencilResult out;
    out.margin = margin;
    out.margin_min = margin.min_over_region(iX);
    out.certified = out.margin_min && *out.margin_min > 0;
    return out;
}

}  // namespace

NonPencilResult non_pencil_corner(const Rat& chi, const Basket& basket, long m,
                                  const std::vector<ResidueConstraint>& residues, MinMode mode) {
    const long iX = cartier_index(basket);
    MarginForm form = h0_bound_form(chi, basket, m, residues, mode);
    return finish_corner({form.constant - 1, form.L3_coeff - Rat(iX * m), form.lambda_coeff}, iX);
}

NonPencilResult non_pencil_certified(const Numerics& n, long m,
                                     const std::vector<ResidueConstraint>& residues,
                                     MinMode mode) {
    const long iX = cartier_index(n.basket);
    MarginForm form = h0_bound_form(n.chi, n.basket, m, residues, mode);
    NonPencilResult out;
    out.margin = {form.constant - 1, form.L3_coeff - Rat(iX * m), form.lambda_coeff};
    out.margin_min = out.margin.eval(n.L3, n.lambda);
    out.certified = *out.margin_min > 0;
    return out;
}

NonPencilResult non_pencil_averaged(long iX, long m) {
    if (iX < 1 || m < 1) throw std::invalid_argument("non_pencil_averaged needs iX, m >= 1");
    MarginForm lam = lambda_form(m);
    return finish_corner({Rat(-1), lam.L3_coeff - Rat(iX * m), lam.lambda_coeff}, iX);
}

Rat mu0_upper(long k, long h0_floor, bool same_pencil) {
    if (k < 1) throw std::invalid_argument("mu0_upper needs k >= 1");
    if (h0_floor < 2) throw std::invalid_argument("mu0_upper needs h0_floor >= 2");
    return same_pencil ? Rat(k, h0_floor - 1) : Rat(k);
}

Rat zeta_lower(long iX, const Rat& mu0_ub, long m1) {
    if (iX < 1 || m1 < 1) throw std::invalid_argument("zeta_lower needs iX, m1 >= 1");
    if (mu0_ub <= 0) throw std::invalid_argument("zeta_lower needs mu0_ub > 0");
    Rat x = std::min(Rat(1), Rat(3) / (mu0_ub + Rat(m1) + 1));
    return Rat(rat_ceil(Rat(iX) * x)) / Rat(iX);
}

BirationalityBound birational_criterion(long m0, long m1, const Rat& mu0_ub, long rho0,
                                        const Rat& zeta_lb) {
    if (m0 < 1 || m1 < 1 || rho0 < 1) throw std::invalid_argument("m0, m1, rho0 must be >= 1");
    if (mu0_ub <= 0 || zeta_lb <= 0) throw std::invalid_argument("mu0, zeta must be positive");
    BirationalityBound out;
    out.rho_threshold = Rat(m0 + m1 + rho0 - 1);
    out.epsilon_threshold = mu0_ub + Rat(m1) + Rat(2) / zeta_lb;
    // Strictly exceed both thresholds, even when the max is an integer.
    out.final_m = to_long(rat_floor(std::max(out.rho_threshold, out.epsilon_threshold))) + 1;
    return out;
}

long birational_from(long m0, long m1, const Rat& mu0_ub, long rho0, const Rat& zeta_lb) {
    return birational_criterion(m0, m1, mu0_ub, rho0, zeta_lb).final_m;
}

// ----------------------------------------------------------------------------------------
// Case analysis engine.  Each index's decision tree is declarative data; the engine
// certifies every floor and hypothesis branch and aggregates worst cases over the family.
// ----------------------------------------------------------------------------------------

namespace {

enum class HypKind { pencil, not_pencil, same, not_same };

// One pencil hypothesis: pencil/not_pencil speak about |kL0|; same/not_same compare |kL0|
// with |m0 L0|.
struct Hyp {
    HypKind kind;
    long k;
    friend bool operator==(const Hyp&, const Hyp&) = default;
};

enum class M1Just { equals_m0, not_same_assumed, np_direct, np_averaged };

struct BranchSpec {
    std::vector<Hyp> assumes;
    long m1 = 0;
    M1Just m1_just = M1Just::np_direct;
};

enum class FloorMethod { direct, averaged, pair_averaged };

struct FloorSpec {
    long k = 0;
    FloorMethod method = FloorMethod::direct;
};

struct SubcaseSpec {
    long chi_lo = 0;
    long chi_hi = 0;
    long m0 = 0;
    std::optional<long> fix_index_r;    // normalize L0's local index to 0 at one such point
    std::vector<FloorSpec> floors;      // every multiple needing a certified h^0 floor
    std::vector<long> pair_shifts;      // torsion shifts for pair_averaged floors
    bool paper_aggregate = false;       // certify without basket enumeration in paper mode
    std::vector<BranchSpec> branches;
    std::vector<std::string> extra_notes;
};

struct CaseSpec {
    long iX = 0;
    std::vector<SubcaseSpec> subcases;
};

CaseSpec case_spec(long iX) {
    using FM = FloorMethod;
    using MJ = M1Just;
    const Hyp P4{HypKind::pencil, 4}, NP4{HypKind::not_pencil, 4};
    switch (iX) {
        case 2:
            return {2,
                    {{1, 4, 2, std::nullopt, {{2, FM::direct}, {4, FM::direct}}, {}, false,
                      {{{}, 4, MJ::np_direct}},
                      {}}}};
        case 3:
            return {3,
                    {{1, 4, 3, std::nullopt, {{3, FM::direct}, {6, FM::direct}}, {}, false,
                      {{{}, 6, MJ::np_direct}},
                      {}}}};
        case 4:
            return {4,
                    {{1, 4, 4, std::nullopt, {{4, FM::direct}, {5, FM::averaged}}, {}, false,
                      {{{P4}, 5, MJ::np_averaged}, {{NP4}, 4, MJ::equals_m0}},
                      {}}}};
        case 5:
            return {5,
                    {{1, 1, 4, 5, {{4, FM::direct}, {5, FM::direct}, {6, FM::direct}}, {}, false,
                      {{{P4, {HypKind::same, 5}}, 6, MJ::np_direct},
                       {{P4, {HypKind::not_same, 5}}, 5, MJ::not_same_assumed},
                       {{NP4}, 4, MJ::equals_m0}},
                      {"h0(5L0) >= 6 is used as a floor; the quoted equality holds exactly at "
                       "the corner (L^3, lambda) = (1/5, 1/5)"}}}};
        case 6:
            return {6,
                    {{1, 1, 3, 6, {{3, FM::direct}, {4, FM::direct}, {7, FM::direct}}, {}, false,
                      {{{{HypKind::pencil, 3}, {HypKind::same, 4}}, 7, MJ::np_direct},
                       {{{HypKind::not_same, 4}}, 4, MJ::not_same_assumed}},
                      {}},
                     {2, 4, 3, std::nullopt, {{3, FM::pair_averaged}, {6, FM::direct}}, {0, 3},
                      true,
                      {{{}, 6, MJ::np_direct}},
                      {}}}};
        case 8:
            return {8,
                    {{1, 1, 4, 8, {{4, FM::direct}, {6, FM::direct}, {8, FM::direct}}, {}, false,
                      {{{{HypKind::same, 6}}, 8, MJ::np_direct},
                       {{{HypKind::not_same, 6}}, 6, MJ::not_same_assumed}},
                      {}}}};
        case 10:
            return {10,
                    {{1, 1, 4, 10, {{4, FM::direct}, {6, FM::direct}, {8, FM::direct}}, {}, false,
                      {{{{HypKind::same, 6}}, 8, MJ::np_direct},
                       {{{HypKind::not_same, 6}}, 6, MJ::not_same_assumed}},
                      {}}}};
        case 12:
            return {12,
                    {{1, 1, 3, 12, {{3, FM::direct}, {6, FM::direct}, {9, FM::direct}}, {}, false,
                      {{{{HypKind::same, 6}}, 9, MJ::np_direct},
                       {{{HypKind::not_same, 6}}, 6, MJ::not_same_assumed}},
                      {}}}};
        default:
            require_index(iX);
            throw std::logic_error("unreachable");
    }
}

std::string hyp_text(const Hyp& h, long m0) {
    std::ostringstream out;
    switch (h.kind) {
        case HypKind::pencil:
            out << "|" << h.k << "L0| composed with a pencil of surfaces";
            break;
        case HypKind::not_pencil:
            out << "|" << h.k << "L0| not composed with a pencil of surfaces";
            break;
        case HypKind::same:
            out << "|" << h.k << "L0| composed with the same pencil as |" << m0 << "L0|";
            break;
        case HypKind::not_same:
            out << "|" << h.k << "L0| not composed with the same pencil as |" << m0 << "L0|";
            break;
    }
    return out.str();
}

// Hypotheses plus everything they imply: a shared pencil forces both systems to be pencils.
std::vector<Hyp> closure_of(const BranchSpec& br, long m0) {
    std::vector<Hyp> out = br.assumes;
    auto add = [&](Hyp h) {
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    };
    for (const Hyp& h : br.assumes)
        if (h.kind == HypKind::same) {
            add({HypKind::pencil, h.k});
            add({HypKind::pencil, m0});
        }
    return out;
}

bool has_hyp(const std::vector<Hyp>& hyps, HypKind kind, long k) {
    return std::find(hyps.begin(), hyps.end(), Hyp{kind, k}) != hyps.end();
}

// Every truth assignment of the mentioned pencil propositions (consistent with the
// same-pencil implications) must satisfy at least one branch: the case split is a proof by
// exhaustion and a hole would be unsound.
void check_exhaustive(const SubcaseSpec& sc) {
    std::set<long> pencil_ks, same_ks;
    for (const BranchSpec& br : sc.branches)
        for (const Hyp& h : br.assumes) {
            if (h.kind == HypKind::pencil || h.kind == HypKind::not_pencil)
                pencil_ks.insert(h.k);
            else {
                same_ks.insert(h.k);
                pencil_ks.insert(h.k);
                pencil_ks.insert(sc.m0);
            }
        }
    std::vector<long> pk(pencil_ks.begin(), pencil_ks.end());
    std::vector<long> sk(same_ks.begin(), same_ks.end());
    const size_t n = pk.size() + sk.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        auto pencil_val = [&](long k) {
            size_t i = std::find(pk.begin(), pk.end(), k) - pk.begin();
            return (mask >> i) & 1;
        };
        auto same_val = [&](long k) {
            size_t i = pk.size() + (std::find(sk.begin(), sk.end(), k) - sk.begin());
            return (mask >> i) & 1;
        };
        bool consistent = true;
        for (long k : sk)
            if (same_val(k) && !(pencil_val(k) && pencil_val(sc.m0))) consistent = false;
        if (!consistent) continue;
        bool covered = false;
        for (const BranchSpec& br : sc.branches) {
            bool sat = true;
            for (const Hyp& h : br.assumes) {
                bool v = true;
                switch (h.kind) {
                    case HypKind::pencil: v = pencil_val(h.k); break;
                    case HypKind::not_pencil: v = !pencil_val(h.k); break;
                    case HypKind::same: v = same_val(h.k); break;
                    case HypKind::not_same: v = !same_val(h.k); break;
                }
                if (!v) sat = false;
            }
            if (sat) covered = true;
        }
        if (!covered)
            throw std::logic_error("pencil hypothesis branches fail to cover all cases");
    }
}

long ceil_long(const Rat& x) { return to_long(rat_ceil(x)); }

// Certified floors for every multiple in the subcase plan, for one basket and residue
// knowledge (or, with chi = chi_lo and no basket terms, for the aggregate paper path).
struct FloorSet {
    std::map<long, long> floors;
    std::map<long, FloorMethod> method;
};

long region_floor(const MarginForm& form, long iX, const char* what) {
    auto mn = form.min_over_region(iX);
    if (!mn) throw std::logic_error(std::string("unbounded floor form in ") + what);
    return ceil_long(*mn);
}

FloorSet floors_for_basket(long iX, const SubcaseSpec& sc, const Rat& chi, const Basket& basket,
                           const std::vector<ResidueConstraint>& residues, MinMode mode) {
    FloorSet out;
    for (const FloorSpec& f : sc.floors) {
        out.method[f.k] = f.method;
        switch (f.method) {
            case FloorMethod::direct:
                out.floors[f.k] =
                    region_floor(h0_bound_form(chi, basket, f.k, residues, mode), iX, "direct");
                break;
            case FloorMethod::averaged:
                out.floors[f.k] = region_floor(lambda_form(f.k), iX, "averaged");
                break;
            case FloorMethod::pair_averaged: {
                // max over the shift pair is >= ceil(lambda(kL)) provided the bracket
                // |shifts| chi(B) + sum_Q shift_set_sum(Q) is non-negative for this basket.
                Rat bracket = Rat(long(sc.pair_shifts.size())) * chi;
                for (const auto& pt : basket.expanded())
                    bracket += shift_set_sum(pt, f.k, sc.pair_shifts);
                if (bracket < 0)
                    throw std::logic_error("shift-pair bracket is negative for a basket");
                out.floors[f.k] = region_floor(lambda_form(f.k), iX, "pair");
                break;
            }
        }
    }
    return out;
}

// Aggregate paper path: bounds valid for every basket of the index at once, with chi
// replaced by its lowest value.  Only legal when every admissible point type contributes 0
// under the strides in play (direct floors) or has a non-negative per-type bracket.
FloorSet floors_aggregate(long iX, const SubcaseSpec& sc) {
    FloorSet out;
    for (const FloorSpec& f : sc.floors) {
        out.method[f.k] = f.method;
        switch (f.method) {
            case FloorMethod::direct:
                for (const auto& pt : admissible_point_types(iX))
                    if (min_contribution_mode(pt, f.k, MinMode::paper) != 0)
                        throw std::logic_error(
                            "aggregate floor requires vanishing per-type minima");
                out.floors[f.k] = region_floor(
                    {Rat(sc.chi_lo), Rat(f.k * f.k * f.k - f.k, 6), Rat(f.k)}, iX, "aggregate");
                break;
            case FloorMethod::averaged:
                out.floors[f.k] = region_floor(lambda_form(f.k), iX, "averaged");
                break;
            case FloorMethod::pair_averaged:
                // Per-type bracket: the shifts' share of chi plus the worst shift-pair sum.
                for (const auto& pt : admissible_point_types(iX)) {
                    Rat coef = Rat(long(sc.pair_shifts.size())) *
                                   Rat(pt.r * pt.r - 1, 24 * pt.r) +
                               shift_set_sum(pt, f.k, sc.pair_shifts);
                    if (coef < 0)
                        throw std::logic_error("per-type shift-pair bracket is negative");
                }
                out.floors[f.k] = region_floor(lambda_form(f.k), iX, "pair");
                break;
        }
    }
    return out;
}

// Aggregate non-pencil margin: all per-type minima vanish under the stride, so the floor
// form is chi_lo + (m^3-m)/6 L^3 + m lambda.
NonPencilResult np_aggregate(long iX, const SubcaseSpec& sc, long m) {
    for (const auto& pt : admissible_point_types(iX))
        if (min_contribution_mode(pt, m, MinMode::paper) != 0)
            throw std::logic_error("aggregate non-pencil requires vanishing per-type minima");
    return finish_corner(
        {Rat(sc.chi_lo - 1), Rat(m * m * m - m, 6) - Rat(iX * m), Rat(m)}, iX);
}

struct BranchEval {
    Rat mu0;
    std::map<long, long> iota;
    Rat zeta;
    BirationalityBound bound;
    std::optional<Rat> np_margin;
    std::map<long, long> floors_used;
};

BranchEval eval_branch(long iX, const SubcaseSpec& sc, const BranchSpec& br, const FloorSet& fs,
                       long rho0,
                       const std::function<NonPencilResult(long)>& np_direct_at) {
    if (br.m1 < sc.m0) throw std::logic_error("m1 below m0 in a branch");
    const auto cl = closure_of(br, sc.m0);
    BranchEval out;

    const long f0 = fs.floors.at(sc.m0);
    const long f1 = fs.floors.at(br.m1);
    if (f0 < 2) throw std::logic_error("certified floor for m0 is below 2");
    if (f1 < 2) throw std::logic_error("certified floor for m1 is below 2");

    // m1 must carry a reason why |m1 L0| is not composed with the same pencil as |m0 L0|.
    switch (br.m1_just) {
        case M1Just::equals_m0:
            if (br.m1 != sc.m0 || !has_hyp(cl, HypKind::not_pencil, sc.m0))
                throw std::logic_error("m1 = m0 needs the non-pencil hypothesis on m0");
            break;
        case M1Just::not_same_assumed:
            if (!has_hyp(cl, HypKind::not_same, br.m1))
                throw std::logic_error("m1 lacks its not-same-pencil hypothesis");
            break;
        case M1Just::np_direct: {
            NonPencilResult r = np_direct_at(br.m1);
            if (!r.certified) throw std::logic_error("direct non-pencil certification failed");
            out.np_margin = r.margin_min;
            break;
        }
        case M1Just::np_averaged: {
            NonPencilResult r = non_pencil_averaged(iX, br.m1);
            if (!r.certified)
                throw std::logic_error("averaged non-pencil certification failed");
            out.np_margin = r.margin_min;
            break;
        }
    }

    const bool m0_pencil = has_hyp(cl, HypKind::pencil, sc.m0);
    out.iota[sc.m0] = m0_pencil ? std::max<long>(f0 - 1, 1) : 1;
    out.mu0 = mu0_upper(sc.m0, f0, m0_pencil);
    for (const Hyp& h : cl)
        if (h.kind == HypKind::same) {
            out.mu0 = std::min(out.mu0, mu0_upper(h.k, fs.floors.at(h.k), true));
            out.iota[h.k] = fs.floors.at(h.k) - 1;
        }

    out.zeta = zeta_lower(iX, out.mu0, br.m1);
    out.bound = birational_criterion(sc.m0, br.m1, out.mu0, rho0, out.zeta);

    out.floors_used[sc.m0] = f0;
    out.floors_used[br.m1] = f1;
    for (const Hyp& h : cl)
        if (h.kind == HypKind::same) out.floors_used[h.k] = fs.floors.at(h.k);
    return out;
}

// Residue-knowledge candidates for one basket: every distinct point type of the fixing
// index may carry the normalized twist; the first matching expanded slot gets Fixed(0).
struct Candidate {
    OrbifoldPoint fixed_at{0, 0};  // (0,0) when nothing is fixed
    std::vector<ResidueConstraint> residues;
};

std::vector<Candidate> candidates_for(const SubcaseSpec& sc, const Basket& basket) {
    const auto pts = basket.expanded();
    std::vector<ResidueConstraint> all_any(pts.size(), ResidueConstraint::any());
    if (!sc.fix_index_r) return {{OrbifoldPoint{0, 0}, all_any}};
    std::vector<Candidate> out;
    std::set<std::pair<long, long>> seen;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].r != *sc.fix_index_r || !seen.insert({pts[i].r, pts[i].b}).second) continue;
        Candidate c{pts[i], all_any};
        c.residues[i] = ResidueConstraint::fixed(0);
        out.push_back(c);
    }
    if (out.empty())
        throw std::logic_error("basket has no point of the index chosen for fixing");
    return out;
}

std::string point_text(const OrbifoldPoint& pt) {
    return "(" + std::to_string(pt.b) + "," + std::to_string(pt.r) + ")";
}

}  // namespace

BoundCertificate case_analysis(long iX, MinMode mode) {
    require_index(iX);
    const CaseSpec spec = case_spec(iX);

    BoundCertificate cert;
    cert.iX = iX;
    cert.mode = mode;
    const auto chis = allowed_chis(iX);
    cert.chi_lo = *std::min_element(chis.begin(), chis.end());
    cert.chi_hi = *std::max_element(chis.begin(), chis.end());
    for (long chi : chis)
        for (const Basket& b : enumerate_baskets(chi, iX)) cert.baskets.push_back(b);
    cert.rho0 = rho0_bound(iX);

    for (const SubcaseSpec& sc : spec.subcases) {
        check_exhaustive(sc);
        const std::string chi_tag = sc.chi_lo == sc.chi_hi
                                        ? "chi = " + std::to_string(sc.chi_lo)
                                        : "chi in [" + std::to_string(sc.chi_lo) + "," +
                                              std::to_string(sc.chi_hi) + "]";
        for (const std::string& note : sc.extra_notes) cert.notes.push_back(chi_tag + ": " + note);
        if (sc.fix_index_r)
            cert.notes.push_back(chi_tag + ": local index of L0 normalized to 0 at one index-" +
                                 std::to_string(*sc.fix_index_r) +
                                 " point (choice of torsion twist)");
        for (const FloorSpec& f : sc.floors) {
            if (f.method == FloorMethod::averaged)
                cert.notes.push_back(chi_tag + ": h0(" + std::to_string(f.k) +
                                     "L0 + tK) floor by torsion averaging");
            if (f.method == FloorMethod::pair_averaged) {
                std::string shifts;
                for (long t : sc.pair_shifts) shifts += (shifts.empty() ? "" : ",") +
                                                        std::to_string(t);
                cert.notes.push_back(chi_tag + ": h0(" + std::to_string(f.k) +
                                     "L0 + tK) floor by the shift pair {" + shifts + "}");
            }
        }

        const bool aggregate = sc.paper_aggregate && mode == MinMode::paper;
        if (aggregate)
            cert.notes.push_back(chi_tag +
                                 ": certified by per-type aggregate inequalities; no basket "
                                 "enumeration");

        for (const BranchSpec& br : sc.branches) {
            Scenario s;
            s.chi_lo = sc.chi_lo;
            s.chi_hi = sc.chi_hi;
            s.m0 = sc.m0;
            s.m1 = br.m1;
            for (const Hyp& h : br.assumes) s.pencil_hypotheses.push_back(hyp_text(h, sc.m0));
            s.label = chi_tag + (br.assumes.empty() ? ", no pencil hypotheses"
                                                    : ", " + s.pencil_hypotheses.front());
            for (size_t i = 1; i < s.pencil_hypotheses.size(); ++i)
                s.label += "; " + s.pencil_hypotheses[i];

            std::optional<Rat> worst_np;
            if (aggregate) {
                FloorSet fs = floors_aggregate(iX, sc);
                BranchEval ev = eval_branch(iX, sc, br, fs, cert.rho0, [&](long m) {
                    return np_aggregate(iX, sc, m);
                });
                s.mu0_upper = ev.mu0;
                s.iota_floor = ev.iota;
                s.h0_floors = ev.floors_used;
                s.zeta_lb = ev.zeta;
                s.rho_threshold = ev.bound.rho_threshold;
                s.epsilon_threshold = ev.bound.epsilon_threshold;
                s.final_m = ev.bound.final_m;
                worst_np = ev.np_margin;
            } else {
                // Family-worst aggregation: each basket takes its best candidate for this
                // branch; the scenario records the worst certified data over the family.
                bool first_basket = true;
                std::optional<Rat> mu0_worst;
                std::map<long, long> iota_worst, floors_worst;
                long final_worst = 0;
                for (long chi : chis) {
                    if (chi < sc.chi_lo || chi > sc.chi_hi) continue;
                    for (const Basket& basket : enumerate_baskets(chi, iX)) {
                        std::optional<BranchEval> best;
                        OrbifoldPoint best_at{0, 0};
                        std::vector<std::string> cand_texts;
                        for (const Candidate& cand : candidates_for(sc, basket)) {
                            FloorSet fs = floors_for_basket(iX, sc, Rat(chi), basket,
                                                            cand.residues, mode);
                            BranchEval ev =
                                eval_branch(iX, sc, br, fs, cert.rho0, [&](long m) {
                                    return non_pencil_corner(Rat(chi), basket, m,
                                                             cand.residues, mode);
                                });
                            cand_texts.push_back(point_text(cand.fixed_at) + " -> m >= " +
                                                 std::to_string(ev.bound.final_m));
                            if (!best || ev.bound.final_m < best->bound.final_m) {
                                best = ev;
                                best_at = cand.fixed_at;
                            }
                        }
                        if (cand_texts.size() > 1) {
                            std::string line = chi_tag + ", branch [" + s.label +
                                               "], basket " + basket.to_text() +
                                               ": candidates ";
                            for (size_t i = 0; i < cand_texts.size(); ++i)
                                line += (i ? ", " : "") + cand_texts[i];
                            line += "; chosen " + point_text(best_at);
                            cert.notes.push_back(line);
                        }
                        if (!mu0_worst || best->mu0 > *mu0_worst) mu0_worst = best->mu0;
                        for (const auto& [k, v] : best->iota) {
                            auto it = iota_worst.find(k);
                            iota_worst[k] = it == iota_worst.end() ? v : std::min(it->second, v);
                        }
                        for (const auto& [k, v] : best->floors_used) {
                            auto it = floors_worst.find(k);
                            floors_worst[k] =
                                it == floors_worst.end() ? v : std::min(it->second, v);
                        }
                        final_worst = std::max(final_worst, best->bound.final_m);
                        if (best->np_margin &&
                            (!worst_np || *best->np_margin < *worst_np))
                            worst_np = best->np_margin;
                        first_basket = false;
                    }
                }
                if (first_basket) throw std::logic_error("empty basket family in a subcase");
                s.mu0_upper = *mu0_worst;
                s.iota_floor = iota_worst;
                s.h0_floors = floors_worst;
                s.zeta_lb = zeta_lower(iX, s.mu0_upper, br.m1);
                BirationalityBound agg =
                    birational_criterion(sc.m0, br.m1, s.mu0_upper, cert.rho0, s.zeta_lb);
                s.rho_threshold = agg.rho_threshold;
                s.epsilon_threshold = agg.epsilon_threshold;
                // The aggregate thresholds dominate every per-basket threshold, so this is
                // sound; it also coincides with the worst per-basket value.
                s.final_m = std::max(final_worst, agg.final_m);
            }
            if (worst_np)
                cert.notes.push_back("branch [" + s.label + "]: |" + std::to_string(br.m1) +
                                     "L0| non-pencil margin " + rat_to_string(*worst_np) +
                                     " > 0");
            for (const auto& [k, v] : s.iota_floor)
                if (k != sc.m0 || v > 1)
                    cert.notes.push_back("branch [" + s.label + "]: iota_" + std::to_string(k) +
                                         " >= " + std::to_string(v) +
                                         " from the certified h0 floor");
            cert.scenarios.push_back(s);
        }
    }

    cert.case_bound = 0;
    for (const Scenario& s : cert.scenarios) cert.case_bound = std::max(cert.case_bound, s.final_m);
    return cert;
}

std::vector<std::string> soundness_issues(const BoundCertificate& cert) {
    std::vector<std::string> out;
    auto flag = [&](const std::string& msg) { out.push_back(msg); };
    if (cert.rho0 != rho0_bound(cert.iX)) flag("rho0 does not recompute");
    long worst = 0;
    for (const Scenario& s : cert.scenarios) {
        const std::string tag = "scenario [" + s.label + "]: ";
        if (s.m0 < 1 || s.m1 < s.m0) flag(tag + "m0, m1 out of order");
        if (s.mu0_upper <= 0 || s.mu0_upper > Rat(s.m0)) flag(tag + "mu0 outside (0, m0]");
        if (s.zeta_lb <= 0 || s.zeta_lb > 1) flag(tag + "zeta outside (0, 1]");
        Rat scaled = Rat(cert.iX) * s.zeta_lb;
        if (denominator(scaled) != 1 || scaled <= 0) flag(tag + "iX * zeta not a positive integer");
        if (s.zeta_lb != zeta_lower(cert.iX, s.mu0_upper, s.m1))
            flag(tag + "zeta does not recompute from mu0 and m1");
        BirationalityBound again =
            birational_criterion(s.m0, s.m1, s.mu0_upper, cert.rho0, s.zeta_lb);
        if (s.rho_threshold != again.rho_threshold) flag(tag + "rho threshold mismatch");
        if (s.epsilon_threshold != again.epsilon_threshold)
            flag(tag + "epsilon threshold mismatch");
        if (s.final_m < again.final_m) flag(tag + "final bound below the recomputed one");
        if (Rat(s.final_m) <= s.rho_threshold || Rat(s.final_m) <= s.epsilon_threshold)
            flag(tag + "final bound does not strictly exceed the thresholds");
        for (const auto& [k, iota] : s.iota_floor) {
            auto it = s.h0_floors.find(k);
            if (iota < 1 || (it != s.h0_floors.end() && iota > std::max<long>(it->second - 1, 1)))
                flag(tag + "iota floor inconsistent with the h0 floor at k = " +
                     std::to_string(k));
        }
        worst = std::max(worst, s.final_m);
    }
    if (cert.scenarios.empty()) flag("certificate has no scenarios");
    if (cert.case_bound != worst) flag("case_bound is not the max over scenarios");
    return out;
}

GlobalBound global_bound(MinMode mode) {
    GlobalBound out;
    out.gorenstein_bound = 5;  // classical Gorenstein case, recorded rather than re-derived
    for (long iX : {2L, 3L, 4L, 5L, 6L, 8L, 10L, 12L})
        out.per_case[iX] = case_analysis(iX, mode).case_bound;
    out.bound = out.gorenstein_bound;
    for (const auto& [iX, b] : out.per_case) out.bound = std::max(out.bound, b);
    return out;
}

}  // namespace orbirr
