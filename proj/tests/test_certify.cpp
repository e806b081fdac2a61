// tests/test_certify.cpp — rho0, the pencil certificates, the threshold criterion, and the
// full per-index case analysis pinned against independently recomputed values.
#include "orbirr/certify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace orbirr;

namespace {

bool notes_contain(const BoundCertificate& cert, const std::string& needle) {
    return std::any_of(cert.notes.begin(), cert.notes.end(), [&](const std::string& n) {
        return n.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("rho0 per index") {
    REQUIRE(rho0_bound(2) == 4);
    REQUIRE(rho0_bound(3) == 4);
    REQUIRE(rho0_bound(4) == 5);
    REQUIRE(rho0_bound(5) == 3);
    REQUIRE(rho0_bound(6) == 6);
    REQUIRE(rho0_bound(8) == 4);
    REQUIRE(rho0_bound(10) == 5);
    REQUIRE(rho0_bound(12) == 5);
    REQUIRE(rho0_bound(2, {1}) == 2);
    REQUIRE_THROWS_AS(rho0_bound(9), std::invalid_argument);
}

TEST_CASE("rho0 at index 10 is forced by an exactly-zero margin at k = 4") {
    // The floor at k is chi + (k^3-k)/(6 iX) + k/iX + sum of full-row minima; positivity
    // must be strict, and the worst index-10 basket sits exactly on zero at k = 4.
    Rat worst = 1;
    for (const Basket& b : enumerate_baskets(1, 10)) {
        Rat mins = 0;
        for (const auto& [pt, mult] : b.entries()) mins += Rat(mult) * row_min(pt);
        worst = std::min(worst, Rat(1) + Rat(64 - 4, 60) + Rat(4, 10) + mins);
    }
    REQUIRE(worst == Rat(0));
}

TEST_CASE("direct non-pencil certificates") {
    // Index 5, one index-5 point normalized to 0, the other four unknown, m = 6.
    const Basket b5 = Basket::from_text("5x(1,5)");
    std::vector<ResidueConstraint> res5{ResidueConstraint::fixed(0)};
    res5.resize(5, ResidueConstraint::any());
    const auto r5 = non_pencil_corner(Rat(1), b5, 6, res5, MinMode::paper);
    REQUIRE(r5.certified);
    REQUIRE(r5.margin_min == Rat(3, 5));

    // Index 6, chi = 2, m = 6: every stride is trivial, and the kink vertex decides.
    const Basket b6 = Basket::from_text("10x(1,2) 8x(1,3) 2x(1,6)");
    const std::vector<ResidueConstraint> any20(20, ResidueConstraint::any());
    const auto r6 = non_pencil_corner(Rat(2), b6, 6, any20, MinMode::paper);
    REQUIRE(r6.certified);
    REQUIRE((r6.margin == MarginForm{Rat(1), Rat(-1), Rat(6)}));
    REQUIRE(r6.margin_min == Rat(1));

    // Concrete variant at the smallest index-6 numerics.
    const Basket flagship = Basket::from_text("5x(1,2) 4x(1,3) 1x(1,6)");
    std::vector<ResidueConstraint> res6(9, ResidueConstraint::any());
    res6.push_back(ResidueConstraint::fixed(0));
    const auto n = Numerics::for_basket(flagship, Rat(1, 6), Rat(1, 6));
    const auto r7 = non_pencil_certified(n, 7, res6, MinMode::paper);
    REQUIRE(r7.certified);
    REQUIRE(r7.margin_min == Rat(143, 72));
}

TEST_CASE("averaged non-pencil certificates") {
    const auto a = non_pencil_averaged(4, 5);
    REQUIRE(a.certified);
    REQUIRE(a.margin_min == Rat(1, 4));
    const auto b = non_pencil_averaged(6, 6);
    REQUIRE_FALSE(b.certified);
    REQUIRE(b.margin_min == Rat(-1));
    const auto c = non_pencil_averaged(6, 7);
    REQUIRE(c.certified);
    REQUIRE(c.margin_min == Rat(5, 2));
}

TEST_CASE("mu0 and zeta estimates") {
    REQUIRE(mu0_upper(4, 5, true) == Rat(1));
    REQUIRE(mu0_upper(6, 5, true) == Rat(3, 2));
    REQUIRE(mu0_upper(6, 13, false) == Rat(6));
    REQUIRE_THROWS_AS(mu0_upper(4, 1, true), std::invalid_argument);
    REQUIRE_THROWS_AS(mu0_upper(0, 5, true), std::invalid_argument);

    REQUIRE(zeta_lower(5, Rat(1), 6) == Rat(2, 5));
    REQUIRE(zeta_lower(8, Rat(3, 2), 8) == Rat(3, 8));
    REQUIRE(zeta_lower(12, Rat(3, 2), 9) == Rat(1, 3));
    REQUIRE(zeta_lower(2, Rat(2), 4) == Rat(1, 2));
    REQUIRE(zeta_lower(2, Rat(1), 1) == Rat(1));  // short-distance branch: min{1, ...} = 1
    REQUIRE_THROWS_AS(zeta_lower(6, Rat(0), 4), std::invalid_argument);
}

TEST_CASE("threshold criterion") {
    const auto b = birational_criterion(1, 1, Rat(1), 1, Rat(1));
    REQUIRE(b.rho_threshold == Rat(2));
    REQUIRE(b.epsilon_threshold == Rat(4));
    REQUIRE(b.final_m == 5);
    // Integer threshold must still be exceeded strictly.
    const auto c = birational_criterion(3, 6, Rat(3), 4, Rat(1, 3));
    REQUIRE(c.rho_threshold == Rat(12));
    REQUIRE(c.epsilon_threshold == Rat(15));
    REQUIRE(c.final_m == 16);
    REQUIRE(birational_from(3, 6, Rat(3), 4, Rat(1, 3)) == 16);
    REQUIRE_THROWS_AS(birational_criterion(0, 1, Rat(1), 1, Rat(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(birational_criterion(1, 1, Rat(-1), 1, Rat(1)), std::invalid_argument);
}

TEST_CASE("threshold criterion is monotone in its inputs") {
    std::mt19937_64 rng(20260823);
    for (int trial = 0; trial < 2000; ++trial) {
        const long m0 = 1 + long(rng() % 6);
        const long m1 = m0 + long(rng() % 8);
        const long rho0 = 1 + long(rng() % 8);
        const Rat mu0(1 + long(rng() % (4 * m0)), 4);
        const Rat zeta(1 + long(rng() % 12), 12);
        const auto base = birational_criterion(m0, m1, mu0, rho0, zeta);
        REQUIRE(Rat(base.final_m) > base.rho_threshold);
        REQUIRE(Rat(base.final_m) > base.epsilon_threshold);
        REQUIRE(birational_from(m0, m1 + 1, mu0, rho0, zeta) >= base.final_m);
        REQUIRE(birational_from(m0, m1, mu0 + Rat(1, 3), rho0, zeta) >= base.final_m);
        REQUIRE(birational_from(m0, m1, mu0, rho0 + 1, zeta) >= base.final_m);
        if (zeta < 1)
            REQUIRE(birational_from(m0, m1, mu0, rho0, zeta + Rat(1, 12)) <= base.final_m);
    }
}

TEST_CASE("case analysis: single-branch indices 2 and 3") {
    const auto c2 = case_analysis(2);
    REQUIRE(c2.case_bound == 11);
    REQUIRE(c2.rho0 == 4);
    REQUIRE(c2.scenarios.size() == 1);
    const auto& s2 = c2.scenarios.front();
    REQUIRE(s2.m0 == 2);
    REQUIRE(s2.m1 == 4);
    REQUIRE(s2.pencil_hypotheses.empty());
    REQUIRE(s2.mu0_upper == Rat(2));
    REQUIRE(s2.zeta_lb == Rat(1, 2));
    REQUIRE((s2.h0_floors == std::map<long, long>{{2, 3}, {4, 8}}));
    REQUIRE(s2.rho_threshold == Rat(9));
    REQUIRE(s2.epsilon_threshold == Rat(10));
    REQUIRE(s2.final_m == 11);

    const auto c3 = case_analysis(3);
    REQUIRE(c3.case_bound == 16);
    REQUIRE(c3.scenarios.size() == 1);
    const auto& s3 = c3.scenarios.front();
    REQUIRE(s3.m0 == 3);
    REQUIRE(s3.m1 == 6);
    REQUIRE(s3.mu0_upper == Rat(3));
    REQUIRE(s3.zeta_lb == Rat(1, 3));
    REQUIRE((s3.h0_floors == std::map<long, long>{{3, 4}, {6, 15}}));
    REQUIRE(s3.final_m == 16);
}

TEST_CASE("case analysis: index 4 splits on the pencil hypothesis") {
    const auto c = case_analysis(4);
    REQUIRE(c.case_bound == 14);
    REQUIRE(c.scenarios.size() == 2);
    const auto& a = c.scenarios[0];
    REQUIRE(a.m1 == 5);
    REQUIRE(a.mu0_upper == Rat(1));
    REQUIRE(a.zeta_lb == Rat(1, 2));
    REQUIRE((a.iota_floor == std::map<long, long>{{4, 4}}));
    REQUIRE((a.h0_floors == std::map<long, long>{{4, 5}, {5, 7}}));
    REQUIRE(a.final_m == 14);
    const auto& b = c.scenarios[1];
    REQUIRE(b.m1 == 4);
    REQUIRE(b.mu0_upper == Rat(4));
    REQUIRE(b.final_m == 13);
    REQUIRE(notes_contain(c, "torsion averaging"));
}

TEST_CASE("case analysis: index 5") {
    const auto c = case_analysis(5);
    REQUIRE(c.case_bound == 14);
    REQUIRE(c.baskets.size() == 6);
    REQUIRE(c.rho0 == 3);
    REQUIRE(c.scenarios.size() == 3);
    REQUIRE(c.scenarios[0].mu0_upper == Rat(1));
    REQUIRE((c.scenarios[0].iota_floor == std::map<long, long>{{4, 2}, {5, 5}}));
    REQUIRE((c.scenarios[0].h0_floors == std::map<long, long>{{4, 3}, {5, 6}, {6, 8}}));
    REQUIRE(c.scenarios[0].zeta_lb == Rat(2, 5));
    REQUIRE(c.scenarios[0].final_m == 13);
    REQUIRE(c.scenarios[1].final_m == 13);
    REQUIRE(c.scenarios[2].final_m == 14);
    REQUIRE(c.scenarios[2].mu0_upper == Rat(4));
    REQUIRE(notes_contain(c, "index-5 point"));
    REQUIRE(notes_contain(c, "candidates"));
}

TEST_CASE("case analysis: index 6 has the chi = 1 and aggregate subcases") {
    const auto c = case_analysis(6);
    REQUIRE(c.case_bound == 16);
    REQUIRE(c.rho0 == 6);
    REQUIRE(c.scenarios.size() == 3);

    const auto& a = c.scenarios[0];  // chi = 1, pencil(3) + same pencil at 4
    REQUIRE(a.chi_lo == 1);
    REQUIRE(a.chi_hi == 1);
    REQUIRE(a.m0 == 3);
    REQUIRE(a.m1 == 7);
    REQUIRE(a.mu0_upper == Rat(2));
    REQUIRE((a.iota_floor == std::map<long, long>{{3, 1}, {4, 2}}));
    REQUIRE((a.h0_floors == std::map<long, long>{{3, 2}, {4, 3}, {7, 10}}));
    REQUIRE(a.zeta_lb == Rat(1, 3));
    REQUIRE(a.rho_threshold == Rat(15));
    REQUIRE(a.epsilon_threshold == Rat(15));
    REQUIRE(a.final_m == 16);

    const auto& b = c.scenarios[1];  // chi = 1, not the same pencil at 4
    REQUIRE(b.m1 == 4);
    REQUIRE(b.mu0_upper == Rat(3));
    REQUIRE(b.zeta_lb == Rat(1, 2));
    REQUIRE(b.final_m == 13);

    const auto& g = c.scenarios[2];  // chi in [2,4], aggregate
    REQUIRE(g.chi_lo == 2);
    REQUIRE(g.chi_hi == 4);
    REQUIRE(g.m1 == 6);
    REQUIRE(g.mu0_upper == Rat(3));
    REQUIRE((g.h0_floors == std::map<long, long>{{3, 2}, {6, 9}}));
    REQUIRE(g.zeta_lb == Rat(1, 3));
    REQUIRE(g.final_m == 16);

    REQUIRE(notes_contain(c, "iota_4 >= 2"));
    REQUIRE(notes_contain(c, "shift pair {0,3}"));
    REQUIRE(notes_contain(c, "no basket enumeration"));
    REQUIRE(notes_contain(c, "index-6 point"));
}

TEST_CASE("case analysis: index 8") {
    const auto c = case_analysis(8);
    REQUIRE(c.case_bound == 16);
    REQUIRE(c.baskets.size() == 3);
    REQUIRE(c.scenarios.size() == 2);
    const auto& a = c.scenarios[0];
    REQUIRE(a.m0 == 4);
    REQUIRE(a.m1 == 8);
    REQUIRE(a.mu0_upper == Rat(3, 2));
    REQUIRE((a.iota_floor == std::map<long, long>{{4, 1}, {6, 4}}));
    REQUIRE((a.h0_floors == std::map<long, long>{{4, 2}, {6, 5}, {8, 13}}));
    REQUIRE(a.zeta_lb == Rat(3, 8));
    REQUIRE(a.rho_threshold == Rat(15));
    REQUIRE(a.epsilon_threshold == Rat(89, 6));
    REQUIRE(a.final_m == 16);
    const auto& b = c.scenarios[1];
    REQUIRE(b.m1 == 6);
    REQUIRE(b.mu0_upper == Rat(4));
    REQUIRE(b.epsilon_threshold == Rat(46, 3));
    REQUIRE(b.final_m == 16);
    REQUIRE(notes_contain(c, "chosen (1,8)"));
}

TEST_CASE("case analysis: indices 10 and 12 give the global bound") {
    const auto c10 = case_analysis(10);
    REQUIRE(c10.case_bound == 17);
    REQUIRE(c10.baskets.size() == 6);
    REQUIRE(c10.scenarios.size() == 2);
    REQUIRE(c10.scenarios[0].mu0_upper == Rat(3, 2));
    REQUIRE(c10.scenarios[0].zeta_lb == Rat(3, 10));
    REQUIRE((c10.scenarios[0].h0_floors == std::map<long, long>{{4, 2}, {6, 5}, {8, 10}}));
    REQUIRE(c10.scenarios[0].epsilon_threshold == Rat(97, 6));
    REQUIRE(c10.scenarios[0].final_m == 17);
    REQUIRE(c10.scenarios[1].final_m == 17);
    REQUIRE(c10.scenarios[1].epsilon_threshold == Rat(50, 3));

    const auto c12 = case_analysis(12);
    REQUIRE(c12.case_bound == 17);
    REQUIRE(c12.baskets.size() == 2);
    REQUIRE(c12.scenarios.size() == 2);
    const auto& a = c12.scenarios[0];
    REQUIRE(a.m0 == 3);
    REQUIRE(a.m1 == 9);
    REQUIRE(a.mu0_upper == Rat(3, 2));
    REQUIRE(a.zeta_lb == Rat(1, 3));
    REQUIRE((a.h0_floors == std::map<long, long>{{3, 2}, {6, 5}, {9, 12}}));
    REQUIRE(a.rho_threshold == Rat(16));
    REQUIRE(a.epsilon_threshold == Rat(33, 2));
    REQUIRE(a.final_m == 17);
    REQUIRE(c12.scenarios[1].final_m == 16);
}

TEST_CASE("sharp minimization never worsens a case bound") {
    for (long iX : {2L, 3L, 4L, 5L, 6L, 8L, 10L, 12L}) {
        INFO("iX = " << iX);
        const auto paper = case_analysis(iX, MinMode::paper);
        const auto sharp = case_analysis(iX, MinMode::sharp);
        REQUIRE(sharp.case_bound <= paper.case_bound);
        // On this family the published estimates are already tight branch by branch.
        REQUIRE(sharp.case_bound == paper.case_bound);
    }
}

TEST_CASE("certificates pass their own audit") {
    for (long iX : {2L, 3L, 4L, 5L, 6L, 8L, 10L, 12L})
        for (MinMode mode : {MinMode::paper, MinMode::sharp}) {
            const auto cert = case_analysis(iX, mode);
            INFO("iX = " << iX);
            REQUIRE(soundness_issues(cert).empty());
        }
}

TEST_CASE("tampered certificates are rejected by the audit") {
    auto cert = case_analysis(2);
    cert.scenarios.front().final_m -= 1;
    REQUIRE_FALSE(soundness_issues(cert).empty());

    auto cert2 = case_analysis(12);
    cert2.case_bound = 16;
    REQUIRE_FALSE(soundness_issues(cert2).empty());

    auto cert3 = case_analysis(8);
    cert3.scenarios.front().mu0_upper = Rat(5);  // above m0
    REQUIRE_FALSE(soundness_issues(cert3).empty());
}

TEST_CASE("global bound") {
    const auto g = global_bound();
    REQUIRE(g.bound == 17);
    REQUIRE(g.gorenstein_bound == 5);
    const std::map<long, long> expected{{2, 11}, {3, 16}, {4, 14}, {5, 14},
                                        {6, 16}, {8, 16}, {10, 17}, {12, 17}};
    REQUIRE(g.per_case == expected);
    REQUIRE(global_bound(MinMode::sharp).bound == 17);
    REQUIRE_THROWS_AS(case_analysis(7), std::invalid_argument);
}
