// orbirr — exact plurigenus arithmetic and birationality bounds for terminal threefolds
// with numerically trivial canonical class.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbirr/report.hpp"

namespace {

using namespace orbirr;

MinMode parse_mode(const std::string& mode) {
    return mode == "sharp" ? MinMode::sharp : MinMode::paper;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbirr: exact orbifold Riemann-Roch arithmetic and birationality bounds "
                 "for terminal threefolds with K = 0"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit JSON lines instead of aligned text");
    auto fmt = [&] { return json ? OutputFormat::jsonl : OutputFormat::text; };

    int exit_code = 0;

    app.add_subcommand("table-a", "print the table of local contributions c_Q(i)")
        ->callback([&] { std::cout << render_table_a(fmt()); });

    {
        auto* cmd = app.add_subcommand("chi", "chi(O) and Cartier index of a basket");
        auto text = std::make_shared<std::string>();
        cmd->add_option("basket", *text, "basket such as \"5x(1,2) 4x(1,3) 1x(1,6)\"")
            ->required();
        cmd->callback([&, text] { std::cout << render_chi(Basket::from_text(*text), fmt()); });
    }

    {
        auto* cmd = app.add_subcommand("baskets", "enumerate admissible baskets");
        auto chi = std::make_shared<long>(1);
        auto iX = std::make_shared<long>(2);
        cmd->add_option("--chi", *chi, "chi(O) of the family")->required();
        cmd->add_option("--index", *iX, "global index i(X)")->required();
        cmd->callback([&, chi, iX] { std::cout << render_baskets(*chi, *iX, fmt()); });
    }

    {
        auto* cmd = app.add_subcommand("h0", "certified lower bound for h0(mL + T)");
        auto basket = std::make_shared<std::string>();
        auto L3 = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto m = std::make_shared<long>(1);
        auto residues = std::make_shared<std::vector<std::string>>();
        auto mode = std::make_shared<std::string>("paper");
        cmd->add_option("--basket", *basket, "basket of orbifold points")->required();
        cmd->add_option("--L3", *L3, "L^3 as a rational p/q")->required();
        cmd->add_option("--lambda", *lambda, "lambda = chi(L) - chi(O) as a rational p/q")
            ->required();
        cmd->add_option("--m", *m, "multiple of L")->required();
        cmd->add_option("--residues", *residues,
                        "local index of L at each point: an integer or '*' per point");
        cmd->add_option("--mode", *mode, "minimization mode")
            ->check(CLI::IsMember({"paper", "sharp"}));
        cmd->callback([&, basket, L3, lambda, m, residues, mode] {
            H0Query q;
            q.basket = Basket::from_text(*basket);
            q.L3 = rat_from_string(*L3);
            q.lambda = rat_from_string(*lambda);
            q.m = *m;
            q.residues = parse_residue_tokens(q.basket, *residues);
            q.mode = parse_mode(*mode);
            std::cout << render_h0(q, fmt());
        });
    }

    {
        auto* cmd = app.add_subcommand("rho0", "least m with h0(mL + T) > 0 guaranteed");
        auto iX = std::make_shared<long>(2);
        cmd->add_option("--index", *iX, "global index i(X)")->required();
        cmd->callback([&, iX] { std::cout << render_rho0(*iX, fmt()); });
    }

    {
        auto* cmd = app.add_subcommand("bound", "birationality bound from its ingredients");
        auto m0 = std::make_shared<long>(1);
        auto m1 = std::make_shared<long>(1);
        auto mu0 = std::make_shared<std::string>("1");
        auto rho0 = std::make_shared<long>(1);
        auto zeta = std::make_shared<std::string>("1");
        cmd->add_option("--m0", *m0, "first working multiple")->required();
        cmd->add_option("--m1", *m1, "second working multiple")->required();
        cmd->add_option("--mu0", *mu0, "upper bound for mu0 (rational)")->required();
        cmd->add_option("--rho0", *rho0, "effective non-vanishing threshold")->required();
        cmd->add_option("--zeta", *zeta, "lower bound for zeta (rational)")->required();
        cmd->callback([&, m0, m1, mu0, rho0, zeta] {
            std::cout << render_bound(*m0, *m1, rat_from_string(*mu0), *rho0,
                                      rat_from_string(*zeta), fmt());
        });
    }

    {
        auto* cmd = app.add_subcommand("case", "certified case analysis for one index");
        auto iX = std::make_shared<long>(2);
        auto mode = std::make_shared<std::string>("paper");
        cmd->add_option("--index", *iX, "global index i(X)")->required();
        cmd->add_option("--mode", *mode, "minimization mode")
            ->check(CLI::IsMember({"paper", "sharp"}));
        cmd->callback([&, iX, mode] {
            std::cout << render_case(case_analysis(*iX, parse_mode(*mode)), fmt());
        });
    }

    app.add_subcommand("verify-paper",
                       "check every published constant against the computed value")
        ->callback([&] {
            auto results = run_verification();
            std::cout << render_verification(results, fmt());
            exit_code = all_pass(results) ? 0 : 1;
        });

    {
        auto* cmd = app.add_subcommand("wps", "invariants of a K-trivial weighted model");
        auto name = std::make_shared<std::string>();
        auto check = std::make_shared<long>(0);
        cmd->add_option("variety", *name, "catalogue name (X10) or \"X10 in P(1,1,1,2,5)\"")
            ->required();
        cmd->add_option("--check", *check,
                        "cross-check the Hilbert series against the plurigenus formula up "
                        "to this multiple");
        cmd->callback([&, name, check] {
            std::cout << render_wps(resolve_weighted(*name), *check, fmt());
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
