// Python bindings: a thin string-based layer over the exact-arithmetic core.  Rationals
// cross the boundary as "p/q" strings so no precision is lost.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbirr/report.hpp"

namespace py = pybind11;
using namespace orbirr;

namespace {

std::string rs(const Rat& x) { return rat_to_string(x); }

MinMode mode_of(const std::string& m) {
    if (m == "paper") return MinMode::paper;
    if (m == "sharp") return MinMode::sharp;
    throw std::invalid_argument("mode must be 'paper' or 'sharp'");
}

}  // namespace

PYBIND11_MODULE(_orbirr, m) {
    m.doc() = "exact orbifold Riemann-Roch arithmetic for K-trivial terminal threefolds";

    m.def("chi", [](const std::string& basket) { return rs(chi_of(Basket::from_text(basket))); },
          py::arg("basket"), "chi(O) of a basket given as text, e.g. '5x(1,2) 4x(1,3) 1x(1,6)'");

    m.def("cartier_index",
          [](const std::string& basket) { return cartier_index(Basket::from_text(basket)); },
          py::arg("basket"));

    m.def("baskets",
          [](long chi, long iX) {
              std::vector<std::string> out;
              for (const Basket& b : enumerate_baskets(chi, iX)) out.push_back(b.to_text());
              return out;
          },
          py::arg("chi"), py::arg("iX"), "admissible baskets for the pair (chi, iX)");

    m.def("contribution",
          [](long b, long r, long i) { return rs(contribution({b, r}, i)); },
          py::arg("b"), py::arg("r"), py::arg("i"), "local contribution c_{(b,r)}(i)");

    m.def("table_a", [] {
        std::vector<std::tuple<long, long, std::vector<std::string>>> out;
        for (const auto& [pt, vals] : table_a()) {
            std::vector<std::string> vs;
            for (const Rat& v : vals) vs.push_back(rs(v));
            out.emplace_back(pt.b, pt.r, vs);
        }
        return out;
    });

    m.def("h0_exact",
          [](const std::string& basket, const std::string& L3, const std::string& lam, long mult,
             const std::vector<long>& residues) {
              Basket b = Basket::from_text(basket);
              Numerics n = Numerics::for_basket(b, rat_from_string(L3), rat_from_string(lam));
              return rs(h0_exact(n, mult, residues));
          },
          py::arg("basket"), py::arg("L3"), py::arg("lam"), py::arg("m"), py::arg("residues"),
          "exact h0(mL + T) given the local index of mL + T at every point");

    m.def("h0_lower_bound",
          [](const std::string& basket, const std::string& L3, const std::string& lam, long mult,
             const std::vector<std::string>& residues, const std::string& mode) {
              Basket b = Basket::from_text(basket);
              Numerics n = Numerics::for_basket(b, rat_from_string(L3), rat_from_string(lam));
              return rs(h0_lower_bound(n, mult, parse_residue_tokens(b, residues),
                                       mode_of(mode)));
          },
          py::arg("basket"), py::arg("L3"), py::arg("lam"), py::arg("m"),
          py::arg("residues") = std::vector<std::string>{}, py::arg("mode") = "paper",
          "certified lower bound; residues are '*' or an integer per point, default all '*'");

    m.def("rho0", [](long iX) { return rho0_bound(iX); }, py::arg("iX"),
          "least m with h0(mL + T) > 0 for every basket and torsion twist");

    m.def("birational_from",
          [](long m0, long m1, const std::string& mu0, long rho0, const std::string& zeta) {
              return birational_from(m0, m1, rat_from_string(mu0), rho0,
                                     rat_from_string(zeta));
          },
          py::arg("m0"), py::arg("m1"), py::arg("mu0"), py::arg("rho0"), py::arg("zeta"));

    m.def("case_bound",
          [](long iX, const std::string& mode) { return case_analysis(iX, mode_of(mode)).case_bound; },
          py::arg("iX"), py::arg("mode") = "paper");

    m.def("case_certificate_json",
          [](long iX, const std::string& mode) {
              return render_case(case_analysis(iX, mode_of(mode)), OutputFormat::jsonl);
          },
          py::arg("iX"), py::arg("mode") = "paper",
          "the full certificate as JSON lines, one object per scenario");

    m.def("global_bound",
          [](const std::string& mode) {
              GlobalBound g = global_bound(mode_of(mode));
              return std::make_tuple(g.bound, g.per_case, g.gorenstein_bound);
          },
          py::arg("mode") = "paper", "(bound, per-index table, Gorenstein bound)");

    m.def("verify", [] {
        std::vector<std::tuple<int, std::string, bool, std::string>> out;
        for (const CheckResult& c : run_verification())
            out.emplace_back(c.number, c.label, c.pass, c.detail);
        return out;
    });

    m.def("wps_bound",
          [](const std::string& name) { return birational_bound(resolve_weighted(name)); },
          py::arg("variety"), "birationality bound for a K-trivial weighted model");

    m.def("wps_cross_check",
          [](const std::string& name, long m_max) {
              return cross_check_reid(resolve_weighted(name), m_max);
          },
          py::arg("variety"), py::arg("m_max") = 20);
}
