// src/wps.cpp — Hilbert series arithmetic for K-trivial weighted complete intersections.
#include "orbirr/wps.hpp"

#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "orbirr/certify.hpp"

namespace orbirr {

void WeightedVariety::validate() const {
    if (degrees.empty() || weights.empty())
        throw std::invalid_argument("weighted variety needs degrees and weights");
    for (long d : degrees)
        if (d < 1) throw std::invalid_argument("degrees must be positive");
    for (long w : weights)
        if (w < 1) throw std::invalid_argument("weights must be positive");
    if (weights.size() != degrees.size() + 4)
        throw std::invalid_argument("not a threefold: need #weights = #degrees + 4");
    long sd = std::accumulate(degrees.begin(), degrees.end(), 0L);
    long sw = std::accumulate(weights.begin(), weights.end(), 0L);
    if (sd != sw)
        throw std::invalid_argument("canonical class is not trivial: sum d != sum w");
}

std::string WeightedVariety::to_text() const {
    std::ostringstream out;
    out << "X";
    for (size_t i = 0; i < degrees.size(); ++i) out << (i ? "," : "") << degrees[i];
    out << " in P(";
    for (size_t i = 0; i < weights.size(); ++i) out << (i ? "," : "") << weights[i];
    out << ")";
    return out.str();
}

WeightedVariety parse_weighted(const std::string& text) {
    static const std::regex re(R"(^\s*X(\d+(?:,\d+)*)\s+in\s+P\((\d+(?:,\d+)*)\)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw std::invalid_argument("expected a variety like \"X10 in P(1,1,1,2,5)\"");
    auto split = [](const std::string& s) {
        std::vector<long> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
        return out;
    };
    WeightedVariety v{"", split(m[1].str()), split(m[2].str())};
    v.validate();
    v.name = v.to_text();
    return v;
}

std::vector<WeightedVariety> weighted_catalogue() {
    std::vector<WeightedVariety> out = {
        parse_weighted("X10 in P(1,1,1,2,5)"),
        parse_weighted("X8 in P(1,1,1,1,4)"),
        parse_weighted("X2,6 in P(1,1,1,1,1,3)"),
    };
    return out;
}

WeightedVariety resolve_weighted(const std::string& text) {
    for (const WeightedVariety& v : weighted_catalogue()) {
        if (v.name == text) return v;
        if (v.name.substr(0, v.name.find(' ')) == text) return v;
    }
    return parse_weighted(text);
}

std::vector<Int> hilbert_coeffs(const WeightedVariety& v, long m_max) {
    v.validate();
    if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
    const size_t n = size_t(m_max) + 1;
    std::vector<Int> c(n, 0);
    c[0] = 1;
    // Numerator: multiply by each (1 - t^d).
    for (long d : v.degrees)
        for (long i = m_max; i >= d; --i) c[size_t(i)] -= c[size_t(i - d)];
    // Denominator: divide by each (1 - t^w), i.e. multiply by 1 + t^w + t^{2w} + ...
    for (long w : v.weights)
        for (long i = w; i <= m_max; ++i) c[size_t(i)] += c[size_t(i - w)];
    return c;
}

Rat degree_L3(const WeightedVariety& v) {
    v.validate();
    Int num = 1, den = 1;
    for (long d : v.degrees) num *= d;
    for (long w : v.weights) den *= w;
    return Rat(num, den);
}

Numerics fit_invariants(const WeightedVariety& v) {
    const auto c = hilbert_coeffs(v, 4);
    // h^0(mL) = chi + (m^3 - m)/6 L^3 + m lambda with an empty basket; solve the 3x3 system
    //   m=1: chi + 0*L3 + 1*lambda = c1
    //   m=2: chi + 1*L3 + 2*lambda = c2
    //   m=3: chi + 4*L3 + 3*lambda = c3
    const Rat c1(c[1]), c2(c[2]), c3(c[3]);
    const Rat fitL3 = ((c3 - c1) - 2 * (c2 - c1)) / 2;
    const Rat lambda = c2 - c1 - fitL3;
    const Rat chi = c1 - lambda;
    if (chi != 0)
        throw std::runtime_error("Hilbert series is inconsistent with chi(O) = 0");
    if (fitL3 != degree_L3(v))
        throw std::runtime_error("fitted L^3 disagrees with the degree formula");
    Numerics n = Numerics::for_basket(Basket{}, fitL3, lambda);
    n.validate();
    // Overdetermination check at m = 4.
    if (Rat(c[4]) != h0_exact(n, 4, {}))
        throw std::runtime_error("Hilbert series fails the m = 4 consistency check");
    return n;
}

bool cross_check_reid(const WeightedVariety& v, long m_max) {
    const Numerics n = fit_invariants(v);
    const auto c = hilbert_coeffs(v, m_max);
    for (long m = 1; m <= m_max; ++m)
        if (Rat(c[size_t(m)]) != h0_exact(n, m, {})) return false;
    return true;
}

long birational_bound(const WeightedVariety& v) {
    const Numerics n = fit_invariants(v);
    if (Rat(hilbert_coeffs(v, 1)[1]) < 2)
        throw std::logic_error("|L| is not a pencil-or-better on this variety");
    return birational_from(1, 1, Rat(1), 1, n.L3);
}

}  // namespace orbirr
