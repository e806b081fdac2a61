// src/reid.cpp — orbifold Riemann-Roch evaluation and the linear-form bookkeeping.
#include "orbirr/reid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbirr {

namespace {

void require_point(const OrbifoldPoint& pt) {
    if (!validate_point(pt.b, pt.r))
        throw std::invalid_argument("invalid orbifold point (" + std::to_string(pt.b) + "," +
                                    std::to_string(pt.r) + ")");
}

}  // namespace

Rat contribution(const OrbifoldPoint& pt, long i) {
    require_point(pt);
    if (i < 0 || i >= pt.r)
        throw std::invalid_argument("local index " + std::to_string(i) +
                                    " out of range for r = " + std::to_string(pt.r));
    const long r = pt.r;
    Rat c = Rat(-i * (r * r - 1), 12 * r);
    for (long j = 0; j < i; ++j) {
        long jb = (j * pt.b) % r;
        c += Rat(jb * (r - jb), 2 * r);
    }
    return c;
}

std::vector<Rat> contribution_row(const OrbifoldPoint& pt) {
    require_point(pt);
    std::vector<Rat> row;
    row.reserve(pt.r);
    for (long i = 0; i < pt.r; ++i) row.push_back(contribution(pt, i));
    return row;
}

Rat periodic_contribution_sum(const OrbifoldPoint& pt) {
    Rat s = 0;
    for (const Rat& c : contribution_row(pt)) s += c;
    return s;
}

std::vector<std::pair<OrbifoldPoint, std::vector<Rat>>> table_a() {
    std::vector<std::pair<OrbifoldPoint, std::vector<Rat>>> rows;
    for (long iX : {2L, 3L, 4L, 5L, 6L, 8L, 10L, 12L})
        for (const auto& pt : admissible_point_types(iX))
            if (std::find_if(rows.begin(), rows.end(),
                             [&](const auto& row) { return row.first == pt; }) == rows.end())
                rows.push_back({pt, contribution_row(pt)});
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return rows;
}

Rat row_min(const OrbifoldPoint& pt) {
    auto row = contribution_row(pt);
    return *std::min_element(row.begin(), row.end());
}

Rat min_contribution(const OrbifoldPoint& pt, long stride) {
    require_point(pt);
    // Reachable indices form the subgroup generated by gcd(stride, r); stride ≡ 0 gives
    // gcd = r, i.e. only index 0.
    long g = std::gcd(((stride % pt.r) + pt.r) % pt.r, pt.r);
    Rat best = contribution(pt, 0);
    for (long i = g % pt.r; i != 0; i = (i + g) % pt.r) best = std::min(best, contribution(pt, i));
    return best;
}

Rat min_contribution_mode(const OrbifoldPoint& pt, long stride, MinMode mode) {
    if (mode == MinMode::sharp) return min_contribution(pt, stride);
    require_point(pt);
    long red = ((stride % pt.r) + pt.r) % pt.r;
    return red == 0 ? Rat(0) : row_min(pt);
}

Rat shift_set_sum(const OrbifoldPoint& pt, long k, const std::vector<long>& shifts) {
    require_point(pt);
    const long r = pt.r;
    std::optional<Rat> best;
    for (long s = 0; s < r; ++s) {
        Rat total = 0;
        for (long t : shifts) {
            long i = ((k * s + t) % r + r) % r;
            total += contribution(pt, i);
        }
        if (!best || total < *best) best = total;
    }
    return *best;
}

Numerics Numerics::for_basket(const Basket& basket, const Rat& L3, const Rat& lambda) {
    return Numerics{basket, chi_of(basket), L3, lambda};
}

void Numerics::validate() const {
    if (chi != chi_of(basket))
        throw std::invalid_argument("chi does not match the basket");
    const long iX = cartier_index(basket);
    auto positive_integer = [&](const Rat& x) {
        Rat scaled = Rat(iX) * x;
        return scaled > 0 && denominator(scaled) == 1;
    };
    if (!positive_integer(L3))
        throw std::invalid_argument("i(X) * L^3 must be a positive integer");
    if (!positive_integer(lambda))
        throw std::invalid_argument("i(X) * lambda must be a positive integer");
    if (lambda < L3 / 6)
        throw std::invalid_argument("lambda < L^3/6 contradicts Miyaoka's bound on L·c2");
}

namespace {

Rat polynomial_part(const Rat& chi, const Rat& L3, const Rat& lambda, long m) {
    return chi + Rat(m * m * m - m, 6) * L3 + Rat(m) * lambda;
}

}  // namespace

Rat h0_exact(const Numerics& n, long m, const std::vector<long>& residues) {
    if (m < 1) throw std::invalid_argument("h0_exact needs m >= 1");
    auto points = n.basket.expanded();
    if (points.size() != residues.size())
        throw std::invalid_argument("residue list does not match the basket size");
    Rat h = polynomial_part(n.chi, n.L3, n.lambda, m);
    for (size_t q = 0; q < points.size(); ++q) h += contribution(points[q], residues[q]);
    return h;
}

Rat MarginForm::eval(const Rat& L3, const Rat& lambda) const {
    return constant + L3_coeff * L3 + lambda_coeff * lambda;
}

std::optional<Rat> MarginForm::min_over_region(long iX) const {
    if (iX < 1) throw std::invalid_argument("index must be positive");
    if (lambda_coeff < 0 || L3_coeff + lambda_coeff / 6 < 0) return std::nullopt;
    Rat corner = eval(Rat(1, iX), Rat(1, iX));
    Rat kink = eval(Rat(6, iX), Rat(1, iX));
    return std::min(corner, kink);
}

MarginForm lambda_form(long k) {
    return {Rat(0), Rat(k * k * k - k, 6), Rat(k)};
}

MarginForm h0_bound_form(const Rat& chi, const Basket& basket, long m,
                         const std::vector<ResidueConstraint>& residues, MinMode mode) {
    if (m < 1) throw std::invalid_argument("h0_bound_form needs m >= 1");
    auto points = basket.expanded();
    if (points.size() != residues.size())
        throw std::invalid_argument("residue list does not match the basket size");
    Rat constant = chi;
    for (size_t q = 0; q < points.size(); ++q) {
        const auto& pt = points[q];
        const auto& rc = residues[q];
        if (rc.is_fixed)
            constant += contribution(pt, ((m * rc.s) % pt.r + pt.r) % pt.r);
        else
            constant += min_contribution_mode(pt, m, mode);
    }
    return {constant, Rat(m * m * m - m, 6), Rat(m)};
}

Rat h0_lower_bound(const Numerics& n, long m, const std::vector<ResidueConstraint>& residues,
                   MinMode mode) {
    return h0_bound_form(n.chi, n.basket, m, residues, mode).eval(n.L3, n.lambda);
}

Rat averaging_floor(const Numerics& n, long k) {
    if (k < 1) throw std::invalid_argument("averaging_floor needs k >= 1");
    return lambda_form(k).eval(n.L3, n.lambda);
}

}  // namespace orbirr
