// src/basket.cpp — basket normalization, serialization, and constrained enumeration.
#include "orbirr/basket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace orbirr {

bool validate_point(long b, long r) {
    return r >= 2 && b >= 1 && 2 * b <= r && std::gcd(b, r) == 1;
}

namespace {

std::vector<std::pair<OrbifoldPoint, long>> canonicalize(
    const std::vector<std::pair<OrbifoldPoint, long>>& raw) {
    std::map<std::pair<long, long>, long> merged;  // (r,b) -> multiplicity
    for (const auto& [pt, mult] : raw) {
        if (!validate_point(pt.b, pt.r))
            throw std::invalid_argument("invalid orbifold point (" + std::to_string(pt.b) + "," +
                                        std::to_string(pt.r) + ")");
        if (mult < 1) throw std::invalid_argument("basket multiplicity must be positive");
        merged[{pt.r, pt.b}] += mult;
    }
    std::vector<std::pair<OrbifoldPoint, long>> out;
    out.reserve(merged.size());
    for (const auto& [key, mult] : merged) out.push_back({{key.second, key.first}, mult});
    return out;
}

}  // namespace

Basket::Basket(const std::vector<OrbifoldPoint>& points) {
    std::vector<std::pair<OrbifoldPoint, long>> raw;
    raw.reserve(points.size());
    for (const auto& pt : points) raw.push_back({pt, 1});
    entries_ = canonicalize(raw);
}

Basket::Basket(const std::vector<std::pair<OrbifoldPoint, long>>& entries) {
    entries_ = canonicalize(entries);
}

Basket Basket::from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "{}")) return Basket{};

    static const std::regex entry_re(R"(^(?:(\d+)x)?\((\d+),(\d+)\)$)");
    std::vector<std::pair<OrbifoldPoint, long>> raw;
    for (const auto& tok : tokens) {
        std::smatch m;
        if (!std::regex_match(tok, m, entry_re))
            throw std::invalid_argument("malformed basket entry '" + tok + "'");
        long mult = m[1].matched ? std::stol(m[1].str()) : 1;
        raw.push_back({{std::stol(m[2].str()), std::stol(m[3].str())}, mult});
    }
    return Basket{raw};
}

std::vector<OrbifoldPoint> Basket::expanded() const {
    std::vector<OrbifoldPoint> out;
    for (const auto& [pt, mult] : entries_)
        for (long i = 0; i < mult; ++i) out.push_back(pt);
    return out;
}

long Basket::point_count() const {
    long n = 0;
    for (const auto& [pt, mult] : entries_) n += mult;
    return n;
}

std::string Basket::to_text() const {
    if (entries_.empty()) return "{}";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pt, mult] : entries_) {
        if (!first) out << ' ';
        first = false;
        out << mult << "x(" << pt.b << "," << pt.r << ")";
    }
    return out.str();
}

bool operator<(const Basket& x, const Basket& y) {
    auto key = [](const std::pair<OrbifoldPoint, long>& e) {
        return std::tuple{e.first.r, e.first.b, e.second};
    };
    return std::lexicographical_compare(
        x.entries_.begin(), x.entries_.end(), y.entries_.begin(), y.entries_.end(),
        [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

Rat chi_of(const Basket& basket) {
    Rat chi = 0;
    for (const auto& [pt, mult] : basket.entries())
        chi += Rat(mult) * Rat(pt.r * pt.r - 1, 24 * pt.r);
    return chi;
}

long cartier_index(const Basket& basket) {
    long l = 1;
    for (const auto& [pt, mult] : basket.entries()) l = std::lcm(l, pt.r);
    return l;
}

std::vector<OrbifoldPoint> admissible_point_types(long iX) {
    std::vector<OrbifoldPoint> types;
    for (long r = 2; r <= iX; ++r) {
        if (iX % r != 0) continue;
        for (long b = 1; 2 * b <= r; ++b)
            if (std::gcd(b, r) == 1) types.push_back({b, r});
    }
    std::sort(types.begin(), types.end());
    return types;
}

bool admissible_pair(long chi, long iX) {
    if (chi == 0) return iX == 1;
    if (chi < 1 || chi > 4) return false;
    if (iX == 2 || iX == 3 || iX == 4 || iX == 6) return true;
    if (iX == 5 || iX == 8 || iX == 10 || iX == 12) return chi == 1;
    return false;
}

std::vector<long> allowed_chis(long iX) {
    if (iX == 2 || iX == 3 || iX == 4 || iX == 6) return {1, 2, 3, 4};
    if (iX == 5 || iX == 8 || iX == 10 || iX == 12) return {1};
    throw std::invalid_argument("index must be one of 2,3,4,5,6,8,10,12");
}

std::vector<Basket> arithmetic_baskets(long chi, long iX) {
    if (chi == 0) return {Basket{}};
    const auto types = admissible_point_types(iX);
    // Work with the integral weights iX*(r^2-1)/r; the chi constraint becomes an exact
    // subset-sum to 24*iX*chi.
    std::vector<long> weight(types.size());
    for (size_t i = 0; i < types.size(); ++i) {
        long r = types[i].r;
        weight[i] = iX / r * (r * r - 1);
    }
    const long target = 24 * iX * chi;

    std::vector<Basket> out;
    std::vector<std::pair<OrbifoldPoint, long>> stack;
    auto dfs = [&](auto&& self, size_t idx, long remaining) -> void {
        if (idx == types.size()) {
            if (remaining != 0) return;
            Basket b{stack};
            if (cartier_index(b) == iX) out.push_back(b);
            return;
        }
        self(self, idx + 1, remaining);  // multiplicity 0
        for (long mult = 1; mult * weight[idx] <= remaining; ++mult) {
            stack.push_back({types[idx], mult});
            self(self, idx + 1, remaining - mult * weight[idx]);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, target);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Basket> classified_families(long iX) {
    // The global index 5, 8, 10, 12 cases carry a complete classification of the possible
    // singularity data (Morrison); only the b-parameters of the highest-index points vary.
    std::vector<Basket> out;
    auto add = [&](std::vector<std::pair<OrbifoldPoint, long>> entries) {
        out.push_back(Basket{entries});
    };
    switch (iX) {
        case 5:
            // five points of index 5
            for (long k = 0; k <= 5; ++k) {  // k points with b=2
                std::vector<std::pair<OrbifoldPoint, long>> e;
                if (5 - k > 0) e.push_back({{1, 5}, 5 - k});
                if (k > 0) e.push_back({{2, 5}, k});
                add(e);
            }
            break;
        case 8:
            // 3x(1,2) + (1,4) + two points of index 8
            for (long k = 0; k <= 2; ++k) {  // k points with b=3
                std::vector<std::pair<OrbifoldPoint, long>> e{{{1, 2}, 3}, {{1, 4}, 1}};
                if (2 - k > 0) e.push_back({{1, 8}, 2 - k});
                if (k > 0) e.push_back({{3, 8}, k});
                add(e);
            }
            break;
        case 10:
            // 3x(1,2) + two points of index 5 + one point of index 10
            for (long k = 0; k <= 2; ++k)
                for (long c : {1L, 3L}) {
                    std::vector<std::pair<OrbifoldPoint, long>> e{{{1, 2}, 3}};
                    if (2 - k > 0) e.push_back({{1, 5}, 2 - k});
                    if (k > 0) e.push_back({{2, 5}, k});
                    e.push_back({{c, 10}, 1});
                    add(e);
                }
            break;
        case 12:
            // 2x(1,2) + 2x(1,3) + (1,4) + one point of index 12
            for (long b : {1L, 5L})
                add({{{1, 2}, 2}, {{1, 3}, 2}, {{1, 4}, 1}, {{b, 12}, 1}});
            break;
        default:
            throw std::invalid_argument("no classification data for index " + std::to_string(iX));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Basket> enumerate_baskets(long chi, long iX) {
    if (!admissible_pair(chi, iX))
        throw std::invalid_argument("inadmissible (chi, index) pair (" + std::to_string(chi) +
                                    ", " + std::to_string(iX) + ")");
    if (chi == 0) return {Basket{}};
    auto arith = arithmetic_baskets(chi, iX);
    if (iX == 5 || iX == 8 || iX == 10 || iX == 12) {
        // The numerical constraints alone admit a handful of extra multisets (one, at index
        // 12); the classification cuts the list down to the realizable singularity data.
        auto families = classified_families(iX);
        for (const auto& fam : families)
            if (!std::binary_search(arith.begin(), arith.end(), fam))
                throw std::logic_error("classified family fails the numerical constraints");
        return families;
    }
    return arith;
}

}  // namespace orbirr
