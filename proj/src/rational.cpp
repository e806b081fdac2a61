// src/rational.cpp — exact rational arithmetic helpers.
#include "orbirr/rational.hpp"

#include <stdexcept>

namespace orbirr {

Int rat_floor(const Rat& x) {
    Int p = numerator(x);
    Int q = denominator(x);  // canonical form: q > 0
    Int d = p / q;           // truncates toward zero
    if (p < 0 && d * q != p) --d;
    return d;
}

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

std::string rat_to_string(const Rat& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) out += "/" + denominator(x).str();
    return out;
}

Rat rat_from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    // cpp_int's string constructor rejects an explicit '+', so strip it after validation.
    auto to_int = [](std::string t) {
        if (t[0] == '+') t.erase(0, 1);
        return Int(t);
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("malformed rational: '" + s + "'");
        return Rat(to_int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational: '" + s + "'");
    Int q = to_int(den);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return Rat(to_int(num), q);
}

}  // namespace orbirr
