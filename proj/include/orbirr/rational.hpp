// include/orbirr/rational.hpp — exact rational arithmetic helpers shared by all modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace orbirr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Largest integer <= x.
Int rat_floor(const Rat& x);

// Smallest integer >= x.
Int rat_ceil(const Rat& x);

// Serialize as "p/q", or "n" when the denominator is 1 (sign carried by the numerator).
std::string rat_to_string(const Rat& x);

// Parse "p/q" or "n" (optional leading sign). Throws std::invalid_argument on malformed
// input or a zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace orbirr
