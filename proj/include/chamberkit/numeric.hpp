// numeric.hpp -- exact arithmetic types shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den = 1) { return Rat(Int(num), Int(den)); }

std::string rat_to_string(const Rat& r);
std::string int_to_string(const Int& n);

// Parses "p" or "p/q". Decimal notation is rejected (exactness contract).
Rat parse_rational(const std::string& text);

}  // namespace ck
