#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace osc {

/// Exact rational number. All arithmetic in the library is exact; there is
/// no floating point anywhere in the core.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "p/q" or "p". Throws Error(BadInput) on malformed text or q == 0.
Rat parse_rat(const std::string& text);

/// Render as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// 2^e for possibly negative e.
Rat pow2(int e);

}  // namespace osc
