#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace nb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p", or "p/q" (q > 0 after normalization). Throws ParseError.
Rat parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string format_rational(const Rat& value);

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

} // namespace nb
