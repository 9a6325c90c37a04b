#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace polystab {

// Exact coefficient field plumbing. cpp_rational keeps the canonical form
// (reduced, denominator > 0) that all serialized values rely on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int signum(const Rational& x) { return x.sign(); }

inline Rational absVal(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline double toDouble(const Rational& x) { return x.convert_to<double>(); }

// "p/q" with q > 0 and gcd(p, q) = 1; integers render as "p/1".
std::string formatRational(const Rational& x);

// Accepts "p/q" or a bare integer "p". Rejects zero denominators and junk.
std::optional<Rational> parseRational(std::string_view s);

}  // namespace polystab
