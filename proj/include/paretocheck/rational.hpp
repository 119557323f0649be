#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace paretocheck {

/// Exact arithmetic throughout: verdicts depend on strict-vs-weak sign
/// distinctions that floating point cannot be trusted with.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Renders canonically: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rat& value);

Rat dot(const RatVec& a, const RatVec& b);

/// Sum of entries.
Rat vec_sum(const RatVec& v);

/// True when every entry equals the first (vacuously true for empty).
bool is_constant_vec(const RatVec& v);

}  // namespace paretocheck
