#ifndef JACKPS_RATIONAL_HPP
#define JACKPS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "jackps/errors.hpp"

namespace jackps {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar.  Always stored reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optional sign, arbitrary precision).  Anything
/// else, including decimal points, is rejected.
Rat parse_rational(const std::string& text);

/// Renders as "p" or "p/q", matching parse_rational.
std::string rational_str(const Rat& value);

BigInt factorial(int n);

/// Binomial coefficient with rational (possibly non-integer) top argument:
/// C(c, m) = c (c-1) ... (c-m+1) / m!.
Rat binomial_rat(const Rat& c, int m);

/// C(n, k) for integer arguments, 0 if k < 0 or k > n.
BigInt binomial_int(int n, int k);

} // namespace jackps

#endif
