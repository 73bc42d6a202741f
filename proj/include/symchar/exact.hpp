#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symchar {

// All arithmetic in this library is exact: arbitrary-precision integers and
// reduced rationals. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);

// "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string to_string(const Rat& v);

// num/den as a reduced rational; den may be negative but not zero. The
// two-argument Rat constructor itself rejects negative denominators, so all
// ratio construction goes through here.
Rat make_rat(const Int& num, const Int& den);

// n! for n >= 0.
Int factorial(int n);

// Binomial coefficient C(a, b) for arbitrary integer a, via the falling
// factorial a(a-1)...(a-b+1)/b!. Returns 0 for b < 0, 1 for b = 0.
Int binomial(const Int& a, long long b);

} // namespace symchar
