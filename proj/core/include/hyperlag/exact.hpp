#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_binomial(long long n, long long k);
BigInt big_pow(const BigInt& base, unsigned exponent);

/// λ([t]^{(r)}) = C(t, r) / t^r exactly; zero when t < r.
Rational complete_lagrangian(int t, int r);

double to_double(const Rational& q);

}  // namespace hyperlag
