#include "hyperlag/exact.hpp"

#include <stdexcept>

namespace hyperlag {

BigInt big_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

BigInt big_pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

Rational complete_lagrangian(int t, int r) {
    if (r < 1 || t < 1) throw std::invalid_argument("complete_lagrangian: requires r >= 1 and t >= 1");
    if (t < r) return Rational(0);
    return Rational(big_binomial(t, r), big_pow(BigInt(t), static_cast<unsigned>(r)));
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace hyperlag
