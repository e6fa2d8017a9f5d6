#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace knightpaths {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exact binomial coefficient; zero outside 0 <= k <= n.
/// Multiplicative accumulation: each partial product is itself a binomial, so
/// every division is exact.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Binomial with an arbitrary integer top index, n(n-1)...(n-k+1)/k! for k >= 0.
/// Agrees with `binomial` for n >= 0; e.g. generalized_binomial(-1, 0) == 1.
inline BigInt generalized_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (n >= 0) return binomial(n, k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - i + 1;
        result /= i;
    }
    return result;
}

inline BigInt catalan(std::int64_t n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace knightpaths
