#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace minordeg {

// Counts of labelled graphs overflow 64 bits long before the sizes this
// library handles, so every count is an arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& x) { return x.str(); }

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // divides exactly: r is a running binomial
    }
    return r;
}

} // namespace minordeg
