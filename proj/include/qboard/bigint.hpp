/*
 * Copyright 2026 The qboard Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace qboard {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline BigInt big_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt big_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// falling factorial x(x-1)...(x-k+1), defined for any integer x
inline BigInt big_falling(long x, long k) {
    BigInt r = 1;
    for (long i = 0; i < k; ++i) r *= (x - i);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace qboard
