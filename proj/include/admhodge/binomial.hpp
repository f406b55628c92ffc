#pragma once

#include <stdexcept>

#include "admhodge/rational.hpp"

namespace admhodge {

/// Binomial coefficient C(n, k), exact at any size. Out-of-range k yields 0
/// so that recursion terms indexed past their row vanish without special
/// casing at the call site.
inline Int binomial(long long n, long long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative row");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (long long t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t; // exact: result is C(n-k+t, t) after each step
    }
    return result;
}

} // namespace admhodge
