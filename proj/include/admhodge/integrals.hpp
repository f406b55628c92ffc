#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "admhodge/binomial.hpp"
#include "admhodge/rational.hpp"

namespace admhodge::z3 {

/// Marked-point signature (n | m) of an admissible cover space carrying a
/// top Hodge self-intersection. Valid when n - m is divisible by 3 and the
/// space has at least dimension zero (n + m >= 3).
struct IntegralKey {
    int omega = 0;
    int omegabar = 0;

    IntegralKey(int n, int m) : omega(n), omegabar(m) {
        if (n < 0 || m < 0 || ((n - m) % 3) != 0 || n + m < 3)
            throw std::invalid_argument("integral key: need n,m >= 0, n - m divisible by 3, n + m >= 3");
    }

    int total() const { return omega + omegabar; }

    friend constexpr auto operator<=>(const IntegralKey&, const IntegralKey&) = default;
};

/// A summand of the recursion enters only when the split it indexes bounds a
/// stable divisor whose residue feeds the nonvanishing coefficient branch.
inline bool term_admissible(int i, int j, int /*n*/, int /*m*/) {
    return ((i - j) % 3 + 3) % 3 == 2 && i + j >= 2;
}

/// One recorded summand of the recursion at (n | m):
///   coefficient * combinatorial_factor * H(left_key) * H(right_key)
/// with coefficient = 2(i+j-1)(T-i-j-1) / (9(T-1)) and combinatorial factor
/// C(T-3, i+j-2) C(n, i) C(m, j). Admissible terms with vanishing coefficient
/// are kept, with term_value 0; their formal sub-keys may fall outside the
/// valid key range and are stored as raw pairs.
struct TermTrace {
    int i = 0;
    int j = 0;
    Rational coefficient;
    Int combinatorial_factor;
    std::pair<int, int> left_key;  // (i+1, j)
    std::pair<int, int> right_key; // (n-i, m-j+1)
    Rational term_value;           // without the outer factor 3
};

/// Memoized evaluator for the Hodge integral family. Values depend only on
/// the unordered pair {n, m}: the integral is symmetric in the two monodromy
/// labels, so the store is keyed on (max, min) and the recursion always runs
/// in that orientation.
///
/// Base cases, read off the smallest spaces: every key with n + m = 3 gives
/// 1/3, and (2 | 2) gives 2/9. The recursion proper applies from n + m >= 5
/// onward; applied blindly at (2 | 2) it would give 2/81 instead, so the
/// (2 | 2) value is pinned as a base case.
class IntegralCache {
public:
    const Rational& value(const IntegralKey& key) {
        int n = key.omega;
        int m = key.omegabar;
        if (n < m)
            std::swap(n, m);
        auto it = memo_.find({n, m});
        if (it != memo_.end())
            return it->second;
        return memo_.emplace(std::pair(n, m), evaluate(n, m)).first->second;
    }

    /// Per-term audit of the recursion at key; requires n + m >= 5 (base-case
    /// keys have no terms). Three times the sum of term values equals the
    /// integral.
    std::vector<TermTrace> trace(const IntegralKey& key) {
        if (key.total() < 5)
            throw std::invalid_argument("trace: base-case key has no recursion terms");
        const int n = key.omega;
        const int m = key.omegabar;
        const long long T = key.total();
        std::vector<TermTrace> terms;
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= m; ++j) {
                if (!term_admissible(i, j, n, m))
                    continue;
                TermTrace t;
                t.i = i;
                t.j = j;
                t.coefficient = rat(2 * (i + j - 1LL) * (T - i - j - 1), 9 * (T - 1));
                t.combinatorial_factor = binomial(T - 3, i + j - 2) * binomial(n, i) * binomial(m, j);
                t.left_key = {i + 1, j};
                t.right_key = {n - i, m - j + 1};
                if (t.coefficient != 0)
                    t.term_value = t.coefficient * Rational(t.combinatorial_factor) *
                                   value(IntegralKey(i + 1, j)) * value(IntegralKey(n - i, m - j + 1));
                terms.push_back(std::move(t));
            }
        }
        return terms;
    }

    std::size_t size() const { return memo_.size(); }

private:
    Rational evaluate(int n, int m) { // n >= m
        if (n + m == 3)
            return rat(1, 3);
        if (n == 2 && m == 2)
            return rat(2, 9);
        const long long T = n + m;
        Rational sum;
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= m; ++j) {
                if (!term_admissible(i, j, n, m))
                    continue;
                const long long weight = 2 * (i + j - 1LL) * (T - i - j - 1);
                if (weight == 0)
                    continue;
                Rational coefficient = rat(weight, 9 * (T - 1));
                Int factor = binomial(T - 3, i + j - 2) * binomial(n, i) * binomial(m, j);
                sum += coefficient * Rational(factor) *
                       value(IntegralKey(i + 1, j)) * value(IntegralKey(n - i, m - j + 1));
            }
        }
        return 3 * sum;
    }

    std::map<std::pair<int, int>, Rational> memo_;
};

inline Rational hodge_integral(const IntegralKey& key) {
    IntegralCache cache;
    return cache.value(key);
}

inline std::vector<TermTrace> trace_terms(const IntegralKey& key) {
    IntegralCache cache;
    return cache.trace(key);
}

/// All values with n >= m and n + m <= max_total, ordered by total then by
/// descending n. Symmetric keys are left out, matching how the family is
/// usually tabulated.
inline std::vector<std::pair<IntegralKey, Rational>> integral_table(int max_total) {
    if (max_total < 3)
        throw std::invalid_argument("integral_table: max_total must be at least 3");
    IntegralCache cache;
    std::vector<std::pair<IntegralKey, Rational>> rows;
    for (int T = 3; T <= max_total; ++T) {
        for (int n = T; 2 * n >= T; --n) {
            const int m = T - n;
            if (((n - m) % 3) != 0)
                continue;
            IntegralKey key(n, m);
            rows.emplace_back(key, cache.value(key));
        }
    }
    return rows;
}

} // namespace admhodge::z3
