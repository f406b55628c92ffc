#pragma once

#include <map>
#include <vector>

#include "admhodge/rational.hpp"
#include "admhodge/strata.hpp"

namespace admhodge::z3 {

/// Coefficient of the divisor split (i, j) | (n-i, m-j) in the pushforward
/// boundary expression for lambda_1. The residue of i - j picks the branch;
/// both branches vanish on splits whose unstable side carries one point, so
/// the formula is total. Symmetric under complementing the split.
inline Rational alpha(int i, int j, int n, int m) {
    const long long T = n + m;
    const long long t = i + j;
    if (((i - j) % 3 + 3) % 3 == 0)
        return rat(2 * t * (T - t), 27 * (T - 1));
    return rat(2 * (t - 1) * (T - t - 1), 27 * (T - 1));
}

/// The pushforward of lambda_1 as a divisor combination, together with the
/// global factor picked up when the expression is pulled back to the cover
/// space. The factor is kept separate so the plain divisor sum stays
/// available without division.
struct BoundaryExpression {
    int omega_total = 0;
    int omegabar_total = 0;
    Rational pullback_factor;
    std::map<DivisorClass, Rational> coefficients;
};

inline BoundaryExpression lambda1_expression(int n, int m) {
    detail::check_totals(n, m);
    BoundaryExpression expr{n, m, Rational(3), {}};
    for (const DivisorClass& d : enumerate_divisor_classes(n, m))
        expr.coefficients.emplace(d, alpha(d.side_omega(), d.side_omegabar(), n, m));
    return expr;
}

/// Intersection of the full divisor expression with a curve class: the sum of
/// alpha(D) * (curve . D) over all divisor classes. Only the seven splittings
/// of the curve's blocks contribute, so this collapses to a signed seven-term
/// alpha sum.
inline Rational pairing_total(const CurveClass& curve) {
    const int n = curve.omega_total();
    const int m = curve.omegabar_total();
    Rational total;
    for (const DivisorClass& d : enumerate_divisor_classes(n, m))
        total += alpha(d.side_omega(), d.side_omegabar(), n, m) * pair_curve_divisor(curve, d);
    return total;
}

/// What the pairing must equal: 2/9 for curves whose pullback lands in
/// Family I, 0 for the other three families. The 2/9 is an external input
/// (an evaluation on the four-pointed cover space), not derived here.
inline Rational expected_pairing(const CurveClass& curve) {
    return classify_family(curve) == Family::I ? rat(2, 9) : Rational(0);
}

struct VerificationFailure {
    CurveClass curve;
    Rational computed;
    Rational expected;
};

/// Outcome of checking the divisor expression against every curve class of
/// one signature. failures is empty exactly when the expansion pairs
/// correctly with every curve.
struct VerificationReport {
    int omega_total = 0;
    int omegabar_total = 0;
    long total_curves = 0;
    std::map<Family, long> family_counts;
    std::vector<VerificationFailure> failures;

    bool passed() const { return failures.empty(); }
};

inline VerificationReport verify_theorem(int n, int m) {
    detail::check_totals(n, m);
    VerificationReport report{n, m, 0, {}, {}};
    for (const CurveClass& curve : enumerate_curve_classes(n, m)) {
        ++report.total_curves;
        ++report.family_counts[classify_family(curve)];
        Rational computed = pairing_total(curve);
        Rational expected = expected_pairing(curve);
        if (computed != expected)
            report.failures.push_back({curve, computed, expected});
    }
    return report;
}

} // namespace admhodge::z3
