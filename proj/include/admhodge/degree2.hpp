#pragma once

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "admhodge/rational.hpp"

namespace admhodge::z2 {

/// Divisor coefficient for lambda_1 over degree-2 cover spaces with N branch
/// points and i of them on the left component. The parity of i picks the
/// branch; odd splits put a ramified node between the components. Defined for
/// all 0 <= i <= N and vanishing outside the stable range.
inline Rational lambda1_alpha(int i, int N) {
    if (i % 2 == 0)
        return rat(static_cast<long long>(i) * (N - i), 8LL * (N - 1));
    return rat((i - 1LL) * (N - i - 1), 8LL * (N - 1));
}

/// Symmetrized boundary divisor of a degree-2 cover space: i branch points on
/// one side, N in total. The stored side is min(i, N - i).
class DivisorClass {
public:
    DivisorClass(int i, int total) : i_(i), total_(total) {
        if (total < 4 || total % 2 != 0)
            throw std::invalid_argument("divisor class: total branch count must be even and at least 4");
        if (i < 2 || i > total - 2)
            throw std::invalid_argument("divisor class: each side needs at least two branch points");
        if (total - i < i_)
            i_ = total - i;
    }

    int side_count() const { return i_; }
    int total() const { return total_; }
    int complement() const { return total_ - i_; }

    friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
    int i_;
    int total_;
};

inline std::vector<DivisorClass> enumerate_divisor_classes(int total) {
    if (total < 4 || total % 2 != 0)
        throw std::invalid_argument("divisor classes: total branch count must be even and at least 4");
    std::vector<DivisorClass> out;
    for (int i = 2; 2 * i <= total; ++i)
        out.emplace_back(i, total);
    return out;
}

/// Symmetrized codimension-2 stratum: branch counts on the left, middle and
/// right components of a two-node chain. Canonical orientation is the
/// lexicographically smaller of (left, middle, right) and its mirror.
class Codim2Class {
public:
    Codim2Class(int left, int middle, int right) : c_{left, middle, right} {
        if (left < 2 || right < 2 || middle < 1)
            throw std::invalid_argument("codim-2 class: components need 2, 1, 2 branch points at least");
        if ((left + middle + right) % 2 != 0)
            throw std::invalid_argument("codim-2 class: total branch count must be even");
        std::array<int, 3> mirror{right, middle, left};
        if (mirror < c_)
            c_ = mirror;
    }

    int left() const { return c_[0]; }
    int middle() const { return c_[1]; }
    int right() const { return c_[2]; }
    int total() const { return c_[0] + c_[1] + c_[2]; }

    friend constexpr auto operator<=>(const Codim2Class&, const Codim2Class&) = default;

private:
    std::array<int, 3> c_;
};

inline std::vector<Codim2Class> enumerate_codim2_classes(int total) {
    if (total < 6 || total % 2 != 0)
        throw std::invalid_argument("codim-2 classes: total branch count must be even and at least 6");
    std::vector<Codim2Class> out;
    for (int i1 = 2; i1 <= total - 3; ++i1) {
        for (int i2 = 1; i1 + i2 <= total - 2; ++i2) {
            const int i3 = total - i1 - i2;
            if (std::array{i1, i2, i3} > std::array{i3, i2, i1})
                continue; // mirror image is the canonical orientation
            out.emplace_back(i1, i2, i3);
        }
    }
    return out;
}

namespace detail {

inline void check_triple(int i1, int i2, int i3) {
    if (i1 < 2 || i3 < 2 || i2 < 1 || (i1 + i2 + i3) % 2 != 0)
        throw std::invalid_argument("codim-2 coefficient: invalid component counts");
}

} // namespace detail

/// Coefficient of a codimension-2 stratum in the lambda_2 expansion, built by
/// composing two lambda_1 divisor coefficients: once for splitting off the
/// outer component, once for the residual divisor inside it. Ramified nodes
/// (odd side counts) shift the inner split by the identity-marked point they
/// introduce, which is where the +1 offsets come from. Works on either
/// orientation of the triple.
inline Rational lambda2_composed(int i1, int i2, int i3) {
    detail::check_triple(i1, i2, i3);
    const int N = i1 + i2 + i3;
    const bool o1 = i1 % 2 != 0;
    const bool o2 = i2 % 2 != 0;
    const bool o3 = i3 % 2 != 0;
    if (!o1 && !o2 && !o3)
        return 2 * (lambda1_alpha(i1, N) * lambda1_alpha(i2, i2 + i3) +
                    lambda1_alpha(i3, N) * lambda1_alpha(i2, i1 + i2));
    if (o1 && !o2 && o3)
        return 2 * (lambda1_alpha(i1, N) * lambda1_alpha(i2 + 1, i2 + i3 + 1) +
                    lambda1_alpha(i3, N) * lambda1_alpha(i2 + 1, i1 + i2 + 1));
    if (o1 && o2 && !o3)
        return 2 * (lambda1_alpha(i1, N) * lambda1_alpha(i2 + 1, i2 + i3 + 1) +
                    lambda1_alpha(i3, N) * lambda1_alpha(i2, i1 + i2));
    // even, odd, odd: mirror of the previous case
    return 2 * (lambda1_alpha(i3, N) * lambda1_alpha(i2 + 1, i2 + i1 + 1) +
                lambda1_alpha(i1, N) * lambda1_alpha(i2, i3 + i2));
}

inline Rational lambda2_composed(const Codim2Class& c) {
    return lambda2_composed(c.left(), c.middle(), c.right());
}

/// Which rendering of the closed-form coefficient to evaluate. The printed
/// all-even case drops a 2*i2^2 term from its numerator and disagrees with
/// the composed form on every all-even class; corrected restores the term.
/// The two odd cases are identical in both modes.
enum class ClosedForm { printed, corrected };

inline Rational lambda2_closed(int i1, int i2, int i3, ClosedForm form) {
    detail::check_triple(i1, i2, i3);
    const long long a = i1, b = i2, c = i3;
    const long long N = a + b + c;
    const bool o1 = i1 % 2 != 0;
    const bool o2 = i2 % 2 != 0;
    const bool o3 = i3 % 2 != 0;
    if (!o1 && !o2 && !o3) {
        long long inner = 2 * a * b + 2 * a * c + 2 * b * c - a - 2 * b - c;
        if (form == ClosedForm::corrected)
            inner += 2 * b * b;
        return rat(Int(a * b * c) * inner, Int(32 * (N - 1)) * ((a + b - 1) * (b + c - 1)));
    }
    if (o1 && !o2 && o3) {
        Int numer = Int((a - 1) * b * (c - 1)) * ((b + c - 1) * (a + b) + (a + b - 1) * (b + c));
        return rat(numer, Int(32 * (N - 1)) * ((a + b) * (b + c)));
    }
    if (o1 && o2 && !o3) {
        Int numer = Int((a - 1) * (b + c - 1)) * ((b + 1) * c * (a + b - 1)) +
                    Int(c * (a + b)) * ((b - 1) * (a - 1) * (b + c));
        return rat(numer, Int(32 * (N - 1)) * ((b + c) * (a + b - 1)));
    }
    // even, odd, odd: mirror of the previous case
    return lambda2_closed(i3, i2, i1, form);
}

inline Rational lambda2_closed(const Codim2Class& c, ClosedForm form) {
    return lambda2_closed(c.left(), c.middle(), c.right(), form);
}

/// lambda_2 as a combination of codimension-2 strata, with composed-form
/// coefficients. Published statements of this expansion disagree on an
/// overall prefactor (1 versus 2) multiplying the whole sum; the candidates
/// are carried as metadata and the alpha values are never rescaled.
struct Lambda2Expression {
    int total_branch_points = 0;
    std::map<Codim2Class, Rational> coefficients;
    std::array<int, 2> prefactor_candidates{1, 2};
};

inline Lambda2Expression lambda2_expression(int total) {
    Lambda2Expression expr;
    expr.total_branch_points = total;
    for (const Codim2Class& c : enumerate_codim2_classes(total))
        expr.coefficients.emplace(c, lambda2_composed(c));
    return expr;
}

struct FormMismatch {
    Codim2Class cls;
    Rational composed;
    Rational closed;
};

/// Every class with total branch count <= max_total where the chosen closed
/// form disagrees with the composed form. With the printed form this is
/// exactly the all-even classes; with the corrected form it is empty.
inline std::vector<FormMismatch> check_forms(int max_total, ClosedForm form = ClosedForm::printed) {
    if (max_total < 6)
        throw std::invalid_argument("check_forms: max_total must be at least 6");
    std::vector<FormMismatch> out;
    for (int N = 6; N <= max_total; N += 2) {
        for (const Codim2Class& c : enumerate_codim2_classes(N)) {
            Rational composed = lambda2_composed(c);
            Rational closed = lambda2_closed(c, form);
            if (composed != closed)
                out.push_back({c, composed, closed});
        }
    }
    return out;
}

} // namespace admhodge::z2
