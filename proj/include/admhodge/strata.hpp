#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "admhodge/rational.hpp"

namespace admhodge::z3 {

namespace detail {

/// Shared validity check for a (n | m) marked-point signature. The residue
/// condition makes the total monodromy trivial; the size bound only rules out
/// signatures too small to carry any stratum at all.
inline void check_totals(int n, int m) {
    if (n < 0 || m < 0 || ((n - m) % 3) != 0 || n + m < 3)
        throw std::invalid_argument("invalid (n|m) signature: need n,m >= 0, n - m divisible by 3, n + m >= 3");
}

} // namespace detail

/// Node monodromy residue: (omega count - omegabar count) mod 3. Residue 0 is
/// the identity monodromy. Which of the nontrivial residues 1, 2 is displayed
/// as w versus wbar is a naming convention only; no computed value depends on
/// the choice.
struct Residue {
    int value = 0;

    friend constexpr auto operator<=>(const Residue&, const Residue&) = default;
};

inline std::string residue_symbol(Residue r) {
    switch (r.value) {
    case 0: return "e";
    case 1: return "w";
    default: return "wbar";
    }
}

/// Marked points carried by one of the four branches hanging off the
/// four-valent component of a one-dimensional stratum.
struct Block {
    int omega = 0;
    int omegabar = 0;

    constexpr int total() const { return omega + omegabar; }

    friend constexpr auto operator<=>(const Block&, const Block&) = default;
};

inline Residue node_residue(const Block& b) {
    return Residue{((b.omega - b.omegabar) % 3 + 3) % 3};
}

/// The four node-monodromy patterns a one-dimensional stratum can induce,
/// keyed by the multiset of its four node residues:
///   I   {1,1,2,2}   II  {1,1,1,0} or {2,2,2,0}
///   III {1,2,0,0}   IV  {0,0,0,0}
enum class Family { I, II, III, IV };

inline std::string family_name(Family f) {
    switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    default: return "IV";
    }
}

/// A symmetrized one-dimensional boundary stratum, recorded as the unordered
/// multiset of the four blocks attached to its four-valent component.
/// Internal tree edges contribute nothing to any pairing computed here, so
/// block contents are the entire state.
class CurveClass {
public:
    explicit CurveClass(std::array<Block, 4> blocks) : blocks_(blocks) {
        std::sort(blocks_.begin(), blocks_.end());
        for (const Block& b : blocks_) {
            if (b.omega < 0 || b.omegabar < 0 || b.total() < 1)
                throw std::invalid_argument("curve class: each block needs at least one marked point");
            n_ += b.omega;
            m_ += b.omegabar;
        }
        detail::check_totals(n_, m_);
        if (n_ + m_ < 4)
            throw std::invalid_argument("curve class: needs at least four marked points");
    }

    const std::array<Block, 4>& blocks() const { return blocks_; }
    int omega_total() const { return n_; }
    int omegabar_total() const { return m_; }
    int total() const { return n_ + m_; }

    friend auto operator<=>(const CurveClass& a, const CurveClass& b) { return a.blocks_ <=> b.blocks_; }
    friend bool operator==(const CurveClass& a, const CurveClass& b) { return a.blocks_ == b.blocks_; }

private:
    std::array<Block, 4> blocks_; // sorted: canonical multiset representative
    int n_ = 0;
    int m_ = 0;
};

/// A symmetrized boundary divisor: a two-sided split of the marked points,
/// recorded by the (omega, omegabar) counts of one side. The divisor and its
/// complement are the same class; the stored side is the lexicographically
/// smaller of the two. Both sides must be stable (two marks plus the node).
class DivisorClass {
public:
    DivisorClass(int i, int j, int n, int m) : i_(i), j_(j), n_(n), m_(m) {
        detail::check_totals(n, m);
        if (i < 0 || j < 0 || i > n || j > m)
            throw std::invalid_argument("divisor class: side counts out of range");
        if (i + j < 2 || (n - i) + (m - j) < 2)
            throw std::invalid_argument("divisor class: both sides need at least two marked points");
        if (std::pair(n - i, m - j) < std::pair(i_, j_)) {
            i_ = n - i;
            j_ = m - j;
        }
    }

    int side_omega() const { return i_; }
    int side_omegabar() const { return j_; }
    int omega_total() const { return n_; }
    int omegabar_total() const { return m_; }
    std::pair<int, int> complement() const { return {n_ - i_, m_ - j_}; }

    friend constexpr auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
    int i_;
    int j_;
    int n_;
    int m_;
};

inline Family classify_family(const CurveClass& curve) {
    std::array<int, 4> r{};
    for (std::size_t k = 0; k < 4; ++k)
        r[k] = node_residue(curve.blocks()[k]).value;
    std::sort(r.begin(), r.end());
    if (r == std::array{0, 0, 0, 0}) return Family::IV;
    if (r == std::array{0, 0, 1, 2}) return Family::III;
    if (r == std::array{0, 1, 1, 1} || r == std::array{0, 2, 2, 2}) return Family::II;
    if (r == std::array{1, 1, 2, 2}) return Family::I;
    // residues of a valid curve sum to 0 mod 3, so one of the above matched
    throw std::logic_error("classify_family: residue multiset does not sum to 0 mod 3");
}

/// Every curve class with the given totals, each multiset exactly once, in
/// lexicographic order of the sorted block tuple.
inline std::vector<CurveClass> enumerate_curve_classes(int n, int m) {
    detail::check_totals(n, m);
    std::vector<CurveClass> out;
    std::array<Block, 4> acc{};
    // blocks are chosen in nondecreasing order so each multiset appears once
    auto rec = [&](auto&& self, int pos, int rn, int rm, Block least) -> void {
        if (pos == 3) {
            Block last{rn, rm};
            if (last.total() >= 1 && !(last < least)) {
                acc[3] = last;
                out.push_back(CurveClass(acc));
            }
            return;
        }
        for (int i = least.omega; i <= rn; ++i) {
            for (int j = (i == least.omega ? least.omegabar : 0); j <= rm; ++j) {
                Block b{i, j};
                if (b.total() < 1)
                    continue;
                acc[pos] = b;
                self(self, pos + 1, rn - i, rm - j, b);
            }
        }
    };
    rec(rec, 0, n, m, Block{0, 0});
    return out;
}

/// Every canonical divisor class for the given totals, in lexicographic order
/// of the stored side.
inline std::vector<DivisorClass> enumerate_divisor_classes(int n, int m) {
    detail::check_totals(n, m);
    std::vector<DivisorClass> out;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            if (i + j < 2 || (n - i) + (m - j) < 2)
                continue;
            if (std::pair(n - i, m - j) < std::pair(i, j))
                continue; // complement side is the canonical representative
            out.emplace_back(i, j, n, m);
        }
    }
    return out;
}

/// Intersection number of a curve class with a symmetrized divisor class,
/// as a sum over the seven splittings of the four blocks:
///   - a single block against the rest meets the divisor non-transversally;
///     the psi classes at the shared node give 0 - 1 = -1. Blocks with a
///     single marked point split off no stable divisor and are skipped.
///   - a two-against-two splitting meets the divisor transversally in a
///     point, contributing +1.
/// Divisors separating the interior of a block sit entirely on three-pointed
/// components and contribute 0.
inline Rational pair_curve_divisor(const CurveClass& curve, const DivisorClass& divisor) {
    const int n = curve.omega_total();
    const int m = curve.omegabar_total();
    if (n != divisor.omega_total() || m != divisor.omegabar_total())
        throw std::invalid_argument("pair_curve_divisor: mismatched (n|m) signatures");

    auto matches = [&](int i, int j) {
        return (i == divisor.side_omega() && j == divisor.side_omegabar()) ||
               (n - i == divisor.side_omega() && m - j == divisor.side_omegabar());
    };

    const auto& b = curve.blocks();
    int total = 0;
    for (const Block& x : b)
        if (x.total() >= 2 && matches(x.omega, x.omegabar))
            --total;
    constexpr std::array<std::pair<int, int>, 3> splits{{{0, 1}, {0, 2}, {0, 3}}};
    for (auto [x, y] : splits)
        if (matches(b[x].omega + b[y].omega, b[x].omegabar + b[y].omegabar))
            ++total;
    return Rational(total);
}

} // namespace admhodge::z3
