#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hoops/errors.hpp"
#include "hoops/random.hpp"
#include "hoops/rational.hpp"

namespace hoops {

// ============================================================================
// Computable totally ordered groups
// ============================================================================
//
// Additive notation throughout: add(a,b) is the group operation (composition
// for the affine group), neg the inverse, zero the neutral element. All the
// groups used here are totally ordered, so meet/join are min/max. The order
// must be translation-invariant on both sides; tests sample that property
// for every group in this header.

template <class G>
concept OrderedGroupLike = requires(const G g, typename G::Element x) {
    { g.zero() } -> std::convertible_to<typename G::Element>;
    { g.add(x, x) } -> std::convertible_to<typename G::Element>;
    { g.neg(x) } -> std::convertible_to<typename G::Element>;
    { g.leq(x, x) } -> std::convertible_to<bool>;
    { g.eq(x, x) } -> std::convertible_to<bool>;
    { g.str(x) } -> std::convertible_to<std::string>;
};

/// The integers.
struct IntGroup {
    using Element = long long;

    [[nodiscard]] Element zero() const { return 0; }
    [[nodiscard]] Element add(Element a, Element b) const { return a + b; }
    [[nodiscard]] Element neg(Element a) const { return -a; }
    [[nodiscard]] bool leq(Element a, Element b) const { return a <= b; }
    [[nodiscard]] bool eq(Element a, Element b) const { return a == b; }
    [[nodiscard]] std::string str(Element a) const { return std::to_string(a); }

    [[nodiscard]] Element sample(DrawRng& rng, long long bound) const {
        return rng.range(-bound, bound);
    }
    [[nodiscard]] Element sample_nonneg(DrawRng& rng, long long bound) const {
        return rng.range(0, bound);
    }
};

/// Order-preserving affine maps x |-> ax + b with a in Q_{>0}, b in Q, under
/// composition (a,b).(c,d) = (ac, ad+b), ordered lexicographically by (a,b).
/// Non-abelian, totally ordered, and exactly computable; the two-sided
/// translation invariance of the order is covered by a property test.
struct AffGroup {
    struct Element {
        Rational a; // slope, > 0
        Rational b; // offset

        friend bool operator==(const Element& x, const Element& y) {
            return x.a == y.a && x.b == y.b;
        }
    };

    [[nodiscard]] Element zero() const { return {Rational(1), Rational(0)}; }
    [[nodiscard]] Element add(const Element& x, const Element& y) const {
        return {x.a * y.a, x.a * y.b + x.b};
    }
    [[nodiscard]] Element neg(const Element& x) const {
        return {Rational(1) / x.a, -(x.b / x.a)};
    }
    [[nodiscard]] bool leq(const Element& x, const Element& y) const {
        if (x.a != y.a) return x.a < y.a;
        return x.b <= y.b;
    }
    [[nodiscard]] bool eq(const Element& x, const Element& y) const { return x == y; }
    [[nodiscard]] std::string str(const Element& x) const {
        return "aff(" + x.a.str() + ", " + x.b.str() + ")";
    }

    [[nodiscard]] Element sample(DrawRng& rng, long long bound) const {
        return {rng.positive_rational(bound), rng.rational(bound)};
    }
    /// An element >= identity: slope > 1, or slope 1 with offset >= 0.
    [[nodiscard]] Element sample_nonneg(DrawRng& rng, long long bound) const {
        Element e = sample(rng, bound);
        Element id = zero();
        if (leq(e, id)) e = neg(e);
        if (eq(e, id) || leq(id, e)) return e;
        return id;
    }
};

/// Lexicographic product L x-> R: componentwise operation, order decided by
/// the left coordinate first.
template <class L, class R>
struct LexProduct {
    using Element = std::pair<typename L::Element, typename R::Element>;

    L left;
    R right;

    [[nodiscard]] Element zero() const { return {left.zero(), right.zero()}; }
    [[nodiscard]] Element add(const Element& x, const Element& y) const {
        return {left.add(x.first, y.first), right.add(x.second, y.second)};
    }
    [[nodiscard]] Element neg(const Element& x) const {
        return {left.neg(x.first), right.neg(x.second)};
    }
    [[nodiscard]] bool leq(const Element& x, const Element& y) const {
        if (!left.eq(x.first, y.first)) return left.leq(x.first, y.first);
        return right.leq(x.second, y.second);
    }
    [[nodiscard]] bool eq(const Element& x, const Element& y) const {
        return left.eq(x.first, y.first) && right.eq(x.second, y.second);
    }
    [[nodiscard]] std::string str(const Element& x) const {
        return "(" + left.str(x.first) + ", " + right.str(x.second) + ")";
    }

    [[nodiscard]] Element sample(DrawRng& rng, long long bound) const {
        return {left.sample(rng, bound), right.sample(rng, bound)};
    }
    [[nodiscard]] Element sample_nonneg(DrawRng& rng, long long bound) const {
        // Stay in the zero fiber often enough to exercise the right factor.
        if (rng.coin()) return {left.zero(), right.sample_nonneg(rng, bound)};
        typename L::Element l = left.sample_nonneg(rng, bound);
        if (left.eq(l, left.zero())) return {l, right.sample_nonneg(rng, bound)};
        return {l, right.sample(rng, bound)};
    }
};

inline AffGroup aff_group() { return {}; }
inline LexProduct<IntGroup, AffGroup> z_lex_aff_group() { return {}; }
inline LexProduct<IntGroup, IntGroup> z_lex_z_group() { return {}; }

// ============================================================================
// Unital groups
// ============================================================================

template <class G>
[[nodiscard]] typename G::Element group_min(const G& g, const typename G::Element& x,
                                            const typename G::Element& y) {
    return g.leq(x, y) ? x : y;
}
template <class G>
[[nodiscard]] typename G::Element group_max(const G& g, const typename G::Element& x,
                                            const typename G::Element& y) {
    return g.leq(x, y) ? y : x;
}

/// n-fold sum of u.
template <class G>
[[nodiscard]] typename G::Element group_times(const G& g, const typename G::Element& u, int n) {
    typename G::Element r = g.zero();
    for (int i = 0; i < n; ++i) r = g.add(r, u);
    return r;
}

/// Witness n >= 1 with x <= n*u, or nullopt past the iteration cap. For a
/// strong unit such an n always exists and the loop ends quickly on the
/// presets used here.
template <class G>
[[nodiscard]] std::optional<int> strong_unit_exponent(const G& g, const typename G::Element& u,
                                                      const typename G::Element& x,
                                                      int cap = 4096) {
    typename G::Element nu = g.zero();
    for (int n = 1; n <= cap; ++n) {
        nu = g.add(nu, u);
        if (g.leq(x, nu)) return n;
    }
    return std::nullopt;
}

/// A totally ordered group with a fixed strong unit u > 0. The strong-unit
/// law is witnessed per sample rather than proved.
template <class G>
struct UnitalGroup {
    G group;
    typename G::Element unit;

    UnitalGroup(G g, typename G::Element u) : group(std::move(g)), unit(std::move(u)) {
        if (group.leq(unit, group.zero()))
            fail(errc::not_positive_unit, "gamma unit must be strictly positive");
    }
};

} // namespace hoops
