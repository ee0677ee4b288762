#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"

namespace hoops {

// ============================================================================
// Direct product
// ============================================================================

/// Componentwise product; element (a,b) gets index a*|B| + b. Both factors
/// must agree on boundedness.
inline FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.bounded() != b.bounded())
        fail(errc::profile_mismatch, "direct product of bounded and unbounded algebras");
    int m = a.size() * b.size();
    auto id = [&](int x, int y) { return x * b.size() + y; };
    std::vector<int> prod(static_cast<std::size_t>(m) * m), to(prod.size()), sto(prod.size());
    for (int xa = 0; xa < a.size(); ++xa)
        for (int xb = 0; xb < b.size(); ++xb)
            for (int ya = 0; ya < a.size(); ++ya)
                for (int yb = 0; yb < b.size(); ++yb) {
                    std::size_t at = static_cast<std::size_t>(id(xa, xb)) * m + id(ya, yb);
                    prod[at] = id(a.prod(xa, ya), b.prod(xb, yb));
                    to[at] = id(a.to(xa, ya), b.to(xb, yb));
                    sto[at] = id(a.sto(xa, ya), b.sto(xb, yb));
                }
    std::optional<int> bottom;
    if (a.bounded()) bottom = id(a.bottom(), b.bottom());
    return FiniteAlgebra::from_tables(m, std::move(prod), std::move(to), std::move(sto),
                                      id(a.top(), b.top()), bottom);
}

// ============================================================================
// Ordinal sum
// ============================================================================

/// Ordinal sum of two pseudo hoops: the tops are identified, every non-top
/// element of the first summand sits below every non-top element of the
/// second, and the lower component absorbs cross products. The carrier size
/// is |A1| + |A2| - 1. The result is revalidated as a pseudo hoop.
inline FiniteAlgebra ordinal_sum(const FiniteAlgebra& a1, const FiniteAlgebra& a2) {
    int n1 = a1.size(), n2 = a2.size();
    int m = n1 + n2 - 1;
    int top = m - 1;

    // Non-top elements of a1 keep their relative order at indices 0..n1-2,
    // then non-top elements of a2, then the shared top last.
    std::vector<int> map1(n1), map2(n2);
    {
        int next = 0;
        for (int x = 0; x < n1; ++x) map1[x] = (x == a1.top()) ? top : next++;
        for (int x = 0; x < n2; ++x) map2[x] = (x == a2.top()) ? top : next++;
    }
    std::vector<int> inv(m, -1);      // sum index -> component element
    std::vector<int> comp(m, 0);      // 1 or 2; top belongs to both
    for (int x = 0; x < n1; ++x)
        if (x != a1.top()) {
            inv[map1[x]] = x;
            comp[map1[x]] = 1;
        }
    for (int x = 0; x < n2; ++x)
        if (x != a2.top()) {
            inv[map2[x]] = x;
            comp[map2[x]] = 2;
        }

    auto lift1 = [&](int v) { return map1[v]; };
    auto lift2 = [&](int v) { return map2[v]; };
    auto in1 = [&](int s) { return s == top || comp[s] == 1; };
    auto in2 = [&](int s) { return s == top || comp[s] == 2; };
    auto drop1 = [&](int s) { return s == top ? a1.top() : inv[s]; };
    auto drop2 = [&](int s) { return s == top ? a2.top() : inv[s]; };

    std::vector<int> prod(static_cast<std::size_t>(m) * m), to(prod.size()), sto(prod.size());
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            std::size_t at = static_cast<std::size_t>(x) * m + y;
            if (in1(x) && in1(y)) {
                prod[at] = lift1(a1.prod(drop1(x), drop1(y)));
                to[at] = lift1(a1.to(drop1(x), drop1(y)));
                sto[at] = lift1(a1.sto(drop1(x), drop1(y)));
            } else if (in2(x) && in2(y)) {
                prod[at] = lift2(a2.prod(drop2(x), drop2(y)));
                to[at] = lift2(a2.to(drop2(x), drop2(y)));
                sto[at] = lift2(a2.sto(drop2(x), drop2(y)));
            } else if (comp[x] == 1) { // x strictly below y
                prod[at] = x;
                to[at] = top;
                sto[at] = top;
            } else {                   // x in upper component, y in lower
                prod[at] = y;
                to[at] = y;
                sto[at] = y;
            }
        }

    std::optional<int> bottom;
    if (n1 == 1) {
        // Trivial first summand: the sum is a relabeling of a2.
        if (a2.bounded()) bottom = lift2(a2.bottom());
    } else if (a1.bounded()) {
        bottom = lift1(a1.bottom());
    }
    FiniteAlgebra sum = FiniteAlgebra::from_tables(m, std::move(prod), std::move(to),
                                                   std::move(sto), top, bottom);
    AxiomReport rep = validate_axioms(sum, Profile::hoop);
    internal_assert(rep.all_pass(), "ordinal sum failed pseudo hoop revalidation");
    return sum;
}

// ============================================================================
// Finite Gamma image of (Z, n)
// ============================================================================

/// Gamma(Z, n): the n+1 element MV chain on {0..n} with truncated addition.
/// Tables are produced from the interval formulas and validated as pMV.
inline FiniteAlgebra gamma_z(int n) {
    if (n < 1) fail(errc::not_positive_unit, "gamma unit must be >= 1");
    int m = n + 1;
    auto clamp0 = [&](int v) { return v < 0 ? 0 : v; };
    auto clampn = [&](int v) { return v > n ? n : v; };
    std::vector<int> prod(static_cast<std::size_t>(m) * m), to(prod.size()), sto(prod.size());
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y) {
            std::size_t at = static_cast<std::size_t>(x) * m + y;
            prod[at] = clamp0(y - n + x);      // (y - u + x) v 0
            to[at] = clampn(n - x + y);        // x^- (+) y
            sto[at] = clampn(y + n - x);       // y (+) x^~
        }
    FiniteAlgebra a =
        FiniteAlgebra::from_tables(m, std::move(prod), std::move(to), std::move(sto), n, 0);
    AxiomReport rep = validate_axioms(a, Profile::pseudo_mv);
    internal_assert(rep.all_pass(), "gamma_z output failed pMV validation");
    return a;
}

// ============================================================================
// pMV <-> pBL translations
// ============================================================================

/// A finite pseudo MV-algebra in its native (+), ^-, ^~ signature.
struct PmvAlgebra {
    int size = 0;
    std::vector<int> oplus;    // size x size
    std::vector<int> neg_minus; // x^-
    std::vector<int> neg_tilde; // x^~
    int zero = 0;
    int one = 0;

    [[nodiscard]] int op(int x, int y) const {
        return oplus[static_cast<std::size_t>(x) * size + y];
    }
};

/// Translation pBL -> pMV. Requires the double-negation identity
/// x^{-~} = x = x^{~-}; the failing element is reported otherwise. Note the
/// MV negations swap the residua: x^- := x ~> 0, x^~ := x -> 0.
inline PmvAlgebra pbl_to_pmv(const FiniteAlgebra& a) {
    if (!a.bounded()) fail(errc::unbounded_algebra, "pMV translation needs a bounded algebra");
    for (int x = 0; x < a.size(); ++x)
        if (a.neg_tilde(a.neg_minus(x)) != x || a.neg_minus(a.neg_tilde(x)) != x)
            fail(errc::not_involutive,
                 "double negation fails at element " + std::to_string(x));
    PmvAlgebra p;
    p.size = a.size();
    p.zero = a.bottom();
    p.one = a.top();
    p.oplus.resize(static_cast<std::size_t>(a.size()) * a.size());
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y) {
            int v = a.oplus(x, y); // (x^- . y^-)^~
            int w = a.neg_minus(a.prod(a.neg_tilde(x), a.neg_tilde(y)));
            internal_assert(v == w, "(x^- . y^-)^~ != (x^~ . y^~)^- on involutive algebra");
            p.oplus[static_cast<std::size_t>(x) * a.size() + y] = v;
        }
    for (int x = 0; x < a.size(); ++x) {
        p.neg_minus.push_back(a.neg_tilde(x));
        p.neg_tilde.push_back(a.neg_minus(x));
    }
    return p;
}

/// Translation pMV -> pBL: x -> y := x^- (+) y, x ~> y := y (+) x^~, with the
/// monoid product x . y := (x^- (+) y^-)^~.
inline FiniteAlgebra pmv_to_pbl(const PmvAlgebra& p) {
    int m = p.size;
    std::vector<int> prod(static_cast<std::size_t>(m) * m), to(prod.size()), sto(prod.size());
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            std::size_t at = static_cast<std::size_t>(x) * m + y;
            prod[at] = p.neg_tilde[p.op(p.neg_minus[x], p.neg_minus[y])];
            to[at] = p.op(p.neg_minus[x], y);
            sto[at] = p.op(y, p.neg_tilde[x]);
        }
    return FiniteAlgebra::from_tables(m, std::move(prod), std::move(to), std::move(sto), p.one,
                                      p.zero);
}

} // namespace hoops
