#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"
#include "hoops/filters.hpp"

namespace hoops {

// ============================================================================
// Filter-induced equivalences
// ============================================================================

/// ~l: x ~ y iff x->y and y->x lie in F. ~r likewise with ~>.
/// Both are equivalences for any filter; they are congruences exactly when F
/// is normal, and then they coincide. The report carries all of that so the
/// equivalence chain can be asserted by callers; the mutual equivalence of
/// the three conditions (and their match with normality) is asserted here.
struct EquivReport {
    std::vector<int> class_l; // class id per element, ids ordered by least member
    std::vector<int> class_r;
    bool l_congruence = false;
    bool r_congruence = false;
    bool equal = false;
    bool filter_normal = false;
};

namespace detail {

template <class Rel>
std::vector<int> partition_classes(int n, Rel&& related) {
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (cls[y] < 0 && related(x, y)) cls[y] = next;
        ++next;
    }
    return cls;
}

inline bool partition_is_congruence(const FiniteAlgebra& a, const std::vector<int>& cls) {
    auto same = [&](int u, int v) { return cls[u] == cls[v]; };
    for (int x = 0; x < a.size(); ++x)
        for (int x2 = 0; x2 < a.size(); ++x2) {
            if (!same(x, x2)) continue;
            for (int y = 0; y < a.size(); ++y) {
                if (!same(a.prod(x, y), a.prod(x2, y)) || !same(a.prod(y, x), a.prod(y, x2)))
                    return false;
                if (!same(a.to(x, y), a.to(x2, y)) || !same(a.to(y, x), a.to(y, x2))) return false;
                if (!same(a.sto(x, y), a.sto(x2, y)) || !same(a.sto(y, x), a.sto(y, x2)))
                    return false;
                if (!same(a.meet(x, y), a.meet(x2, y)) || !same(a.join(x, y), a.join(x2, y)))
                    return false;
            }
        }
    return true;
}

} // namespace detail

inline EquivReport equivalences_from_filter(const FiniteAlgebra& a, Mask f) {
    if (!is_filter(a, f)) fail(errc::domain_error, "subset " + mask_str(f) + " is not a filter");
    EquivReport r;
    r.class_l = detail::partition_classes(a.size(), [&](int x, int y) {
        return mask_has(f, a.to(x, y)) && mask_has(f, a.to(y, x));
    });
    r.class_r = detail::partition_classes(a.size(), [&](int x, int y) {
        return mask_has(f, a.sto(x, y)) && mask_has(f, a.sto(y, x));
    });
    r.l_congruence = detail::partition_is_congruence(a, r.class_l);
    r.r_congruence = detail::partition_is_congruence(a, r.class_r);
    r.equal = r.class_l == r.class_r;
    r.filter_normal = is_normal_filter(a, f);
    bool c = r.l_congruence;
    internal_assert(c == r.r_congruence && c == r.equal && c == r.filter_normal,
                    "equivalence/congruence/normality conditions diverged");
    return r;
}

// ============================================================================
// Quotients
// ============================================================================

/// A/F for a normal filter F. Classes are labeled in order of least member,
/// representative-independence of every induced table is verified
/// exhaustively, and the result goes through full structural validation.
/// Pass `revalidate` to additionally re-run an axiom profile on the quotient.
inline FiniteAlgebra quotient(const FiniteAlgebra& a, Mask f,
                              std::optional<Profile> revalidate = std::nullopt) {
    if (!is_filter(a, f)) fail(errc::domain_error, "subset " + mask_str(f) + " is not a filter");
    if (!is_normal_filter(a, f))
        fail(errc::not_normal, "filter " + mask_str(f) + " is not normal");

    EquivReport eq = equivalences_from_filter(a, f);
    const std::vector<int>& cls = eq.class_l;
    int k = *std::max_element(cls.begin(), cls.end()) + 1;

    // Representative independence for all operations.
    auto check_op = [&](auto&& op) {
        for (int x = 0; x < a.size(); ++x)
            for (int x2 = 0; x2 < a.size(); ++x2) {
                if (cls[x] != cls[x2]) continue;
                for (int y = 0; y < a.size(); ++y) {
                    internal_assert(cls[op(x, y)] == cls[op(x2, y)] &&
                                        cls[op(y, x)] == cls[op(y, x2)],
                                    "quotient table depends on representatives");
                }
            }
    };
    check_op([&](int x, int y) { return a.prod(x, y); });
    check_op([&](int x, int y) { return a.to(x, y); });
    check_op([&](int x, int y) { return a.sto(x, y); });

    std::vector<int> rep(k, -1);
    for (int x = 0; x < a.size(); ++x)
        if (rep[cls[x]] < 0) rep[cls[x]] = x;

    std::vector<int> prod(static_cast<std::size_t>(k) * k), to(prod.size()), sto(prod.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            prod[static_cast<std::size_t>(i) * k + j] = cls[a.prod(rep[i], rep[j])];
            to[static_cast<std::size_t>(i) * k + j] = cls[a.to(rep[i], rep[j])];
            sto[static_cast<std::size_t>(i) * k + j] = cls[a.sto(rep[i], rep[j])];
        }
    std::optional<int> bottom;
    if (a.bounded()) bottom = cls[a.bottom()];
    FiniteAlgebra q = FiniteAlgebra::from_tables(k, std::move(prod), std::move(to),
                                                 std::move(sto), cls[a.top()], bottom);
    if (revalidate) {
        AxiomReport rep2 = validate_axioms(q, *revalidate);
        internal_assert(rep2.all_pass(), "quotient failed revalidation against source profile");
    }
    return q;
}

// ============================================================================
// Class order
// ============================================================================

/// Order on ~l classes: Fx <= Fy iff x->y in F, equivalently f.x <= y for
/// some f in F. Both characterizations are computed and must agree, as must
/// the class-equality characterization Fx = Fy iff f1.x = f2.y for some
/// f1, f2 in F.
inline bool class_order_le(const FiniteAlgebra& a, Mask f, int x, int y) {
    if (!is_filter(a, f)) fail(errc::domain_error, "subset " + mask_str(f) + " is not a filter");
    bool by_residuum = mask_has(f, a.to(x, y));
    bool by_multiplier = false;
    for (int h : mask_indices(f))
        if (a.leq(a.prod(h, x), y)) {
            by_multiplier = true;
            break;
        }
    internal_assert(by_residuum == by_multiplier, "Fx <= Fy characterizations disagree");

    bool class_eq = by_residuum && mask_has(f, a.to(y, x));
    bool product_eq = false;
    for (int f1 : mask_indices(f)) {
        for (int f2 : mask_indices(f))
            if (a.prod(f1, x) == a.prod(f2, y)) {
                product_eq = true;
                break;
            }
        if (product_eq) break;
    }
    internal_assert(class_eq == product_eq, "Fx = Fy characterizations disagree");
    return by_residuum;
}

/// Dual order on ~r classes: xF <= yF iff x~>y in F iff x.g <= y for some g.
inline bool class_order_le_r(const FiniteAlgebra& a, Mask f, int x, int y) {
    if (!is_filter(a, f)) fail(errc::domain_error, "subset " + mask_str(f) + " is not a filter");
    bool by_residuum = mask_has(f, a.sto(x, y));
    bool by_multiplier = false;
    for (int g : mask_indices(f))
        if (a.leq(a.prod(x, g), y)) {
            by_multiplier = true;
            break;
        }
    internal_assert(by_residuum == by_multiplier, "xF <= yF characterizations disagree");
    return by_residuum;
}

} // namespace hoops
