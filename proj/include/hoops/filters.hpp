#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"

namespace hoops {

// ============================================================================
// Filters as bitsets
// ============================================================================

using Mask = std::uint64_t;

inline Mask mask_bit(int i) { return Mask{1} << i; }
inline bool mask_has(Mask m, int i) { return (m >> i) & 1; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> mask_indices(Mask m) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if (mask_has(m, i)) v.push_back(i);
    return v;
}

inline Mask mask_from_indices(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= mask_bit(i);
    return m;
}

/// "[1,2]" rendering used in reports.
inline std::string mask_str(Mask m) {
    std::string s = "[";
    bool first = true;
    for (int i : mask_indices(m)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "]";
}

struct FilterFlags {
    bool proper = false;
    bool maximal = false;
    std::optional<bool> prime;         // refused (nullopt) on non-basic hoops
    std::optional<bool> minimal_prime; // likewise
    bool normal = false;
};

struct Filter {
    Mask carrier = 0;
    FilterFlags flags;
};

// ============================================================================
// Membership predicates and closure
// ============================================================================

/// Submonoid + upward-closed characterization.
inline bool is_filter(const FiniteAlgebra& a, Mask f) {
    if (!mask_has(f, a.top())) return false;
    for (int x = 0; x < a.size(); ++x) {
        if (!mask_has(f, x)) continue;
        for (int y = 0; y < a.size(); ++y) {
            if (mask_has(f, y) && !mask_has(f, a.prod(x, y))) return false;
            if (a.leq(x, y) && !mask_has(f, y)) return false;
        }
    }
    return true;
}

/// Deductive-system characterization: closed under modus ponens with either
/// residuum. Equivalent to is_filter on every algebra; tests sweep all
/// subsets of the catalog to confirm.
inline bool is_deductive_system(const FiniteAlgebra& a, Mask f) {
    if (!mask_has(f, a.top())) return false;
    for (int x = 0; x < a.size(); ++x) {
        if (!mask_has(f, x)) continue;
        for (int y = 0; y < a.size(); ++y) {
            if (mask_has(f, a.to(x, y)) && !mask_has(f, y)) return false;
            if (mask_has(f, a.sto(x, y)) && !mask_has(f, y)) return false;
        }
    }
    return true;
}

/// Least filter containing `seed`: product/upset closure to fixpoint.
inline Mask filter_closure(const FiniteAlgebra& a, Mask seed) {
    Mask f = seed | mask_bit(a.top());
    for (;;) {
        Mask next = f;
        for (int x = 0; x < a.size(); ++x) {
            if (!mask_has(f, x)) continue;
            for (int y = 0; y < a.size(); ++y) {
                if (mask_has(f, y)) next |= mask_bit(a.prod(x, y));
                if (a.leq(x, y)) next |= mask_bit(y);
            }
        }
        if (next == f) return f;
        f = next;
    }
}

inline Mask generated_filter(const FiniteAlgebra& a, const std::vector<int>& gens) {
    return filter_closure(a, mask_from_indices(gens));
}

// ============================================================================
// Enumeration
// ============================================================================

/// All filters, sorted by carrier bitset. Enumerates by closing {top} under
/// single-generator extensions, which reaches every filter without scanning
/// the power set; the raw scan is kept as a test oracle.
inline std::vector<Mask> all_filters(const FiniteAlgebra& a, int size_cap = 20) {
    if (a.size() > size_cap || a.size() > 63)
        fail(errc::size_limit, "filter enumeration capped at size " + std::to_string(size_cap));
    std::set<Mask> seen;
    std::vector<Mask> queue;
    Mask least = filter_closure(a, 0);
    seen.insert(least);
    queue.push_back(least);
    while (!queue.empty()) {
        Mask f = queue.back();
        queue.pop_back();
        for (int g = 0; g < a.size(); ++g) {
            if (mask_has(f, g)) continue;
            Mask bigger = filter_closure(a, f | mask_bit(g));
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<Mask> maximal_filters(const FiniteAlgebra& a) {
    auto filters = all_filters(a);
    Mask everything = full_mask(a.size());
    std::vector<Mask> out;
    for (Mask f : filters) {
        if (f == everything) continue;
        bool maximal = true;
        for (Mask g : filters)
            if (g != everything && g != f && (g & f) == f) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

// ============================================================================
// Classification
// ============================================================================

/// Normality via the residuum characterization, cross-checked against the
/// coset characterization a.F = F.a on every call.
inline bool is_normal_filter(const FiniteAlgebra& a, Mask f) {
    bool by_residua = true;
    for (int x = 0; x < a.size() && by_residua; ++x)
        for (int y = 0; y < a.size(); ++y)
            if (mask_has(f, a.to(x, y)) != mask_has(f, a.sto(x, y))) {
                by_residua = false;
                break;
            }
    bool by_cosets = true;
    for (int c = 0; c < a.size() && by_cosets; ++c) {
        Mask left = 0, right = 0;
        for (int h = 0; h < a.size(); ++h)
            if (mask_has(f, h)) {
                left |= mask_bit(a.prod(c, h));
                right |= mask_bit(a.prod(h, c));
            }
        if (left != right) by_cosets = false;
    }
    internal_assert(by_residua == by_cosets, "normality characterizations disagree");
    return by_residua;
}

inline bool is_prime_filter(const FiniteAlgebra& a, Mask f) {
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (mask_has(f, a.join(x, y)) && !mask_has(f, x) && !mask_has(f, y)) return false;
    return true;
}

/// All five classification flags. Prime and minimal-prime are only defined
/// for basic pseudo hoops; on non-basic input they are left unset rather
/// than guessed.
inline FilterFlags classify_filter(const FiniteAlgebra& a, Mask f,
                                   const std::vector<Mask>* all = nullptr) {
    if (!is_filter(a, f)) fail(errc::domain_error, "subset " + mask_str(f) + " is not a filter");
    FilterFlags flags;
    Mask everything = full_mask(a.size());
    flags.proper = f != everything;
    flags.normal = is_normal_filter(a, f);

    std::vector<Mask> local;
    if (!all) {
        local = all_filters(a);
        all = &local;
    }
    flags.maximal = flags.proper;
    if (flags.proper)
        for (Mask g : *all)
            if (g != everything && g != f && (g & f) == f) {
                flags.maximal = false;
                break;
            }

    if (check_basic(a).basic()) {
        bool prime = is_prime_filter(a, f);
        flags.prime = prime;
        if (prime) {
            bool minimal = true;
            for (Mask g : *all)
                if (g != f && (g & f) == g && is_prime_filter(a, g)) {
                    minimal = false;
                    break;
                }
            flags.minimal_prime = minimal;
        } else {
            flags.minimal_prime = false;
        }
    }
    return flags;
}

/// Minimal prime filters; refuses on non-basic hoops, where the notion is
/// not defined. Every minimal prime must lie inside some maximal filter;
/// that containment is asserted.
inline std::vector<Mask> minimal_prime_filters(const FiniteAlgebra& a) {
    if (!check_basic(a).basic())
        fail(errc::not_basic, "prime filters are defined for basic pseudo hoops only");
    auto filters = all_filters(a);
    std::vector<Mask> primes;
    for (Mask f : filters)
        if (f != full_mask(a.size()) && is_prime_filter(a, f)) primes.push_back(f);
    std::vector<Mask> out;
    for (Mask f : primes) {
        bool minimal = true;
        for (Mask g : primes)
            if (g != f && (g & f) == g) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(f);
    }
    auto maxes = maximal_filters(a);
    for (Mask f : out) {
        bool inside_some_max = false;
        for (Mask v : maxes)
            if ((f & v) == f) {
                inside_some_max = true;
                break;
            }
        internal_assert(inside_some_max || maxes.empty(),
                        "minimal prime filter outside every maximal filter");
    }
    return out;
}

// ============================================================================
// Values and covers
// ============================================================================

/// Filters maximal with respect to not containing g (g < top).
inline std::vector<Mask> values_of(const FiniteAlgebra& a, int g) {
    if (g == a.top()) fail(errc::g_is_top, "values are defined for g < top");
    auto filters = all_filters(a);
    std::vector<Mask> without;
    for (Mask f : filters)
        if (!mask_has(f, g)) without.push_back(f);
    std::vector<Mask> out;
    for (Mask f : without) {
        bool maximal = true;
        for (Mask h : without)
            if (h != f && (h & f) == f) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

/// Cover V* of a value V of g: the least filter properly containing V,
/// namely the one generated by V and g.
inline Mask cover_of(const FiniteAlgebra& a, Mask v, int g) {
    if (g == a.top()) fail(errc::g_is_top, "cover is defined for g < top");
    return filter_closure(a, v | mask_bit(g));
}

/// Normal-valued test: every value V of every g < top is normal in its cover
/// V*, i.e. for x,y in V*, x->y in V iff x~>y in V.
inline bool is_normal_valued(const FiniteAlgebra& a) {
    for (int g = 0; g < a.size(); ++g) {
        if (g == a.top()) continue;
        for (Mask v : values_of(a, g)) {
            Mask cover = cover_of(a, v, g);
            for (int x : mask_indices(cover))
                for (int y : mask_indices(cover))
                    if (mask_has(v, a.to(x, y)) != mask_has(v, a.sto(x, y))) return false;
        }
    }
    return true;
}

// ============================================================================
// MNPBL / MNPH membership and strong units
// ============================================================================

struct MnpReport {
    bool in_class = false;
    bool trivial = false;
    bool vacuous = false; // no maximal filter at all (guarded; unreachable on
                          // finite nontrivial algebras)
};

/// Direct test for "every maximal filter is normal"; trivial algebras are in
/// the class by convention.
inline MnpReport in_mnp(const FiniteAlgebra& a) {
    MnpReport r;
    if (a.size() == 1) {
        r.in_class = true;
        r.trivial = true;
        return r;
    }
    auto maxes = maximal_filters(a);
    if (maxes.empty()) {
        r.in_class = true;
        r.vacuous = true;
        return r;
    }
    r.in_class = std::all_of(maxes.begin(), maxes.end(),
                             [&](Mask v) { return is_normal_filter(a, v); });
    return r;
}

/// u is a strong unit iff the filter it generates is the whole algebra.
inline bool is_strong_unit(const FiniteAlgebra& a, int u) {
    return generated_filter(a, {u}) == full_mask(a.size());
}

inline std::vector<int> strong_units(const FiniteAlgebra& a) {
    std::vector<int> out;
    for (int u = 0; u < a.size(); ++u)
        if (is_strong_unit(a, u)) out.push_back(u);
    return out;
}

} // namespace hoops
