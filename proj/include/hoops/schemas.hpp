#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"
#include "hoops/filters.hpp"
#include "hoops/quotients.hpp"

namespace hoops {

// ============================================================================
// Unital contexts
// ============================================================================

/// Target element for the inequality schemas: the bottom element for bounded
/// algebras (where x -> u is the left negation), or a fixed strong unit for
/// the unital-hoop reading.
template <class A>
struct UnitalContext {
    const A* alg = nullptr;
    typename A::Element u{};
    bool pbl_mode = false;

    [[nodiscard]] const A& algebra() const { return *alg; }
};

inline UnitalContext<FiniteAlgebra> unital_pbl(const FiniteAlgebra& a) {
    return {&a, a.bottom(), true};
}

inline UnitalContext<FiniteAlgebra> unital_hoop(const FiniteAlgebra& a, int u) {
    if (!is_strong_unit(a, u))
        fail(errc::not_strong_unit, "element " + std::to_string(u) + " is not a strong unit");
    return {&a, u, false};
}

template <class A>
UnitalContext<A> unital_computable(const A& alg, typename A::Element u, bool pbl_mode) {
    return {&alg, std::move(u), pbl_mode};
}

// ============================================================================
// Verdicts and modes
// ============================================================================

struct CheckMode {
    bool exhaustive = true;
    int samples = 10000;
    std::uint64_t seed = 42;
    long long bound = 8;
    int jobs = 1;
};

inline CheckMode sampled_mode(int samples, std::uint64_t seed, long long bound = 8,
                              int jobs = 1) {
    return {false, samples, seed, bound, jobs};
}

template <class A>
struct SchemaVerdict {
    std::string schema; // "i", "ii", "iii"
    int n = 0;
    std::vector<int> perm; // for schema (i)
    bool holds = true;
    std::vector<typename A::Element> witness; // assignment; empty when holds
    std::vector<int> witness_perm;            // for schema (i)
    CheckMode mode;
};

namespace detail {

template <class A>
typename A::Element alg_power(const A& alg, const typename A::Element& x, int n) {
    auto r = alg.top();
    for (int i = 0; i < n; ++i) r = alg.prod(r, x);
    return r;
}

template <class A>
typename A::Element prod_fold(const A& alg, const std::vector<typename A::Element>& xs) {
    auto r = alg.top();
    for (const auto& x : xs) r = alg.prod(r, x);
    return r;
}

/// ((prod_i x_i) -> u)^2 <= (prod_i x_{arr(i)}^2) -> u for a fixed
/// rearrangement given directly as the permuted value sequence.
template <class A>
bool schema_i_at(const A& alg, const typename A::Element& u,
                 const std::vector<typename A::Element>& tuple,
                 const std::vector<typename A::Element>& arrangement) {
    auto l = alg.to(prod_fold(alg, tuple), u);
    auto lhs = alg.prod(l, l);
    auto rhs_in = alg.top();
    for (const auto& x : arrangement) rhs_in = alg.prod(rhs_in, alg.prod(x, x));
    return alg.leq(lhs, alg.to(rhs_in, u));
}

template <class A>
bool schema_ii_at(const A& alg, const typename A::Element& u, const typename A::Element& x,
                  const typename A::Element& y, int n) {
    auto l = alg.to(alg_power(alg, alg.to(x, y), n), u);
    auto lhs = alg.prod(l, l);
    return alg.leq(lhs, alg.to(alg_power(alg, alg.sto(x, y), 2 * n), u));
}

template <class A>
bool schema_iii_at(const A& alg, const typename A::Element& u, const typename A::Element& x,
                   const typename A::Element& y, int n) {
    auto l = alg.to(alg_power(alg, alg.sto(x, y), n), u);
    auto lhs = alg.prod(l, l);
    return alg.leq(lhs, alg.to(alg_power(alg, alg.to(x, y), 2 * n), u));
}

inline long long ipow_ll(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 62) / std::max(base, 1LL)) return 1LL << 62;
        r *= base;
    }
    return r;
}

/// Work estimate for the deduplicated schema (i) sweep at width n over m
/// elements: sum over multisets of (number of distinct rearrangements)^2.
inline long long schema_i_workload(int m, int n) {
    long long total = 0;
    std::vector<int> parts;
    long long fact_n = 1;
    for (int i = 2; i <= n; ++i) fact_n *= i;
    auto fact = [](int k) {
        long long r = 1;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            // multisets with this multiplicity profile
            long long chooser = 1;
            std::vector<int> mult_of_part(n + 1, 0);
            for (int p : parts) ++mult_of_part[p];
            for (std::size_t i = 0; i < parts.size(); ++i) chooser *= (m - static_cast<int>(i));
            for (int p = 1; p <= n; ++p) chooser /= fact(mult_of_part[p]);
            if (chooser <= 0) return;
            long long perms = fact_n;
            for (int p : parts) perms /= fact(p);
            total += chooser * perms * perms;
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            if (static_cast<int>(parts.size()) >= m) return;
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return total;
}

/// Runs fn over [0, total) split into chunks; returns the smallest failing
/// index observed, so parallel runs report the same canonical witness.
template <class Fn>
std::optional<long long> parallel_min_failure(long long total, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 4096) {
        std::optional<long long> best;
        for (long long i = 0; i < total; ++i)
            if (!fn(i)) return i;
        return best;
    }
    std::vector<std::optional<long long>> results(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    long long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            long long lo = w * chunk, hi = std::min(total, lo + chunk);
            for (long long i = lo; i < hi; ++i)
                if (!fn(i)) {
                    results[static_cast<std::size_t>(w)] = i;
                    return;
                }
        });
    }
    for (auto& t : workers) t.join();
    std::optional<long long> best;
    for (const auto& r : results)
        if (r && (!best || *r < *best)) best = *r;
    return best;
}

template <class A>
std::vector<typename A::Element> decode_tuple(const A& alg, long long index, int n) {
    std::vector<typename A::Element> t(static_cast<std::size_t>(n));
    if constexpr (A::finite_carrier) {
        int m = alg.size();
        for (int i = n - 1; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = static_cast<int>(index % m);
            index /= m;
        }
    }
    return t;
}

template <class A>
std::vector<typename A::Element> sampled_tuple(const A& alg, const CheckMode& mode,
                                               long long index, int n) {
    std::vector<typename A::Element> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t.push_back(alg.sample_at(mode.seed, static_cast<std::uint64_t>(index * n + i),
                                  mode.bound));
    return t;
}

template <class A>
std::vector<typename A::Element> tuple_for(const A& alg, const CheckMode& mode, long long index,
                                           int n) {
    if (mode.exhaustive) {
        if constexpr (A::finite_carrier) return decode_tuple(alg, index, n);
        fail(errc::domain_error, "exhaustive mode is unavailable on infinite algebras");
    }
    return sampled_tuple(alg, mode, index, n);
}

template <class A>
long long tuple_count(const A& alg, const CheckMode& mode, int n) {
    if (mode.exhaustive) {
        if constexpr (A::finite_carrier) return ipow_ll(alg.size(), n);
        fail(errc::domain_error, "exhaustive mode is unavailable on infinite algebras");
    }
    return mode.samples;
}

/// Lexicographically least permutation sending `tuple` to `arrangement`.
template <class A>
std::vector<int> arrangement_perm(const A& alg, const std::vector<typename A::Element>& tuple,
                                  const std::vector<typename A::Element>& arrangement) {
    int n = static_cast<int>(tuple.size());
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!used[static_cast<std::size_t>(j)] &&
                alg.eq(tuple[static_cast<std::size_t>(j)], arrangement[static_cast<std::size_t>(i)])) {
                perm[static_cast<std::size_t>(i)] = j;
                used[static_cast<std::size_t>(j)] = true;
                break;
            }
    return perm;
}

} // namespace detail

// ============================================================================
// Individual schema checks
// ============================================================================

/// Schema (i) for one fixed permutation pi (0-based, perm[i] = pi(i)).
template <class A>
SchemaVerdict<A> check_schema_i(const UnitalContext<A>& ctx, int n, std::vector<int> perm,
                                CheckMode mode = {}, long long budget = 200'000'000) {
    const A& alg = ctx.algebra();
    if (n < 1) fail(errc::domain_error, "schema width n must be >= 1");
    {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[static_cast<std::size_t>(i)] != i)
                fail(errc::domain_error, "perm is not a permutation of 0..n-1");
    }
    long long total = detail::tuple_count(alg, mode, n);
    if (total > budget)
        fail(errc::budget_exceeded, "schema (i) sweep needs " + std::to_string(total) +
                                        " evaluations; budget " + std::to_string(budget));
    SchemaVerdict<A> v{"i", n, perm, true, {}, {}, mode};
    auto failure = detail::parallel_min_failure(total, mode.jobs, [&](long long idx) {
        auto tuple = detail::tuple_for(alg, mode, idx, n);
        std::vector<typename A::Element> arr;
        arr.reserve(tuple.size());
        for (int i = 0; i < n; ++i) arr.push_back(tuple[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
        return detail::schema_i_at(alg, ctx.u, tuple, arr);
    });
    if (failure) {
        v.holds = false;
        v.witness = detail::tuple_for(alg, mode, *failure, n);
        v.witness_perm = perm;
    }
    return v;
}

/// Schemas (ii)/(iii) at a fixed n over all pairs (exhaustive) or sampled
/// pairs.
template <class A>
SchemaVerdict<A> check_schema_ii(const UnitalContext<A>& ctx, int n, CheckMode mode = {},
                                 long long budget = 200'000'000) {
    const A& alg = ctx.algebra();
    if (n < 1) fail(errc::domain_error, "schema width n must be >= 1");
    long long total = detail::tuple_count(alg, mode, 2);
    if (total > budget) fail(errc::budget_exceeded, "schema (ii) sweep exceeds budget");
    SchemaVerdict<A> v{"ii", n, {}, true, {}, {}, mode};
    auto failure = detail::parallel_min_failure(total, mode.jobs, [&](long long idx) {
        auto pair = detail::tuple_for(alg, mode, idx, 2);
        return detail::schema_ii_at(alg, ctx.u, pair[0], pair[1], n);
    });
    if (failure) {
        v.holds = false;
        v.witness = detail::tuple_for(alg, mode, *failure, 2);
    }
    return v;
}

template <class A>
SchemaVerdict<A> check_schema_iii(const UnitalContext<A>& ctx, int n, CheckMode mode = {},
                                  long long budget = 200'000'000) {
    const A& alg = ctx.algebra();
    if (n < 1) fail(errc::domain_error, "schema width n must be >= 1");
    long long total = detail::tuple_count(alg, mode, 2);
    if (total > budget) fail(errc::budget_exceeded, "schema (iii) sweep exceeds budget");
    SchemaVerdict<A> v{"iii", n, {}, true, {}, {}, mode};
    auto failure = detail::parallel_min_failure(total, mode.jobs, [&](long long idx) {
        auto pair = detail::tuple_for(alg, mode, idx, 2);
        return detail::schema_iii_at(alg, ctx.u, pair[0], pair[1], n);
    });
    if (failure) {
        v.holds = false;
        v.witness = detail::tuple_for(alg, mode, *failure, 2);
    }
    return v;
}

// ============================================================================
// Aggregate equational-base check
// ============================================================================

struct EqbaseEntry {
    std::string schema;
    int n = 0;
    bool holds = true;
};

template <class A>
struct EqbaseReport {
    bool holds = true;
    std::vector<EqbaseEntry> entries;
    bool has_witness = false;
    std::string witness_schema;
    int witness_n = 0;
    std::vector<int> witness_perm;
    std::vector<typename A::Element> witness;
    CheckMode mode;
};

/// Schema (i) over every permutation at width n, with permutations
/// deduplicated by their action on the tuple: for each tuple the distinct
/// rearrangements are enumerated once, so repeated values never multiply the
/// work by n!.
template <class A>
std::optional<std::pair<std::vector<typename A::Element>, std::vector<typename A::Element>>>
sweep_schema_i(const UnitalContext<A>& ctx, int n, const CheckMode& mode) {
    const A& alg = ctx.algebra();
    long long total = detail::tuple_count(alg, mode, n);
    using Elem = typename A::Element;
    // Any total order on elements works for enumerating the distinct
    // rearrangements; the algebra order is partial on products, so finite
    // elements sort by index and the computable chains by their own order.
    auto less = [&](const Elem& a, const Elem& b) {
        if constexpr (A::finite_carrier)
            return a < b;
        else
            return alg.leq(a, b) && !alg.eq(a, b);
    };

    auto tuple_ok = [&](long long idx, std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>>& slot) {
        auto tuple = detail::tuple_for(alg, mode, idx, n);
        std::vector<Elem> arr = tuple;
        std::sort(arr.begin(), arr.end(), less);
        do {
            if (!detail::schema_i_at(alg, ctx.u, tuple, arr)) {
                slot = std::make_pair(tuple, arr);
                return false;
            }
        } while (std::next_permutation(arr.begin(), arr.end(), less));
        return true;
    };

    int jobs = std::max(1, mode.jobs);
    if (jobs == 1 || total < 4096) {
        std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> slot;
        for (long long i = 0; i < total; ++i)
            if (!tuple_ok(i, slot)) return slot;
        return std::nullopt;
    }
    std::vector<std::optional<std::pair<long long, std::pair<std::vector<Elem>, std::vector<Elem>>>>>
        results(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    long long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            long long lo = w * chunk, hi = std::min(total, lo + chunk);
            std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> slot;
            for (long long i = lo; i < hi; ++i)
                if (!tuple_ok(i, slot)) {
                    results[static_cast<std::size_t>(w)] = std::make_pair(i, *slot);
                    return;
                }
        });
    }
    for (auto& t : workers) t.join();
    std::optional<std::pair<long long, std::pair<std::vector<Elem>, std::vector<Elem>>>> best;
    for (auto& r : results)
        if (r && (!best || r->first < best->first)) best = r;
    if (best) return best->second;
    return std::nullopt;
}

/// Runs (i) for all n <= n_max and all permutations, and (ii)/(iii) for all
/// n <= n_max; aggregates verdicts and keeps the first witness. A bounded
/// pass is evidence for membership, never proof: the full base is an
/// infinite schema family.
template <class A>
EqbaseReport<A> check_eqbase(const UnitalContext<A>& ctx, int n_max, CheckMode mode = {},
                             long long budget = 200'000'000) {
    const A& alg = ctx.algebra();
    if (n_max < 1) fail(errc::domain_error, "n_max must be >= 1");

    if (mode.exhaustive) {
        if constexpr (A::finite_carrier) {
            long long work = 0;
            for (int n = 1; n <= n_max; ++n)
                work += detail::schema_i_workload(alg.size(), n) + 2LL * alg.size() * alg.size();
            if (work > budget)
                fail(errc::budget_exceeded,
                     "eqbase sweep needs about " + std::to_string(work) +
                         " evaluations; budget " + std::to_string(budget) +
                         " (lower n_max or use sampled mode)");
        }
    }

    EqbaseReport<A> rep;
    rep.mode = mode;
    auto note_witness = [&](const std::string& schema, int n,
                            const std::vector<typename A::Element>& w,
                            const std::vector<int>& perm) {
        if (rep.has_witness) return;
        rep.has_witness = true;
        rep.witness_schema = schema;
        rep.witness_n = n;
        rep.witness = w;
        rep.witness_perm = perm;
    };

    for (int n = 1; n <= n_max; ++n) {
        auto bad = sweep_schema_i(ctx, n, mode);
        bool ok = !bad.has_value();
        rep.entries.push_back({"i", n, ok});
        if (!ok) {
            rep.holds = false;
            note_witness("i", n, bad->first, detail::arrangement_perm(alg, bad->first, bad->second));
        }
        auto v2 = check_schema_ii(ctx, n, mode, budget);
        rep.entries.push_back({"ii", n, v2.holds});
        if (!v2.holds) {
            rep.holds = false;
            note_witness("ii", n, v2.witness, {});
        }
        auto v3 = check_schema_iii(ctx, n, mode, budget);
        rep.entries.push_back({"iii", n, v3.holds});
        if (!v3.holds) {
            rep.holds = false;
            note_witness("iii", n, v3.witness, {});
        }
    }
    return rep;
}

// ============================================================================
// Consistency against the direct maximal-filter oracle
// ============================================================================

struct OracleConsistency {
    bool mnp = false;
    bool eqbase_holds = false;
    bool consistent = false;
    std::string note;
    EqbaseReport<FiniteAlgebra> details;
};

/// Direct membership (every maximal filter normal) against the bounded
/// schema sweep. Membership forces the schemas, so a witness refutes it; the
/// converse direction is logged as observed-only because a pass up to n_max
/// does not decide the unbounded system.
inline OracleConsistency oracle_consistency(const FiniteAlgebra& a, int n_max,
                                            CheckMode mode = {},
                                            long long budget = 200'000'000) {
    OracleConsistency oc;
    oc.mnp = in_mnp(a).in_class;
    oc.details = check_eqbase(unital_pbl(a), n_max, mode, budget);
    oc.eqbase_holds = oc.details.holds;
    oc.consistent = !oc.mnp || oc.eqbase_holds;
    oc.note = oc.eqbase_holds
                  ? "schemas pass up to n_max; evidence for membership, not proof"
                  : "schema witness found; algebra is outside the class";
    return oc;
}

// ============================================================================
// Quotient-collapse and annihilator executors
// ============================================================================

struct CollapseReport {
    bool hypothesis_met = false;
    bool conclusion_holds = false;
    std::vector<std::string> per_filter;
};

/// Hypothesis: V0 = V(prod xs) for all maximal filters V (checked through
/// the quotient classes); conclusion: prod of squares is 0.
inline CollapseReport check_squares_vanish(const FiniteAlgebra& a, const std::vector<int>& xs) {
    if (!in_mnp(a).in_class) fail(errc::not_in_mnp, "hypothesis needs every maximal filter normal");
    if (xs.empty()) fail(errc::domain_error, "xs must be nonempty");
    CollapseReport rep;
    int p = a.top();
    for (int x : xs) p = a.prod(p, x);
    bool hyp = true;
    for (Mask v : maximal_filters(a)) {
        auto eq = equivalences_from_filter(a, v);
        bool same = eq.class_l[static_cast<std::size_t>(p)] ==
                    eq.class_l[static_cast<std::size_t>(a.bottom())];
        rep.per_filter.push_back(mask_str(v) + (same ? ": V0 = V(prod)" : ": V0 != V(prod)"));
        hyp = hyp && same;
    }
    rep.hypothesis_met = hyp;
    if (hyp) {
        int q = a.top();
        for (int x : xs) q = a.prod(q, a.prod(x, x));
        rep.conclusion_holds = q == a.bottom();
    }
    return rep;
}

/// Unital-hoop form: hypothesis V(prod xs) <= Vu for all maximal V;
/// conclusion prod of squares <= u.
inline CollapseReport check_squares_below_unit(const FiniteAlgebra& a, int u, const std::vector<int>& xs) {
    if (!in_mnp(a).in_class) fail(errc::not_in_mnp, "hypothesis needs every maximal filter normal");
    if (!is_strong_unit(a, u))
        fail(errc::not_strong_unit, "element " + std::to_string(u) + " is not a strong unit");
    if (xs.empty()) fail(errc::domain_error, "xs must be nonempty");
    CollapseReport rep;
    int p = a.top();
    for (int x : xs) p = a.prod(p, x);
    bool hyp = true;
    for (Mask v : maximal_filters(a)) {
        bool le = class_order_le(a, v, p, u);
        rep.per_filter.push_back(mask_str(v) + (le ? ": V(prod) <= Vu" : ": V(prod) !<= Vu"));
        hyp = hyp && le;
    }
    rep.hypothesis_met = hyp;
    if (hyp) {
        int q = a.top();
        for (int x : xs) q = a.prod(q, a.prod(x, x));
        rep.conclusion_holds = a.leq(q, u);
    }
    return rep;
}

struct SquaredRearrangementReport {
    bool holds = true;
    std::vector<int> witness; // tuple followed by permuted tuple
};

/// If prod x_i hits the target (== 0, or <= u in unital mode), then every
/// rearrangement of squares does too. Valid wherever schema (i) holds.
inline SquaredRearrangementReport check_squared_rearrangements(const FiniteAlgebra& a, int u, bool pbl_mode,
                                              int n_max) {
    SquaredRearrangementReport rep;
    for (int n = 1; n <= n_max && rep.holds; ++n) {
        long long total = detail::ipow_ll(a.size(), n);
        for (long long idx = 0; idx < total && rep.holds; ++idx) {
            auto tuple = detail::decode_tuple(a, idx, n);
            int p = a.top();
            for (int x : tuple) p = a.prod(p, x);
            bool hit = pbl_mode ? p == u : a.leq(p, u);
            if (!hit) continue;
            std::vector<int> arr = tuple;
            std::sort(arr.begin(), arr.end());
            do {
                int q = a.top();
                for (int x : arr) q = a.prod(q, a.prod(x, x));
                bool ok = pbl_mode ? q == u : a.leq(q, u);
                if (!ok) {
                    rep.holds = false;
                    rep.witness = tuple;
                    rep.witness.insert(rep.witness.end(), arr.begin(), arr.end());
                    break;
                }
            } while (std::next_permutation(arr.begin(), arr.end()));
        }
    }
    return rep;
}

struct AnnihilatorReport {
    bool applicable = false; // some x outside some maximal filter exists
    bool holds = true;
    int checked = 0;
    std::vector<std::string> notes;
};

/// Executes the annihilator construction, not just its existence: for each
/// maximal filter V and each x outside V, find v_1..v_k in V with
/// prod (v_i x) hitting the target, then v = prod v_i^2 and the exponent 2k
/// must satisfy v x^{2k} = x^{2k} v (<=|==) target.
inline AnnihilatorReport check_annihilating_products(const FiniteAlgebra& a, int u, bool pbl_mode,
                                          int k_cap = 64) {
    AnnihilatorReport rep;
    auto hits = [&](int value) { return pbl_mode ? value == u : a.leq(value, u); };
    for (Mask vmask : maximal_filters(a)) {
        auto velems = mask_indices(vmask);
        for (int x = 0; x < a.size(); ++x) {
            if (mask_has(vmask, x)) continue;
            rep.applicable = true;
            // Level sets of values prod (v_i x) with predecessor tracking.
            struct Node {
                int value;
                int parent; // index into previous level
                int via;    // element of V used
            };
            std::vector<std::vector<Node>> levels;
            std::optional<std::pair<int, int>> found; // (level, node index)
            {
                std::vector<Node> first;
                for (int v : velems) first.push_back({a.prod(v, x), -1, v});
                levels.push_back(std::move(first));
            }
            for (int k = 1; k <= k_cap && !found; ++k) {
                auto& cur = levels.back();
                for (std::size_t i = 0; i < cur.size(); ++i)
                    if (hits(cur[i].value)) {
                        found = {k, static_cast<int>(i)};
                        break;
                    }
                if (found) break;
                std::vector<Node> next;
                std::vector<bool> seen(static_cast<std::size_t>(a.size()), false);
                for (std::size_t i = 0; i < cur.size(); ++i)
                    for (int v : velems) {
                        int val = a.prod(a.prod(cur[i].value, v), x);
                        if (!seen[static_cast<std::size_t>(val)]) {
                            seen[static_cast<std::size_t>(val)] = true;
                            next.push_back({val, static_cast<int>(i), v});
                        }
                    }
                levels.push_back(std::move(next));
            }
            internal_assert(found.has_value(),
                            "maximality guarantees a killing product but none was found");
            // Reconstruct the v_i chain.
            std::vector<int> vs;
            {
                int level = found->first - 1, node = found->second;
                while (level >= 0) {
                    vs.push_back(levels[static_cast<std::size_t>(level)][static_cast<std::size_t>(node)].via);
                    node = levels[static_cast<std::size_t>(level)][static_cast<std::size_t>(node)].parent;
                    --level;
                }
                std::reverse(vs.begin(), vs.end());
            }
            int k = static_cast<int>(vs.size());
            int v = a.top();
            for (int vi : vs) v = a.prod(v, a.prod(vi, vi));
            internal_assert(mask_has(vmask, v), "constructed v left the filter");
            int xp = a.power(x, 2 * k);
            int left = a.prod(v, xp), right = a.prod(xp, v);
            bool ok = hits(left) && hits(right) && left == right;
            ++rep.checked;
            if (!ok) {
                rep.holds = false;
                rep.notes.push_back("V=" + mask_str(vmask) + " x=" + std::to_string(x) +
                                    " k=" + std::to_string(k));
            }
        }
    }
    return rep;
}

// ============================================================================
// Premise-based reduction to schema (i), and the single-inequality case
// ============================================================================

struct ReductionReport {
    bool premise_neg_eq = true;
    std::vector<int> neg_eq_witness;
    bool premise_commute = true;
    std::vector<int> commute_witness;
    bool premises = false;
    bool consequence_holds = true; // ((x->y)^n)^- == ((x~>y)^n)^- for n <= n_max
    std::vector<int> consequence_witness;
    bool mnp = false;
    bool schema_i_holds = true;
    bool equivalence_consistent = true;
    bool mv_remark_applicable = false;
    bool mv_remark_holds = true; // pMV + first premise => commutative
};

/// Premises: (x->y)^- = (x~>y)^- and the two residua commute under the
/// product. When they hold, the inductive consequence extends the identity
/// to all powers, and schema (i) alone decides class membership; both are
/// executed up to n_max. The MV remark: a pseudo MV-algebra satisfying the
/// first premise is commutative.
inline ReductionReport check_schema_reduction(const FiniteAlgebra& a, int n_max,
                                              CheckMode mode = {},
                                              long long budget = 200'000'000) {
    ReductionReport rep;
    for (int x = 0; x < a.size() && rep.premise_neg_eq; ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.neg_minus(a.to(x, y)) != a.neg_minus(a.sto(x, y))) {
                rep.premise_neg_eq = false;
                rep.neg_eq_witness = {x, y};
                break;
            }
    for (int x = 0; x < a.size() && rep.premise_commute; ++x)
        for (int y = 0; y < a.size(); ++y) {
            int l = a.to(x, y), r = a.sto(x, y);
            if (a.prod(l, r) != a.prod(r, l)) {
                rep.premise_commute = false;
                rep.commute_witness = {x, y};
                break;
            }
        }
    rep.premises = rep.premise_neg_eq && rep.premise_commute;

    if (rep.premises) {
        for (int n = 1; n <= n_max && rep.consequence_holds; ++n)
            for (int x = 0; x < a.size() && rep.consequence_holds; ++x)
                for (int y = 0; y < a.size(); ++y) {
                    int l = a.power(a.to(x, y), n), r = a.power(a.sto(x, y), n);
                    if (a.neg_minus(l) != a.neg_minus(r)) {
                        rep.consequence_holds = false;
                        rep.consequence_witness = {x, y, n};
                        break;
                    }
                }

        rep.mnp = in_mnp(a).in_class;
        auto ctx = unital_pbl(a);
        for (int n = 1; n <= n_max && rep.schema_i_holds; ++n)
            if (sweep_schema_i(ctx, n, mode).has_value()) rep.schema_i_holds = false;
        rep.equivalence_consistent = !rep.mnp || rep.schema_i_holds;
        (void)budget;
    }

    if (rep.premise_neg_eq && validate_axioms(a, Profile::pseudo_mv).all_pass()) {
        rep.mv_remark_applicable = true;
        rep.mv_remark_holds = is_commutative(a);
    }
    return rep;
}

struct FiniteBaseProbe {
    bool neg_square = true;      // (x^-)^2 <= (x^2)^-
    bool double_neg_square = true; // (x^{--})^2 <= ((x^~)^2)^-
    bool square_vs_neg = true;   // x^2 <= ((x^-)^2)^-
    bool mnp = false;
};

/// Whether a handful of single inequalities could replace the infinite
/// schema family is open; this records how they fall on one algebra next to
/// the direct class verdict. Observational only, nothing is asserted.
inline FiniteBaseProbe probe_finite_base(const FiniteAlgebra& a) {
    FiniteBaseProbe p;
    for (int x = 0; x < a.size(); ++x) {
        int nm = a.neg_minus(x);
        if (!a.leq(a.prod(nm, nm), a.neg_minus(a.prod(x, x)))) p.neg_square = false;
        int dn = a.neg_minus(nm);
        int nt = a.neg_tilde(x);
        if (!a.leq(a.prod(dn, dn), a.neg_minus(a.prod(nt, nt)))) p.double_neg_square = false;
        if (!a.leq(a.prod(x, x), a.neg_minus(a.prod(nm, nm)))) p.square_vs_neg = false;
    }
    p.mnp = in_mnp(a).in_class;
    return p;
}

struct SingleInequalityReport {
    bool precondition = true;
    std::vector<int> precondition_witness;
    bool inequality_holds = true;
    std::vector<int> witness;
};

/// On algebras with (x->y)~>y = (x~>y)->y, the whole normal-valued base
/// reduces to x^2 y^2 <= yx; informational, not part of the class test here.
inline SingleInequalityReport check_single_inequality(const FiniteAlgebra& a) {
    SingleInequalityReport rep;
    for (int x = 0; x < a.size() && rep.precondition; ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.sto(a.to(x, y), y) != a.to(a.sto(x, y), y)) {
                rep.precondition = false;
                rep.precondition_witness = {x, y};
                break;
            }
    if (rep.precondition)
        for (int x = 0; x < a.size() && rep.inequality_holds; ++x)
            for (int y = 0; y < a.size(); ++y)
                if (!a.leq(a.prod(a.power(x, 2), a.power(y, 2)), a.prod(y, x))) {
                    rep.inequality_holds = false;
                    rep.witness = {x, y};
                    break;
                }
    return rep;
}

} // namespace hoops
