#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoops/errors.hpp"
#include "hoops/random.hpp"

namespace hoops {

// ============================================================================
// Profiles
// ============================================================================

/// Axiom profiles, ordered from weakest to strongest:
/// pseudo_mv => pseudo_bl => basic_hoop + bounded => hoop.
enum class Profile { hoop, basic_hoop, bounded_hoop, pseudo_bl, pseudo_mv };

inline const char* profile_name(Profile p) {
    switch (p) {
        case Profile::hoop: return "hoop";
        case Profile::basic_hoop: return "basic";
        case Profile::bounded_hoop: return "bounded";
        case Profile::pseudo_bl: return "pbl";
        case Profile::pseudo_mv: return "pmv";
    }
    return "?";
}

inline std::optional<Profile> profile_from_name(const std::string& s) {
    if (s == "hoop") return Profile::hoop;
    if (s == "basic") return Profile::basic_hoop;
    if (s == "bounded") return Profile::bounded_hoop;
    if (s == "pbl") return Profile::pseudo_bl;
    if (s == "pmv") return Profile::pseudo_mv;
    return std::nullopt;
}

inline bool profile_requires_bounded(Profile p) {
    return p == Profile::bounded_hoop || p == Profile::pseudo_bl || p == Profile::pseudo_mv;
}

// ============================================================================
// FiniteAlgebra
// ============================================================================

/// A finite algebra in the (prod, to, sto, top[, bottom]) signature given by
/// operation tables over element indices 0..m-1.
///
/// The order is always derived from the residua (x <= y iff to(x,y) == top),
/// never stored in files. Construction verifies the structural invariants:
/// both residua induce the same relation, that relation is a partial order
/// with greatest element top (and least element bottom when declared), and
/// every pair has a meet. Joins are then total as well (a finite
/// meet-semilattice with top has all joins) and both tables are precomputed.
///
/// Values are immutable after construction and safe to share across threads.
class FiniteAlgebra {
public:
    using Element = int;
    static constexpr bool finite_carrier = true;

    static FiniteAlgebra from_tables(int size, std::vector<int> prod, std::vector<int> to,
                                     std::vector<int> sto, int top,
                                     std::optional<int> bottom = std::nullopt) {
        FiniteAlgebra a;
        a.m_ = size;
        a.prod_ = std::move(prod);
        a.to_ = std::move(to);
        a.sto_ = std::move(sto);
        a.top_ = top;
        a.bottom_ = bottom;
        a.validate_structure();
        return a;
    }

    [[nodiscard]] int size() const { return m_; }
    [[nodiscard]] int top() const { return top_; }
    [[nodiscard]] bool bounded() const { return bottom_.has_value(); }
    [[nodiscard]] int bottom() const {
        if (!bottom_) fail(errc::unbounded_algebra, "algebra has no declared bottom");
        return *bottom_;
    }
    [[nodiscard]] std::optional<int> bottom_opt() const { return bottom_; }

    [[nodiscard]] int prod(int x, int y) const { return prod_[idx(x, y)]; }
    [[nodiscard]] int to(int x, int y) const { return to_[idx(x, y)]; }
    [[nodiscard]] int sto(int x, int y) const { return sto_[idx(x, y)]; }
    [[nodiscard]] int meet(int x, int y) const { return meet_[idx(x, y)]; }
    [[nodiscard]] int join(int x, int y) const { return join_[idx(x, y)]; }
    [[nodiscard]] bool leq(int x, int y) const { return leq_[idx(x, y)] != 0; }

    [[nodiscard]] bool eq(int x, int y) const { return x == y; }
    [[nodiscard]] std::string str(int x) const { return std::to_string(x); }

    [[nodiscard]] int sample_at(std::uint64_t seed, std::uint64_t index, long long) const {
        DrawRng rng(seed, index);
        return static_cast<int>(rng.below(static_cast<std::uint64_t>(m_)));
    }

    // x^- := x -> 0 and x^~ := x ~> 0 (bounded only).
    [[nodiscard]] int neg_minus(int x) const { return to(x, bottom()); }
    [[nodiscard]] int neg_tilde(int x) const { return sto(x, bottom()); }

    /// x + y in MV notation: (x^- . y^-)^~.
    [[nodiscard]] int oplus(int x, int y) const {
        return neg_tilde(prod(neg_minus(x), neg_minus(y)));
    }

    /// x^0 = top, x^{n+1} = x^n . x.
    [[nodiscard]] int power(int x, int n) const {
        int r = top_;
        for (int i = 0; i < n; ++i) r = prod(r, x);
        return r;
    }

    [[nodiscard]] const std::vector<int>& prod_table() const { return prod_; }
    [[nodiscard]] const std::vector<int>& to_table() const { return to_; }
    [[nodiscard]] const std::vector<int>& sto_table() const { return sto_; }

    [[nodiscard]] bool same_tables(const FiniteAlgebra& o) const {
        return m_ == o.m_ && top_ == o.top_ && bottom_ == o.bottom_ && prod_ == o.prod_ &&
               to_ == o.to_ && sto_ == o.sto_;
    }

private:
    FiniteAlgebra() = default;

    [[nodiscard]] std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x) * m_ + y;
    }

    void validate_structure() {
        const std::size_t n = static_cast<std::size_t>(m_) * m_;
        if (m_ <= 0) fail(errc::parse_error, "algebra size must be positive");
        if (prod_.size() != n || to_.size() != n || sto_.size() != n)
            fail(errc::parse_error, "operation table has wrong shape");
        auto in_range = [&](int v) { return v >= 0 && v < m_; };
        for (std::size_t i = 0; i < n; ++i)
            if (!in_range(prod_[i]) || !in_range(to_[i]) || !in_range(sto_[i]))
                fail(errc::parse_error, "table entry out of range");
        if (!in_range(top_)) fail(errc::parse_error, "top index out of range");
        if (bottom_ && !in_range(*bottom_)) fail(errc::parse_error, "bottom index out of range");

        // Both residua must induce the same relation.
        leq_.assign(n, 0);
        for (int x = 0; x < m_; ++x)
            for (int y = 0; y < m_; ++y) {
                bool a = to(x, y) == top_;
                bool b = sto(x, y) == top_;
                if (a != b)
                    fail(errc::order_mismatch, "to/sto disagree on the order at (" +
                                                   std::to_string(x) + "," + std::to_string(y) + ")");
                leq_[idx(x, y)] = a ? 1 : 0;
            }

        // Partial order with the declared extremes.
        for (int x = 0; x < m_; ++x) {
            if (!leq(x, x)) fail(errc::invalid_order, "derived relation is not reflexive");
            if (!leq(x, top_)) fail(errc::invalid_order, "top is not the greatest element");
            if (bottom_ && !leq(*bottom_, x))
                fail(errc::invalid_order, "bottom is not the least element");
        }
        for (int x = 0; x < m_; ++x)
            for (int y = 0; y < m_; ++y) {
                if (x != y && leq(x, y) && leq(y, x))
                    fail(errc::invalid_order, "derived relation is not antisymmetric");
                for (int z = 0; z < m_; ++z)
                    if (leq(x, y) && leq(y, z) && !leq(x, z))
                        fail(errc::invalid_order, "derived relation is not transitive");
            }

        compute_meets();
        compute_joins();
    }

    void compute_meets() {
        meet_.assign(static_cast<std::size_t>(m_) * m_, 0);
        for (int x = 0; x < m_; ++x)
            for (int y = 0; y < m_; ++y) {
                int best = -1;
                for (int z = 0; z < m_; ++z)
                    if (leq(z, x) && leq(z, y) && (best < 0 || leq(best, z))) best = z;
                if (best < 0)
                    fail(errc::not_meet_semilattice,
                         "no lower bound for (" + std::to_string(x) + "," + std::to_string(y) + ")");
                for (int z = 0; z < m_; ++z)
                    if (leq(z, x) && leq(z, y) && !leq(z, best))
                        fail(errc::not_meet_semilattice,
                             "no meet for (" + std::to_string(x) + "," + std::to_string(y) + ")");
                meet_[idx(x, y)] = best;
            }
    }

    // join(x,y) = meet of all upper bounds; total once meets are.
    void compute_joins() {
        join_.assign(static_cast<std::size_t>(m_) * m_, 0);
        for (int x = 0; x < m_; ++x)
            for (int y = 0; y < m_; ++y) {
                int j = top_;
                for (int z = 0; z < m_; ++z)
                    if (leq(x, z) && leq(y, z)) j = meet(j, z);
                internal_assert(leq(x, j) && leq(y, j), "join fold left the upper set");
                join_[idx(x, y)] = j;
            }
    }

    int m_ = 0;
    int top_ = 0;
    std::optional<int> bottom_;
    std::vector<int> prod_, to_, sto_, meet_, join_;
    std::vector<std::uint8_t> leq_;
};

// ============================================================================
// Axiom validation
// ============================================================================

struct AxiomCheck {
    std::string id;
    bool pass = true;
    std::vector<int> witness; // variable assignment (empty when passing)
};

struct AxiomReport {
    Profile profile;
    std::vector<AxiomCheck> checks;

    [[nodiscard]] bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
    }
    [[nodiscard]] const AxiomCheck* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

namespace detail {

template <class Fn>
AxiomCheck check_all_pairs(const FiniteAlgebra& a, std::string id, Fn&& holds) {
    AxiomCheck c{std::move(id), true, {}};
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (!holds(x, y)) {
                c.pass = false;
                c.witness = {x, y};
                return c;
            }
    return c;
}

template <class Fn>
AxiomCheck check_all_triples(const FiniteAlgebra& a, std::string id, Fn&& holds) {
    AxiomCheck c{std::move(id), true, {}};
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            for (int z = 0; z < a.size(); ++z)
                if (!holds(x, y, z)) {
                    c.pass = false;
                    c.witness = {x, y, z};
                    return c;
                }
    return c;
}

template <class Fn>
AxiomCheck check_all_elems(const FiniteAlgebra& a, std::string id, Fn&& holds) {
    AxiomCheck c{std::move(id), true, {}};
    for (int x = 0; x < a.size(); ++x)
        if (!holds(x)) {
            c.pass = false;
            c.witness = {x};
            return c;
        }
    return c;
}

inline void append_hoop_axioms(const FiniteAlgebra& a, std::vector<AxiomCheck>& out) {
    out.push_back(check_all_elems(a, "H1.unit", [&](int x) {
        return a.prod(x, a.top()) == x && a.prod(a.top(), x) == x;
    }));
    out.push_back(check_all_elems(a, "H2.reflexivity", [&](int x) {
        return a.to(x, x) == a.top() && a.sto(x, x) == a.top();
    }));
    out.push_back(check_all_triples(a, "H3.curry_to", [&](int x, int y, int z) {
        return a.to(a.prod(x, y), z) == a.to(x, a.to(y, z));
    }));
    out.push_back(check_all_triples(a, "H4.curry_sto", [&](int x, int y, int z) {
        return a.sto(a.prod(x, y), z) == a.sto(y, a.sto(x, z));
    }));
    out.push_back(check_all_pairs(a, "H5.divisibility", [&](int x, int y) {
        int v = a.meet(x, y);
        return a.prod(a.to(x, y), x) == v && a.prod(a.to(y, x), y) == v &&
               a.prod(x, a.sto(x, y)) == v && a.prod(y, a.sto(y, x)) == v;
    }));
}

} // namespace detail

/// Exhaustive per-axiom validation of `a` against `profile`; each failing
/// entry carries the first (lexicographically least) witness assignment.
/// Profiles that need a bottom throw ProfileMismatch on unbounded input.
inline AxiomReport validate_axioms(const FiniteAlgebra& a, Profile profile) {
    using namespace detail;
    AxiomReport rep{profile, {}};
    if (profile_requires_bounded(profile) && !a.bounded())
        fail(errc::profile_mismatch,
             std::string(profile_name(profile)) + " requested on an unbounded algebra");

    switch (profile) {
        case Profile::hoop:
            append_hoop_axioms(a, rep.checks);
            break;
        case Profile::basic_hoop:
            append_hoop_axioms(a, rep.checks);
            rep.checks.push_back(check_all_triples(a, "B1", [&](int x, int y, int z) {
                return a.leq(a.to(a.to(x, y), z), a.to(a.to(a.to(y, x), z), z));
            }));
            rep.checks.push_back(check_all_triples(a, "B2", [&](int x, int y, int z) {
                return a.leq(a.sto(a.sto(x, y), z), a.sto(a.sto(a.sto(y, x), z), z));
            }));
            break;
        case Profile::bounded_hoop:
            append_hoop_axioms(a, rep.checks);
            rep.checks.push_back(
                check_all_elems(a, "bounded", [&](int x) { return a.leq(a.bottom(), x); }));
            break;
        case Profile::pseudo_bl:
            rep.checks.push_back(check_all_triples(a, "BL1.monoid", [&](int x, int y, int z) {
                return a.prod(a.prod(x, y), z) == a.prod(x, a.prod(y, z)) &&
                       a.prod(x, a.top()) == x && a.prod(a.top(), x) == x;
            }));
            rep.checks.push_back(check_all_elems(a, "BL2.bounded_lattice", [&](int x) {
                // Meets/joins are total by construction; re-check the extremes.
                return a.leq(a.bottom(), x) && a.leq(x, a.top());
            }));
            rep.checks.push_back(check_all_triples(a, "BL3.residuation", [&](int x, int y, int z) {
                bool p = a.leq(a.prod(x, y), z);
                return p == a.leq(x, a.to(y, z)) && p == a.leq(y, a.sto(x, z));
            }));
            rep.checks.push_back(check_all_pairs(a, "BL4.divisibility", [&](int x, int y) {
                int v = a.meet(x, y);
                return a.prod(a.to(x, y), x) == v && a.prod(y, a.sto(y, x)) == v;
            }));
            rep.checks.push_back(check_all_pairs(a, "BL5.prelinearity", [&](int x, int y) {
                return a.join(a.to(x, y), a.to(y, x)) == a.top() &&
                       a.join(a.sto(x, y), a.sto(y, x)) == a.top();
            }));
            break;
        case Profile::pseudo_mv: {
            // MV-signature operations derived from the tables:
            //   oplus(x,y) = (x^- . y^-)^~ with the residuum negations, while
            //   the MV negations swap roles: x^- := x ~> 0, x^~ := x -> 0.
            auto mneg = [&](int x) { return a.neg_tilde(x); };
            auto tneg = [&](int x) { return a.neg_minus(x); };
            auto oplus = [&](int x, int y) { return a.oplus(x, y); };
            auto otimes = [&](int x, int y) { return tneg(oplus(mneg(x), mneg(y))); };
            int zero = a.bottom(), one = a.top();
            rep.checks.push_back(check_all_triples(a, "A1", [&](int x, int y, int z) {
                return oplus(x, oplus(y, z)) == oplus(oplus(x, y), z);
            }));
            rep.checks.push_back(check_all_elems(a, "A2", [&](int x) {
                return oplus(x, zero) == x && oplus(zero, x) == x;
            }));
            rep.checks.push_back(check_all_elems(a, "A3", [&](int x) {
                return oplus(x, one) == one && oplus(one, x) == one;
            }));
            {
                AxiomCheck c{"A4", mneg(one) == zero && tneg(one) == zero, {}};
                if (!c.pass) c.witness = {one};
                rep.checks.push_back(std::move(c));
            }
            rep.checks.push_back(check_all_pairs(a, "A5", [&](int x, int y) {
                return tneg(oplus(mneg(x), mneg(y))) == mneg(oplus(tneg(x), tneg(y)));
            }));
            rep.checks.push_back(check_all_pairs(a, "A6", [&](int x, int y) {
                int v = oplus(x, otimes(y, tneg(x)));
                return v == oplus(y, otimes(x, tneg(y))) && v == oplus(otimes(mneg(y), x), y) &&
                       v == oplus(otimes(mneg(x), y), x);
            }));
            rep.checks.push_back(check_all_pairs(a, "A7", [&](int x, int y) {
                return otimes(oplus(mneg(x), y), x) == otimes(y, oplus(x, tneg(y)));
            }));
            rep.checks.push_back(
                check_all_elems(a, "A8", [&](int x) { return tneg(mneg(x)) == x; }));
            break;
        }
    }
    return rep;
}

// ============================================================================
// Commutativity / basicness
// ============================================================================

/// Exhaustive commutativity test. A commutative product forces -> and ~> to
/// coincide; that consequence is cross-checked and a violation reports an
/// inconsistent table set.
inline bool is_commutative(const FiniteAlgebra& a) {
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.prod(x, y) != a.prod(y, x)) return false;
    internal_assert(a.to_table() == a.sto_table(),
                    "commutative product with distinct residua");
    return true;
}

/// negations(A, x) = (x^-, x^~); bounded algebras only.
inline std::pair<int, int> negations(const FiniteAlgebra& a, int x) {
    return {a.neg_minus(x), a.neg_tilde(x)};
}

struct BasicReport {
    bool b1 = true;
    std::vector<int> b1_witness;
    bool b2 = true;
    std::vector<int> b2_witness;
    bool prelinear = true;
    std::vector<int> prelinear_witness;

    [[nodiscard]] bool basic() const { return b1 && b2; }
};

/// Checks (B1)/(B2) over all triples together with the prelinearity verdict;
/// the two characterizations must agree on every valid pseudo hoop.
inline BasicReport check_basic(const FiniteAlgebra& a) {
    BasicReport r;
    auto b1 = detail::check_all_triples(a, "B1", [&](int x, int y, int z) {
        return a.leq(a.to(a.to(x, y), z), a.to(a.to(a.to(y, x), z), z));
    });
    r.b1 = b1.pass;
    r.b1_witness = b1.witness;
    auto b2 = detail::check_all_triples(a, "B2", [&](int x, int y, int z) {
        return a.leq(a.sto(a.sto(x, y), z), a.sto(a.sto(a.sto(y, x), z), z));
    });
    r.b2 = b2.pass;
    r.b2_witness = b2.witness;
    auto pre = detail::check_all_pairs(a, "prelinearity", [&](int x, int y) {
        return a.join(a.to(x, y), a.to(y, x)) == a.top() &&
               a.join(a.sto(x, y), a.sto(y, x)) == a.top();
    });
    r.prelinear = pre.pass;
    r.prelinear_witness = pre.witness;
    internal_assert(r.basic() == r.prelinear,
                    "basic <=> prelinearity disagreement on a claimed pseudo hoop");
    return r;
}

} // namespace hoops
