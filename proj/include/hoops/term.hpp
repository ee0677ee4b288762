#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"
#include "hoops/random.hpp"

namespace hoops {

// ============================================================================
// Terms
// ============================================================================

/// Expression tree over the full signature. The bounded-only operators
/// (bottom, negations, oplus, otimes) throw UnboundedAlgebra when evaluated
/// against an algebra without a declared bottom. otimes is the MV-notation
/// product (x^- (+) y^-)^~ with the swapped MV negations; on involutive
/// algebras it coincides with prod.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind {
        var,
        top,
        bottom,
        prod,
        to,
        sto,
        join,
        meet,
        oplus,
        otimes,
        neg_minus,
        neg_tilde,
        power,
    };

    Kind kind;
    int var = -1;  // Kind::var
    int exp = 0;   // Kind::power
    TermPtr lhs, rhs;
};

inline TermPtr t_var(int i) { return std::make_shared<Term>(Term{Term::Kind::var, i, 0, nullptr, nullptr}); }
inline TermPtr t_top() { return std::make_shared<Term>(Term{Term::Kind::top, -1, 0, nullptr, nullptr}); }
inline TermPtr t_bottom() { return std::make_shared<Term>(Term{Term::Kind::bottom, -1, 0, nullptr, nullptr}); }
inline TermPtr t_node(Term::Kind k, TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{k, -1, 0, std::move(a), std::move(b)});
}
inline TermPtr t_prod(TermPtr a, TermPtr b) { return t_node(Term::Kind::prod, std::move(a), std::move(b)); }
inline TermPtr t_to(TermPtr a, TermPtr b) { return t_node(Term::Kind::to, std::move(a), std::move(b)); }
inline TermPtr t_sto(TermPtr a, TermPtr b) { return t_node(Term::Kind::sto, std::move(a), std::move(b)); }
inline TermPtr t_join(TermPtr a, TermPtr b) { return t_node(Term::Kind::join, std::move(a), std::move(b)); }
inline TermPtr t_meet(TermPtr a, TermPtr b) { return t_node(Term::Kind::meet, std::move(a), std::move(b)); }
inline TermPtr t_oplus(TermPtr a, TermPtr b) { return t_node(Term::Kind::oplus, std::move(a), std::move(b)); }
inline TermPtr t_otimes(TermPtr a, TermPtr b) { return t_node(Term::Kind::otimes, std::move(a), std::move(b)); }
inline TermPtr t_neg_minus(TermPtr a) { return t_node(Term::Kind::neg_minus, std::move(a), nullptr); }
inline TermPtr t_neg_tilde(TermPtr a) { return t_node(Term::Kind::neg_tilde, std::move(a), nullptr); }
inline TermPtr t_pow(TermPtr a, int n) {
    return std::make_shared<Term>(Term{Term::Kind::power, -1, n, std::move(a), nullptr});
}

/// Structural-recursion evaluator.
inline int eval_term(const FiniteAlgebra& a, const TermPtr& t, std::span<const int> env) {
    if (!t) fail(errc::domain_error, "null term");
    switch (t->kind) {
        case Term::Kind::var:
            if (t->var < 0 || static_cast<std::size_t>(t->var) >= env.size())
                fail(errc::unbound_variable, "variable x" + std::to_string(t->var));
            return env[static_cast<std::size_t>(t->var)];
        case Term::Kind::top:
            return a.top();
        case Term::Kind::bottom:
            return a.bottom();
        case Term::Kind::prod:
            return a.prod(eval_term(a, t->lhs, env), eval_term(a, t->rhs, env));
        case Term::Kind::to:
            return a.to(eval_term(a, t->lhs, env), eval_term(a, t->rhs, env));
        case Term::Kind::sto:
            return a.sto(eval_term(a, t->lhs, env), eval_term(a, t->rhs, env));
        case Term::Kind::join:
            return a.join(eval_term(a, t->lhs, env), eval_term(a, t->rhs, env));
        case Term::Kind::meet:
            return a.meet(eval_term(a, t->lhs, env), eval_term(a, t->rhs, env));
        case Term::Kind::oplus:
            return a.oplus(eval_term(a, t->lhs, env), eval_term(a, t->rhs, env));
        case Term::Kind::otimes: {
            int x = eval_term(a, t->lhs, env);
            int y = eval_term(a, t->rhs, env);
            return a.neg_minus(a.oplus(a.neg_tilde(x), a.neg_tilde(y)));
        }
        case Term::Kind::neg_minus:
            return a.neg_minus(eval_term(a, t->lhs, env));
        case Term::Kind::neg_tilde:
            return a.neg_tilde(eval_term(a, t->lhs, env));
        case Term::Kind::power:
            return a.power(eval_term(a, t->lhs, env), t->exp);
    }
    fail(errc::domain_error, "unreachable term kind");
}

/// Seeded random term over `nvars` variables; bounded-only operators appear
/// only when `allow_bounded` is set. Depth is capped by `max_depth`.
inline TermPtr random_term(DrawRng& rng, int nvars, int max_depth, bool allow_bounded) {
    if (max_depth <= 0 || rng.below(5) == 0) {
        std::uint64_t pick = rng.below(allow_bounded ? 6 : 5);
        if (pick < 4 && nvars > 0) return t_var(static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars))));
        if (pick == 4) return t_top();
        return allow_bounded ? t_bottom() : t_top();
    }
    std::uint64_t pick = rng.below(allow_bounded ? 10 : 6);
    auto sub = [&]() { return random_term(rng, nvars, max_depth - 1, allow_bounded); };
    switch (pick) {
        case 0: return t_prod(sub(), sub());
        case 1: return t_to(sub(), sub());
        case 2: return t_sto(sub(), sub());
        case 3: return t_join(sub(), sub());
        case 4: return t_meet(sub(), sub());
        case 5: return t_pow(sub(), static_cast<int>(rng.below(4)));
        case 6: return t_oplus(sub(), sub());
        case 7: return t_otimes(sub(), sub());
        case 8: return t_neg_minus(sub());
        default: return t_neg_tilde(sub());
    }
}

} // namespace hoops
