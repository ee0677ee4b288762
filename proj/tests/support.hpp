#pragma once

// Shared fixtures and independent oracles for the test suites. Everything in
// here deliberately avoids the library's own enumeration/evaluation paths
// where it serves as a cross-check.

#include <string>
#include <vector>

#include "hoops/hoops.hpp"

namespace testsupport {

using hoops::FiniteAlgebra;
using hoops::Profile;

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

struct Named {
    std::string name;
    FiniteAlgebra alg;
    Profile profile;
};

inline FiniteAlgebra trivial_algebra() {
    std::vector<int> t{0};
    return FiniteAlgebra::from_tables(1, t, t, t, 0, 0);
}

inline FiniteAlgebra c2() { return hoops::gamma_z(1); }
inline FiniteAlgebra l3() { return hoops::gamma_z(2); }
inline FiniteAlgebra l4() { return hoops::gamma_z(3); }
inline FiniteAlgebra g3() { return hoops::ordinal_sum(c2(), c2()); }
inline FiniteAlgebra g4() { return hoops::ordinal_sum(g3(), c2()); }
inline FiniteAlgebra b4() { return hoops::direct_product(c2(), c2()); }
inline FiniteAlgebra g5() { return hoops::ordinal_sum(g4(), c2()); }
inline FiniteAlgebra l5() { return hoops::gamma_z(4); }
inline FiniteAlgebra l3xc2() { return hoops::direct_product(l3(), c2()); }
/// Ordinal sum of the Goedel diamond and C2: the least non-basic pseudo hoop.
inline FiniteAlgebra nb() { return hoops::ordinal_sum(b4(), c2()); }

inline const std::vector<Named>& catalog() {
    static const std::vector<Named> algs = {
        {"trivial", trivial_algebra(), Profile::pseudo_mv},
        {"C2", c2(), Profile::pseudo_mv},
        {"L3", l3(), Profile::pseudo_mv},
        {"G3", g3(), Profile::pseudo_bl},
        {"B4", b4(), Profile::pseudo_bl},
        {"L4", l4(), Profile::pseudo_mv},
        {"G4", g4(), Profile::pseudo_bl},
        {"L5", l5(), Profile::pseudo_mv},
        {"G5", g5(), Profile::pseudo_bl},
        {"L3xC2", l3xc2(), Profile::pseudo_mv},
        {"NB", nb(), Profile::bounded_hoop},
    };
    return algs;
}

/// Catalog members that are pseudo BL-algebras (every profile pmv/pbl).
inline std::vector<Named> pbl_catalog(int max_size = 64) {
    std::vector<Named> out;
    for (const auto& n : catalog())
        if ((n.profile == Profile::pseudo_bl || n.profile == Profile::pseudo_mv) &&
            n.alg.size() <= max_size)
            out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// Independent naive term evaluator
// ---------------------------------------------------------------------------
//
// Flattens the term to postfix and runs a stack machine against the raw
// tables; shares no code with hoops::eval_term.

inline void flatten(const hoops::TermPtr& t, std::vector<const hoops::Term*>& post) {
    if (!t) throw std::runtime_error("null term");
    if (t->lhs) flatten(t->lhs, post);
    if (t->rhs) flatten(t->rhs, post);
    post.push_back(t.get());
}

inline int naive_eval(const FiniteAlgebra& a, const hoops::TermPtr& t,
                      const std::vector<int>& env) {
    std::vector<const hoops::Term*> post;
    flatten(t, post);
    std::vector<int> stack;
    auto pop = [&]() {
        int v = stack.back();
        stack.pop_back();
        return v;
    };
    for (const hoops::Term* node : post) {
        using K = hoops::Term::Kind;
        switch (node->kind) {
            case K::var:
                stack.push_back(env.at(static_cast<std::size_t>(node->var)));
                break;
            case K::top:
                stack.push_back(a.top());
                break;
            case K::bottom:
                stack.push_back(a.bottom());
                break;
            case K::power: {
                int x = pop();
                int r = a.top();
                for (int i = 0; i < node->exp; ++i) r = a.prod(r, x);
                stack.push_back(r);
                break;
            }
            case K::neg_minus:
                stack.push_back(a.to(pop(), a.bottom()));
                break;
            case K::neg_tilde:
                stack.push_back(a.sto(pop(), a.bottom()));
                break;
            default: {
                int y = pop();
                int x = pop();
                switch (node->kind) {
                    case K::prod: stack.push_back(a.prod(x, y)); break;
                    case K::to: stack.push_back(a.to(x, y)); break;
                    case K::sto: stack.push_back(a.sto(x, y)); break;
                    case K::join: stack.push_back(a.join(x, y)); break;
                    case K::meet: stack.push_back(a.meet(x, y)); break;
                    case K::oplus: {
                        int nm_x = a.to(x, a.bottom()), nm_y = a.to(y, a.bottom());
                        stack.push_back(a.sto(a.prod(nm_x, nm_y), a.bottom()));
                        break;
                    }
                    case K::otimes: {
                        int nt_x = a.sto(x, a.bottom()), nt_y = a.sto(y, a.bottom());
                        int nm_ntx = a.to(nt_x, a.bottom()), nm_nty = a.to(nt_y, a.bottom());
                        int sum = a.sto(a.prod(nm_ntx, nm_nty), a.bottom());
                        stack.push_back(a.to(sum, a.bottom()));
                        break;
                    }
                    default: throw std::runtime_error("bad node");
                }
            }
        }
    }
    if (stack.size() != 1) throw std::runtime_error("stack imbalance");
    return stack.back();
}

// ---------------------------------------------------------------------------
// Raw power-set filter oracle
// ---------------------------------------------------------------------------

/// Every filter by scanning all 2^m subsets with the submonoid+upset
/// definition, written directly against the tables.
inline std::vector<hoops::Mask> raw_filter_scan(const FiniteAlgebra& a) {
    std::vector<hoops::Mask> out;
    int m = a.size();
    for (hoops::Mask s = 0; s < (hoops::Mask{1} << m); ++s) {
        if (!((s >> a.top()) & 1)) continue;
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) {
            if (!((s >> x) & 1)) continue;
            for (int y = 0; y < m && ok; ++y) {
                if (((s >> y) & 1) && !((s >> a.prod(x, y)) & 1)) ok = false;
                if (a.leq(x, y) && !((s >> y) & 1)) ok = false;
            }
        }
        if (ok) out.push_back(s);
    }
    return out;
}

} // namespace testsupport
