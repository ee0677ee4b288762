// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances and runtime budget in code.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace hoops;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int g_failures = 0;

void run_criterion(int number, const std::string& title, double time_budget_s,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && time_budget_s > 0 && secs > time_budget_s) {
        out.ok = false;
        out.detail = "runtime budget exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2f s%s)\n", out.ok ? "PASS" : "FAIL", number,
                title.c_str(), secs, out.detail.empty() ? "" : ("; " + out.detail).c_str());
    std::fflush(stdout);
    if (!out.ok) ++g_failures;
}

std::vector<FiniteAlgebra> enumerated_pbl(int max_size, int jobs = 4) {
    std::vector<FiniteAlgebra> out;
    for (int size = 1; size <= max_size; ++size) {
        SearchSpec spec;
        spec.size = size;
        spec.profile = Profile::pseudo_bl;
        spec.jobs = jobs;
        auto res = enumerate_models(spec);
        for (auto& a : res.models) out.push_back(std::move(a));
    }
    return out;
}

} // namespace

int main() {
    // ------------------------------------------------------------------ 1
    run_criterion(1, "axiom suite (L3/G3/B4/C2, G3 pMV witness, non-basic sum)", 1.0,
                  [](Outcome& out) {
        out.require(validate_axioms(l3(), Profile::pseudo_mv).all_pass(), "L3 pMV");
        out.require(validate_axioms(g3(), Profile::pseudo_bl).all_pass(), "G3 pBL");
        out.require(validate_axioms(b4(), Profile::pseudo_bl).all_pass(), "B4 pBL");
        out.require(validate_axioms(c2(), Profile::pseudo_mv).all_pass(), "C2 pMV");

        AxiomReport g3mv = validate_axioms(g3(), Profile::pseudo_mv);
        const AxiomCheck* a8 = g3mv.find("A8");
        out.require(a8 && !a8->pass && a8->witness == std::vector<int>{1},
                    "G3 must fail (A8) with witness x=1");

        FiniteAlgebra sum = ordinal_sum(b4(), c2());
        out.require(validate_axioms(sum, Profile::hoop).all_pass(),
                    "ordinal sum must be a pseudo hoop");
        BasicReport basic = check_basic(sum);
        out.require(!basic.prelinear && basic.prelinear_witness.size() == 2,
                    "prelinearity must fail with a witness pair");
        out.require(!basic.b1 || !basic.b2, "(B1)/(B2) must fail");
        if (!basic.b1) out.require(basic.b1_witness.size() == 3, "B1 witness");
        if (basic.prelinear_witness.size() == 2) {
            int x = basic.prelinear_witness[0], y = basic.prelinear_witness[1];
            out.require(sum.join(sum.to(x, y), sum.to(y, x)) != sum.top(),
                        "witness must re-evaluate to a violation");
        }
    });

    // ------------------------------------------------------------------ 2
    run_criterion(2, "filter oracle (counts vs raw power-set recount, both characterizations)",
                  60.0, [](Outcome& out) {
        struct Expect {
            FiniteAlgebra alg;
            int filters, maximal, minprime;
        };
        std::vector<Expect> table{{l3(), 2, 1, 1}, {g3(), 3, 1, 1}, {b4(), 4, 2, 2}};
        for (const auto& e : table) {
            auto closure = all_filters(e.alg);
            auto raw = raw_filter_scan(e.alg);
            out.require(closure == raw, "closure enumeration must equal raw scan");
            out.require(static_cast<int>(closure.size()) == e.filters, "filter count");
            out.require(static_cast<int>(maximal_filters(e.alg).size()) == e.maximal,
                        "maximal count");
            out.require(static_cast<int>(minimal_prime_filters(e.alg).size()) == e.minprime,
                        "minimal prime count");
        }
        for (const auto& named : catalog()) {
            if (named.alg.size() > 5) continue;
            for (Mask s = 0; s < (Mask{1} << named.alg.size()); ++s)
                if (is_filter(named.alg, s) != is_deductive_system(named.alg, s)) {
                    out.require(false, "filter characterizations disagree on " + named.name);
                    return;
                }
        }
    });

    // ------------------------------------------------------------------ 3
    run_criterion(3, "congruence machinery (four-way equivalence, commutative quotients)", 120.0,
                  [](Outcome& out) {
        for (const auto& named : pbl_catalog(5)) {
            for (Mask f : all_filters(named.alg)) {
                auto rep = equivalences_from_filter(named.alg, f);
                bool c = rep.l_congruence;
                out.require(c == rep.r_congruence && c == rep.equal && c == rep.filter_normal,
                            "equivalence chain broken on " + named.name);
            }
            for (Mask v : maximal_filters(named.alg)) {
                if (!is_normal_filter(named.alg, v)) continue;
                out.require(is_commutative(quotient(named.alg, v)),
                            "quotient by maximal normal filter must be commutative");
            }
        }
    });

    // ------------------------------------------------------------------ 4
    run_criterion(4, "equational base vs direct oracle on every pBL model up to size 6", 600.0,
                  [](Outcome& out) {
        auto models = enumerated_pbl(6);
        CheckMode mode;
        mode.jobs = 4;
        for (const auto& a : models) {
            auto oc = oracle_consistency(a, a.size(), mode);
            out.require(oc.consistent, "oracle inconsistency at size " + std::to_string(a.size()));
            out.require(!oc.mnp || oc.eqbase_holds, "membership without schema pass");
            if (!in_mnp(a).in_class) continue;
            // Collapse and annihilator constructions, all tuples with n <= 3.
            for (int n = 1; n <= 3; ++n) {
                long long total = 1;
                for (int i = 0; i < n; ++i) total *= a.size();
                for (long long idx = 0; idx < total; ++idx) {
                    std::vector<int> xs(static_cast<std::size_t>(n));
                    long long v = idx;
                    for (int i = n - 1; i >= 0; --i) {
                        xs[static_cast<std::size_t>(i)] = static_cast<int>(v % a.size());
                        v /= a.size();
                    }
                    auto rep = check_squares_vanish(a, xs);
                    if (rep.hypothesis_met)
                        out.require(rep.conclusion_holds, "collapse conclusion failed");
                }
            }
            out.require(check_squared_rearrangements(a, a.bottom(), true, 3).holds,
                        "squared-rearrangement check failed");
            out.require(check_annihilating_products(a, a.bottom(), true).holds,
                        "annihilator construction failed");
        }
        out.require(!models.empty(), "no models enumerated");
    });

    // ------------------------------------------------------------------ 5
    run_criterion(5, "unital hoop suite (ncaff, z-lex-aff-gamma schemas; q01 strong units)",
                  300.0, [](Outcome& out) {
        auto cone = make_ncaff();
        auto u = ncaff_default_unit();
        auto cone_ctx = unital_computable(cone, u, false);
        for (int n = 1; n <= 3; ++n) {
            auto mode = sampled_mode(10000, 42, 8, 4);
            out.require(!sweep_schema_i(cone_ctx, n, mode).has_value(),
                        "ncaff schema (i) witness at n=" + std::to_string(n));
            out.require(check_schema_ii(cone_ctx, n, mode).holds, "ncaff schema (ii)");
            out.require(check_schema_iii(cone_ctx, n, mode).holds, "ncaff schema (iii)");
        }
        auto gamma = make_z_lex_aff_gamma();
        auto gamma_ctx = unital_computable(gamma, gamma.bottom(), true);
        for (int n = 1; n <= 3; ++n) {
            auto mode = sampled_mode(10000, 42, 8, 4);
            out.require(!sweep_schema_i(gamma_ctx, n, mode).has_value(),
                        "gamma schema (i) witness at n=" + std::to_string(n));
            out.require(check_schema_ii(gamma_ctx, n, mode).holds, "gamma schema (ii)");
            out.require(check_schema_iii(gamma_ctx, n, mode).holds, "gamma schema (iii)");
        }

        int witnessed = 0;
        for (int i = 0; i < 10000; ++i) {
            auto x = cone.sample_at(99, static_cast<std::uint64_t>(i), 8);
            auto w = strong_unit_witness(cone, u, x);
            if (!w.in_filter) continue;
            auto p = cone.top();
            for (int k = 0; k < w.exponent; ++k) p = cone.prod(p, u);
            if (cone.leq(p, x)) ++witnessed;
        }
        out.require(witnessed == 10000, "ncaff strong-unit witnesses must cover 100% of samples");

        RationalUnitHoop q;
        int rejected = 0;
        for (int i = 0; i < 1000; ++i) {
            Rational cand = q.sample_at(123, static_cast<std::uint64_t>(i), 12);
            bool upset_ok = true;
            for (int j = 0; j < 8; ++j) {
                Rational x = q.sample_at(124, static_cast<std::uint64_t>(8 * i + j), 12);
                auto w = strong_unit_witness(q, cand, x);
                if (w.in_filter != (cand <= x)) upset_ok = false;
            }
            Rational escape = cand / Rational(2);
            bool not_strong = cand == Rational(1) ? false : true;
            if (cand < Rational(1)) {
                auto w = strong_unit_witness(q, cand, escape);
                not_strong = !w.in_filter;
            } else {
                // u = 1 generates only {1}; 1/2 still escapes
                auto w = strong_unit_witness(q, cand, Rational(1, 2));
                not_strong = !w.in_filter;
            }
            if (upset_ok && not_strong) ++rejected;
        }
        out.require(rejected == 1000, "q01 must reject every sampled strong-unit candidate");
    });

    // ------------------------------------------------------------------ 6
    run_criterion(6, "non-commutative phenomena in a single z-lex-aff-gamma report", 120.0,
                  [](Outcome& out) {
        auto alg = make_z_lex_aff_gamma();
        GammaProbe p = probe_gamma(alg, 10000, 42, 8, 1000);
        out.require(p.noncomm_found, "(a) sampled pair with x(+)y != y(+)x");
        out.require(p.negations_coincide, "(b) x^- = x^~ on all samples");
        out.require(p.normality.pairs >= 1000 && p.normality.violations == 0,
                    "(c) maximal-filter normality equivalence");
        out.require(p.axioms_ok && p.otimes_consistent, "sampled pMV axioms");
    });

    // ------------------------------------------------------------------ 7
    run_criterion(7, "premise reduction and single-inequality checks across the catalog", 120.0,
                  [](Outcome& out) {
        std::vector<FiniteAlgebra> algs;
        for (const auto& named : catalog()) algs.push_back(named.alg);
        for (const auto& a : enumerated_pbl(5)) algs.push_back(a);
        for (const auto& a : algs) {
            if (!a.bounded()) continue;
            auto rep = check_schema_reduction(a, 4);
            if (rep.premises) {
                out.require(rep.consequence_holds, "inductive consequence failed");
                out.require(rep.equivalence_consistent, "schema-(i)-only equivalence broken");
            }
            if (rep.mv_remark_applicable)
                out.require(rep.mv_remark_holds, "pMV + premise must force commutativity");
            auto single = check_single_inequality(a);
            if (single.precondition)
                out.require(single.inequality_holds, "x^2 y^2 <= yx failed under the precondition");
        }
    });

    // ------------------------------------------------------------------ 8
    run_criterion(8, "search determinism and counts (size 2 -> 1, size 3 -> 2, jobs 1 vs 4)",
                  300.0, [](Outcome& out) {
        SearchSpec s2;
        s2.size = 2;
        s2.profile = Profile::pseudo_bl;
        out.require(enumerate_models(s2).models.size() == 1, "size 2 must give exactly C2");

        SearchSpec s3 = s2;
        s3.size = 3;
        auto three = enumerate_models(s3);
        out.require(three.models.size() == 2, "size 3 must give exactly two models");
        // hand case split: the 3-chain forces a.a in {0, a}
        if (three.models.size() == 2) {
            bool has_l3 = isomorphic(three.models[0], l3()) || isomorphic(three.models[1], l3());
            bool has_g3 = isomorphic(three.models[0], g3()) || isomorphic(three.models[1], g3());
            out.require(has_l3 && has_g3, "the two models must be the L and Goedel chains");
        }

        fs::path dir1 = fs::temp_directory_path() / "hoops_acc_cat1";
        fs::path dir2 = fs::temp_directory_path() / "hoops_acc_cat2";
        fs::remove_all(dir1);
        fs::remove_all(dir2);
        auto c1 = catalog(5, Profile::pseudo_bl, dir1.string(), 1);
        auto c2run = catalog(5, Profile::pseudo_bl, dir2.string(), 4);
        out.require(c1.manifest == c2run.manifest, "manifests must be byte-identical across jobs");
        for (const auto& e : c1.entries) {
            std::string d1 = read_file((fs::path(dir1) / e.file).string());
            std::string d2 = read_file((fs::path(dir2) / e.file).string());
            out.require(d1 == d2, "model files must be byte-identical across jobs");
        }
        fs::path dir3 = fs::temp_directory_path() / "hoops_acc_cat3";
        fs::remove_all(dir3);
        auto c3 = catalog(5, Profile::pseudo_bl, dir3.string(), 1);
        out.require(c3.manifest == c1.manifest, "manifests must be byte-identical across runs");
    });

    // ------------------------------------------------------------------ 9
    run_criterion(9, "term evaluator oracle (10^4 random terms per catalog algebra)", 300.0,
                  [](Outcome& out) {
        for (const auto& named : catalog()) {
            for (int i = 0; i < 10000; ++i) {
                DrawRng rng(404, static_cast<std::uint64_t>(i));
                TermPtr t = random_term(rng, 3, 5, named.alg.bounded());
                std::vector<int> env(3);
                for (auto& e : env)
                    e = static_cast<int>(rng.below(static_cast<std::uint64_t>(named.alg.size())));
                if (eval_term(named.alg, t, env) != naive_eval(named.alg, t, env)) {
                    out.require(false, "evaluator mismatch on " + named.name);
                    return;
                }
            }
        }
    });

    std::printf("%d/9 criteria passed\n", 9 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
