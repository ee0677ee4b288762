// Command-line front end: axiom validation, filter analysis, schema checks,
// constructions, sampling, and model search as reproducible batch runs with
// JSON reports.
//
// Exit codes: 0 all checks pass, 1 some mathematical check failed (witness in
// the report), 2 usage or input error.

#include <cctype>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoops/hoops.hpp"

using nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

class Reporter {
public:
    Reporter(std::string command, ordered_json input, ordered_json parameters)
        : start_(std::chrono::steady_clock::now()) {
        j_["report_v"] = 1;
        j_["tool"] = "hoops";
        j_["tool_version"] = kToolVersion;
        j_["command"] = std::move(command);
        j_["input"] = std::move(input);
        j_["parameters"] = std::move(parameters);
        j_["checks"] = ordered_json::array();
    }

    void check(const std::string& name, bool pass, ordered_json witness = nullptr) {
        ordered_json c;
        c["name"] = name;
        c["status"] = pass ? "pass" : "fail";
        c["witness"] = std::move(witness);
        j_["checks"].push_back(std::move(c));
        (pass ? passes_ : fails_)++;
    }

    void skip(const std::string& name, const std::string& note) {
        ordered_json c;
        c["name"] = name;
        c["status"] = "skip";
        c["witness"] = nullptr;
        c["note"] = note;
        j_["checks"].push_back(std::move(c));
        skips_++;
    }

    void data(const std::string& key, ordered_json value) { j_[key] = std::move(value); }

    int finish(const std::string& out_path) {
        j_["summary"] = {{"pass", passes_}, {"fail", fails_}, {"skip", skips_}};
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        j_["timing_ms"] = ms;
        std::string text = j_.dump(2) + "\n";
        if (out_path.empty())
            std::cout << text;
        else
            hoops::write_file(out_path, text);
        return fails_ > 0 ? 1 : 0;
    }

private:
    ordered_json j_;
    int passes_ = 0, fails_ = 0, skips_ = 0;
    std::chrono::steady_clock::time_point start_;
};

ordered_json int_vec(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (int x : v) a.push_back(x);
    return a;
}

hoops::Profile parse_profile(const std::string& s) {
    auto p = hoops::profile_from_name(s);
    if (!p) hoops::fail(hoops::errc::parse_error, "unknown profile '" + s + "'");
    return *p;
}

ordered_json file_input(const std::string& path, const std::string& doc) {
    return {{"file", path}, {"hash", hoops::fnv1a64_hex(doc)}};
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(const std::string& path, const std::string& profile_name,
                 const std::string& out) {
    std::string doc = hoops::read_file(path);
    hoops::Profile profile = parse_profile(profile_name);
    hoops::FiniteAlgebra a = hoops::load_algebra(doc, profile);
    Reporter rep("validate", file_input(path, doc),
                 {{"profile", profile_name}, {"size", a.size()}});
    hoops::AxiomReport ar = hoops::validate_axioms(a, profile);
    for (const auto& c : ar.checks)
        rep.check("axiom." + c.id, c.pass, c.pass ? ordered_json(nullptr) : int_vec(c.witness));
    rep.data("commutative", hoops::is_commutative(a));
    return rep.finish(out);
}

// ---------------------------------------------------------------------------
// filters
// ---------------------------------------------------------------------------

int run_filters(const std::string& path, bool classify, const std::string& out) {
    std::string doc = hoops::read_file(path);
    hoops::FiniteAlgebra a = hoops::load_algebra(doc);
    Reporter rep("filters", file_input(path, doc), {{"classify", classify}});

    auto filters = hoops::all_filters(a);
    ordered_json list = ordered_json::array();
    bool basic = hoops::check_basic(a).basic();
    for (hoops::Mask f : filters) {
        ordered_json e;
        e["carrier"] = hoops::mask_str(f);
        if (classify) {
            auto flags = hoops::classify_filter(a, f, &filters);
            e["proper"] = flags.proper;
            e["maximal"] = flags.maximal;
            e["normal"] = flags.normal;
            if (flags.prime)
                e["prime"] = *flags.prime;
            else
                e["prime"] = "undefined (non-basic hoop)";
            if (flags.minimal_prime)
                e["minimal_prime"] = *flags.minimal_prime;
            else
                e["minimal_prime"] = "undefined (non-basic hoop)";
        }
        list.push_back(std::move(e));
    }
    rep.data("filters", list);
    rep.data("count", static_cast<int>(filters.size()));

    auto maxes = hoops::maximal_filters(a);
    ordered_json mj = ordered_json::array();
    for (hoops::Mask f : maxes) mj.push_back(hoops::mask_str(f));
    rep.data("maximal", mj);
    if (basic) {
        ordered_json pj = ordered_json::array();
        for (hoops::Mask f : hoops::minimal_prime_filters(a)) pj.push_back(hoops::mask_str(f));
        rep.data("minimal_prime", pj);
    }
    rep.check("normal_valued", hoops::is_normal_valued(a));
    auto mnp = hoops::in_mnp(a);
    rep.check("every_maximal_normal", mnp.in_class);
    ordered_json su = ordered_json::array();
    for (int u : hoops::strong_units(a)) su.push_back(u);
    rep.data("strong_units", su);
    return rep.finish(out);
}

// ---------------------------------------------------------------------------
// eqbase
// ---------------------------------------------------------------------------

template <class A>
void report_eqbase(Reporter& rep, const hoops::EqbaseReport<A>& er, const A& alg) {
    for (const auto& e : er.entries) {
        ordered_json witness = nullptr;
        if (!e.holds && er.has_witness && er.witness_schema == e.schema && er.witness_n == e.n) {
            ordered_json w;
            ordered_json assign = ordered_json::array();
            for (const auto& x : er.witness) assign.push_back(alg.str(x));
            w["assignment"] = assign;
            if (!er.witness_perm.empty()) w["perm"] = int_vec(er.witness_perm);
            witness = w;
        }
        rep.check("schema." + e.schema + ".n" + std::to_string(e.n), e.holds, witness);
    }
}

int run_eqbase(const std::string& path, const std::string& preset_name, const std::string& unit,
               int nmax, int samples, std::uint64_t seed, long long bound, int jobs,
               const std::string& out) {
    using namespace hoops;
    if (!path.empty() && !preset_name.empty())
        fail(errc::parse_error, "--preset and <file> are mutually exclusive");

    if (!path.empty()) {
        std::string doc = read_file(path);
        FiniteAlgebra a = load_algebra(doc);
        int n_max = nmax > 0 ? nmax : a.size();
        CheckMode mode;
        mode.jobs = jobs;
        UnitalContext<FiniteAlgebra> ctx;
        std::string unit_desc;
        if (unit.empty() || unit == "bottom") {
            if (!a.bounded())
                fail(errc::not_strong_unit, "unbounded algebra needs --unit <element>");
            ctx = unital_pbl(a);
            unit_desc = "bottom";
        } else {
            int u = std::stoi(unit);
            ctx = unital_hoop(a, u);
            unit_desc = std::to_string(u);
        }
        Reporter rep("eqbase", file_input(path, doc),
                     {{"unit", unit_desc}, {"nmax", n_max}, {"mode", "exhaustive"}, {"jobs", jobs}});
        auto er = check_eqbase(ctx, n_max, mode);
        report_eqbase(rep, er, a);
        if (ctx.pbl_mode) {
            auto oc = oracle_consistency(a, n_max, mode);
            rep.check("oracle.consistent", oc.consistent,
                      oc.consistent ? ordered_json(nullptr)
                                    : ordered_json{{"mnp", oc.mnp}, {"eqbase", oc.eqbase_holds}});
            rep.data("every_maximal_normal", oc.mnp);
            rep.data("oracle_note", oc.note);
            auto fb = probe_finite_base(a);
            rep.data("finite_base_probe",
                     ordered_json{{"neg_square", fb.neg_square},
                                  {"double_neg_square", fb.double_neg_square},
                                  {"square_vs_neg", fb.square_vs_neg},
                                  {"every_maximal_normal", fb.mnp},
                                  {"note", "observational; no finite base is asserted"}});
        }
        return rep.finish(out);
    }

    if (preset_name.empty()) fail(errc::parse_error, "eqbase needs <file> or --preset");
    PresetAlgebra pa = preset(preset_name);
    int n_max = nmax > 0 ? nmax : 3;
    ordered_json params{{"preset", preset_name},
                        {"nmax", n_max},
                        {"samples", samples},
                        {"seed", seed},
                        {"size_bound", bound},
                        {"strata", "size bounds b/4, b/2, b by sample index mod 3"},
                        {"jobs", jobs}};

    if (std::holds_alternative<FiniteAlgebra>(pa)) {
        const auto& a = std::get<FiniteAlgebra>(pa);
        Reporter rep("eqbase", {{"preset", preset_name}}, params);
        CheckMode mode;
        mode.jobs = jobs;
        auto er = check_eqbase(unital_pbl(a), nmax > 0 ? nmax : a.size(), mode);
        report_eqbase(rep, er, a);
        return rep.finish(out);
    }

    Reporter rep("eqbase", {{"preset", preset_name}}, params);
    CheckMode mode = sampled_mode(samples, seed, bound, jobs);
    auto run = [&](const auto& alg, const auto& u, bool pbl_mode, const std::string& unit_desc) {
        auto ctx = unital_computable(alg, u, pbl_mode);
        // Spot-check the unit: sampled elements must produce filter witnesses.
        if (!pbl_mode) {
            for (int i = 0; i < 32; ++i) {
                auto x = alg.sample_at(seed + 7, static_cast<std::uint64_t>(i), bound);
                auto w = strong_unit_witness(alg, u, x);
                if (!w.in_filter)
                    fail(errc::not_strong_unit,
                         "unit " + alg.str(u) + " gives no witness for " + alg.str(x));
            }
        }
        auto er = check_eqbase(ctx, n_max, mode);
        rep.data("unit", unit_desc);
        report_eqbase(rep, er, alg);
    };

    if (std::holds_alternative<ZLexAffGamma>(pa)) {
        const auto& alg = std::get<ZLexAffGamma>(pa);
        if (!unit.empty() && unit != "bottom")
            fail(errc::parse_error, "gamma presets use --unit bottom");
        run(alg, alg.bottom(), true, "bottom");
    } else if (std::holds_alternative<NcAff>(pa)) {
        const auto& alg = std::get<NcAff>(pa);
        AffGroup::Element u = ncaff_default_unit();
        if (!unit.empty()) {
            auto comma = unit.find(',');
            if (comma == std::string::npos)
                fail(errc::parse_error, "ncaff unit looks like a/b,c/d");
            u = {Rational::parse(unit.substr(0, comma)), Rational::parse(unit.substr(comma + 1))};
            if (!alg.carrier(u) || alg.eq(u, alg.top()))
                fail(errc::not_strong_unit, "unit must lie strictly below the identity");
        }
        run(alg, u, false, alg.str(u));
    } else {
        if (unit.empty()) fail(errc::not_strong_unit, "q01 has no strong unit; none can be chosen");
        Rational u = Rational::parse(unit);
        // F(u) = [u,1] never exhausts the carrier: u/2 always escapes it.
        fail(errc::not_strong_unit, "F(" + u.str() + ") = [" + u.str() + ",1] misses " +
                                        (u / Rational(2)).str() + "; q01 has no strong unit");
    }
    return rep.finish(out);
}

// ---------------------------------------------------------------------------
// quotient
// ---------------------------------------------------------------------------

int run_quotient(const std::string& path, const std::string& filter_list,
                 const std::string& profile_name, const std::string& save,
                 const std::string& out) {
    using namespace hoops;
    std::string doc = read_file(path);
    FiniteAlgebra a = load_algebra(doc);
    std::vector<int> idx;
    {
        std::string cur;
        for (char c : filter_list + ",") {
            if (c == ',') {
                if (!cur.empty()) idx.push_back(std::stoi(cur));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                cur += c;
            } else {
                fail(errc::parse_error, "bad --filter list '" + filter_list + "'");
            }
        }
    }
    Mask f = mask_from_indices(idx);
    Reporter rep("quotient", file_input(path, doc), {{"filter", mask_str(f)}});

    bool isf = is_filter(a, f);
    rep.check("filter.is_filter", isf, isf ? ordered_json(nullptr) : ordered_json(mask_str(f)));
    if (!isf) return rep.finish(out);
    bool normal = is_normal_filter(a, f);
    rep.check("filter.normal", normal, normal ? ordered_json(nullptr) : ordered_json(mask_str(f)));
    if (!normal) return rep.finish(out);

    std::optional<Profile> reprofile;
    if (!profile_name.empty()) reprofile = parse_profile(profile_name);
    FiniteAlgebra q = quotient(a, f, reprofile);
    rep.check("quotient.constructed", true);
    rep.data("quotient_size", q.size());
    std::string qdoc = save_algebra(
        q, {"quotient of " + fnv1a64_hex(doc), "by filter " + mask_str(f)});
    if (!save.empty()) write_file(save, qdoc);
    rep.data("quotient_algebra", qdoc);
    return rep.finish(out);
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

int run_gamma(const std::string& group, const std::string& unit, int samples,
              std::uint64_t seed, long long bound, const std::string& save,
              const std::string& out) {
    using namespace hoops;
    ordered_json params{{"group", group},
                        {"unit", unit.empty() ? "default" : unit},
                        {"samples", samples},
                        {"seed", seed},
                        {"size_bound", bound},
                        {"strata", "size bounds b/4, b/2, b by sample index mod 3"}};

    if (group == "z") {
        int n = unit.empty() ? 1 : std::stoi(unit);
        FiniteAlgebra a = gamma_z(n);
        Reporter rep("gamma", {{"group", group}}, params);
        auto ar = validate_axioms(a, Profile::pseudo_mv);
        for (const auto& c : ar.checks)
            rep.check("pmv." + c.id, c.pass, c.pass ? ordered_json(nullptr) : int_vec(c.witness));
        rep.data("size", a.size());
        std::string docOut = save_algebra(a, {"gamma(Z, " + std::to_string(n) + ")"});
        if (!save.empty()) write_file(save, docOut);
        rep.data("algebra", docOut);
        return rep.finish(out);
    }

    Reporter rep("gamma", {{"group", group}}, params);
    auto report_probe = [&](const auto& alg, const GammaProbe& p, bool expect_coincide) {
        rep.check("pmv.axioms.sampled", p.axioms_ok,
                  p.axioms_ok ? ordered_json(nullptr) : ordered_json(p.axiom_failure));
        rep.check("otimes.translation_consistent", p.otimes_consistent);
        if (expect_coincide)
            rep.check("negations.coincide", p.negations_coincide,
                      p.negations_coincide ? ordered_json(nullptr)
                                           : ordered_json(p.negation_witness));
        else
            rep.data("negations",
                     ordered_json{{"coincide", p.negations_coincide},
                                  {"witness", p.negation_witness}});
        rep.data("oplus_noncommutative_witness",
                 p.noncomm_found ? ordered_json(p.noncomm_witness) : ordered_json(nullptr));
        rep.check("maxfilter.normality.sampled", p.normality.violations == 0,
                  p.normality.violations == 0 ? ordered_json(nullptr)
                                              : ordered_json(p.normality.first_violation));
        rep.data("maxfilter_pairs", p.normality.pairs);
        auto cc = crosscheck_maxfilter(alg, alg.bottom(), 256, seed + 3, bound);
        rep.check("maxfilter.crosscheck", cc.contradictions == 0);
        rep.data("maxfilter_crosscheck_unconfirmed", cc.unconfirmed);
    };

    if (group == "z-lex-aff") {
        auto alg = make_z_lex_aff_gamma();
        report_probe(alg, probe_gamma(alg, samples, seed, bound, std::max(1000, samples / 10)),
                     true);
    } else if (group == "zxz") {
        auto alg = make_z_lex_z_gamma();
        report_probe(alg, probe_gamma(alg, samples, seed, bound, std::max(1000, samples / 10)),
                     true);
    } else if (group == "aff") {
        AffGroup g;
        AffGroup::Element u{Rational(2), Rational(0)};
        if (!unit.empty()) {
            auto comma = unit.find(',');
            if (comma == std::string::npos) fail(errc::parse_error, "aff unit looks like a/b,c/d");
            u = {Rational::parse(unit.substr(0, comma)), Rational::parse(unit.substr(comma + 1))};
        }
        GammaAlgebra<AffGroup> alg(g, u);
        report_probe(alg, probe_gamma(alg, samples, seed, bound, std::max(1000, samples / 10)),
                     false);
    } else {
        fail(errc::unknown_preset, "no group named '" + group + "' (try z, zxz, aff, z-lex-aff)");
    }
    return rep.finish(out);
}

// ---------------------------------------------------------------------------
// search / catalog
// ---------------------------------------------------------------------------

std::function<bool(const hoops::FiniteAlgebra&)> property_by_name(const std::string& name) {
    using hoops::FiniteAlgebra;
    if (name == "commutative") return [](const FiniteAlgebra& a) { return hoops::is_commutative(a); };
    if (name == "basic" || name == "prelinear")
        return [](const FiniteAlgebra& a) { return hoops::check_basic(a).basic(); };
    if (name == "in_mnp") return [](const FiniteAlgebra& a) { return hoops::in_mnp(a).in_class; };
    if (name == "normal_valued")
        return [](const FiniteAlgebra& a) { return hoops::is_normal_valued(a); };
    if (name == "pmv")
        return [](const FiniteAlgebra& a) {
            return a.bounded() && hoops::validate_axioms(a, hoops::Profile::pseudo_mv).all_pass();
        };
    hoops::fail(hoops::errc::parse_error, "unknown property '" + name + "'");
}

int run_search(int size, const std::string& profile_name, const std::string& property, int jobs,
               const std::string& out) {
    using namespace hoops;
    Profile profile = parse_profile(profile_name);
    Reporter rep("search", {{"generator", "enumerate_models"}},
                 {{"size", size}, {"profile", profile_name}, {"property", property}, {"jobs", jobs}});
    if (property.empty()) {
        SearchSpec spec;
        spec.size = size;
        spec.profile = profile;
        spec.jobs = jobs;
        SearchResult res = enumerate_models(spec);
        rep.check("search.complete", res.complete);
        rep.data("count", static_cast<int>(res.models.size()));
        rep.data("nodes", res.nodes);
        ordered_json models = ordered_json::array();
        for (const auto& a : res.models) models.push_back(save_algebra(a));
        rep.data("models", models);
    } else {
        auto res = find_counterexample(size, profile, property_by_name(property), 200'000'000,
                                       jobs);
        rep.check("search.complete", res.complete);
        rep.data("nodes", res.nodes);
        if (res.found) {
            rep.data("counterexample", save_algebra(*res.found));
            rep.data("counterexample_size", res.found->size());
        } else {
            rep.data("counterexample", nullptr);
        }
    }
    return rep.finish(out);
}

int run_catalog(int max_size, const std::string& profile_name, const std::string& dir, int jobs,
                const std::string& out) {
    using namespace hoops;
    Profile profile = parse_profile(profile_name);
    Reporter rep("catalog", {{"out_dir", dir}},
                 {{"max_size", max_size}, {"profile", profile_name}, {"jobs", jobs}});
    CatalogResult res = catalog(max_size, profile, dir, jobs);
    rep.check("catalog.complete", res.complete);
    ordered_json counts;
    for (auto [size, count] : res.counts) counts[std::to_string(size)] = count;
    rep.data("counts", counts);
    rep.data("manifest_hash", fnv1a64_hex(res.manifest));
    return rep.finish(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite and computable pseudo hoop / pseudo BL algebra toolkit"};
    app.require_subcommand(1);
    std::string out;
    app.add_option("--out", out, "write the JSON report to this file instead of stdout");

    // validate
    auto* validate = app.add_subcommand("validate", "check a profile's axioms on an algebra file");
    std::string v_file, v_profile = "pbl";
    validate->add_option("file", v_file, "algebra file")->required();
    validate->add_option("--profile", v_profile, "hoop|basic|bounded|pbl|pmv");

    // filters
    auto* filters = app.add_subcommand("filters", "enumerate and classify the filter lattice");
    std::string f_file;
    bool f_classify = false;
    filters->add_option("file", f_file, "algebra file")->required();
    filters->add_flag("--classify", f_classify, "attach classification flags per filter");

    // eqbase
    auto* eqbase = app.add_subcommand("eqbase", "run the maximal-filter inequality schemas");
    std::string e_file, e_preset, e_unit;
    int e_nmax = 0, e_samples = 10000, e_jobs = 1;
    std::uint64_t e_seed = 42;
    long long e_bound = 8;
    eqbase->add_option("file", e_file, "algebra file (exhaustive mode)");
    eqbase->add_option("--preset", e_preset, "z-lex-aff-gamma|ncaff|q01|z-gamma(n)");
    eqbase->add_option("--unit", e_unit, "target unit (bottom, element index, or a/b,c/d)");
    eqbase->add_option("--nmax", e_nmax, "largest schema width (default: size, or 3 sampled)");
    eqbase->add_option("--samples", e_samples, "sample count per schema in sampled mode");
    eqbase->add_option("--seed", e_seed, "sampler seed");
    eqbase->add_option("--bound", e_bound, "sampler size bound");
    eqbase->add_option("--jobs", e_jobs, "worker threads");

    // quotient
    auto* quot = app.add_subcommand("quotient", "quotient by a normal filter");
    std::string q_file, q_filter, q_profile, q_save;
    quot->add_option("file", q_file, "algebra file")->required();
    quot->add_option("--filter", q_filter, "comma-separated element indices")->required();
    quot->add_option("--profile", q_profile, "revalidate the quotient against this profile");
    quot->add_option("--save", q_save, "write the quotient algebra file here");

    // gamma
    auto* gamma = app.add_subcommand("gamma", "interval algebra of a unital ordered group");
    std::string g_group, g_unit, g_save;
    int g_samples = 10000;
    std::uint64_t g_seed = 42;
    long long g_bound = 8;
    gamma->add_option("--group", g_group, "z|zxz|aff|z-lex-aff")->required();
    gamma->add_option("--unit", g_unit, "unit spec (z: integer; aff: a/b,c/d)");
    gamma->add_option("--samples", g_samples, "sample count for infinite groups");
    gamma->add_option("--seed", g_seed, "sampler seed");
    gamma->add_option("--bound", g_bound, "sampler size bound");
    gamma->add_option("--save", g_save, "write the finite result as an algebra file");

    // search
    auto* search = app.add_subcommand("search", "bounded exhaustive model enumeration");
    int s_size = 3, s_jobs = 1;
    std::string s_profile = "pbl", s_property;
    search->add_option("--size", s_size, "model size (property search sweeps 1..size)")->required();
    search->add_option("--profile", s_profile, "hoop|basic|bounded|pbl|pmv");
    search->add_option("--property", s_property,
                       "find least model violating: commutative|basic|pmv|in_mnp|normal_valued");
    search->add_option("--jobs", s_jobs, "worker threads");

    // catalog
    auto* cat = app.add_subcommand("catalog", "write every model up to a size, plus a manifest");
    int c_max = 4, c_jobs = 1;
    std::string c_profile = "pbl", c_dir;
    cat->add_option("--max-size", c_max, "largest model size")->required();
    cat->add_option("--profile", c_profile, "hoop|basic|bounded|pbl|pmv");
    cat->add_option("--out", c_dir, "output directory")->required();
    cat->add_option("--jobs", c_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) return run_validate(v_file, v_profile, out);
        if (*filters) return run_filters(f_file, f_classify, out);
        if (*eqbase)
            return run_eqbase(e_file, e_preset, e_unit, e_nmax, e_samples, e_seed, e_bound,
                              e_jobs, out);
        if (*quot) return run_quotient(q_file, q_filter, q_profile, q_save, out);
        if (*gamma) return run_gamma(g_group, g_unit, g_samples, g_seed, g_bound, g_save, out);
        if (*search) return run_search(s_size, s_profile, s_property, s_jobs, out);
        if (*cat) return run_catalog(c_max, c_profile, c_dir, c_jobs, out);
    } catch (const hoops::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
