#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/errors.hpp"
#include "hoops/filters.hpp"
#include "hoops/io.hpp"

namespace hoops {

// ============================================================================
// Canonical forms
// ============================================================================

namespace detail {

inline std::optional<int> order_least(const FiniteAlgebra& a) {
    for (int c = 0; c < a.size(); ++c) {
        bool least = true;
        for (int x = 0; x < a.size() && least; ++x) least = a.leq(c, x);
        if (least) return c;
    }
    return std::nullopt;
}

inline void serialize_relabeled(const FiniteAlgebra& a, const std::vector<int>& sigma,
                                std::vector<int>& out) {
    int m = a.size();
    out.assign(static_cast<std::size_t>(3) * m * m, 0);
    std::vector<int> inv(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
    std::size_t at = 0;
    for (int pass = 0; pass < 3; ++pass)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                int ox = inv[static_cast<std::size_t>(x)], oy = inv[static_cast<std::size_t>(y)];
                int v = pass == 0 ? a.prod(ox, oy) : pass == 1 ? a.to(ox, oy) : a.sto(ox, oy);
                out[at++] = sigma[static_cast<std::size_t>(v)];
            }
}

template <class Fn>
void for_each_labeling(const FiniteAlgebra& a, Fn&& fn) {
    int m = a.size();
    int top = a.top();
    std::optional<int> least = order_least(a);
    if (least && *least == top) least.reset(); // trivial algebra
    std::vector<int> movable, slots;
    for (int i = 0; i < m; ++i)
        if (i != top && (!least || i != *least)) movable.push_back(i);
    for (int s = 0; s < m; ++s)
        if (s != m - 1 && (!least || s != 0)) slots.push_back(s);
    std::vector<int> sigma(static_cast<std::size_t>(m));
    std::sort(slots.begin(), slots.end());
    do {
        sigma[static_cast<std::size_t>(top)] = m - 1;
        if (least) sigma[static_cast<std::size_t>(*least)] = 0;
        for (std::size_t i = 0; i < movable.size(); ++i)
            sigma[static_cast<std::size_t>(movable[i])] = slots[i];
        fn(sigma);
    } while (std::next_permutation(slots.begin(), slots.end()));
}

} // namespace detail

/// Canonical invariant of the (prod, to, sto) structure: the minimum table
/// serialization over all relabelings that put top last and the least
/// element (when the order has one) first. Bottom declarations do not enter
/// the key, so a bounded algebra and its hoop reduct compare equal.
inline std::vector<int> canonical_key(const FiniteAlgebra& a) {
    std::vector<int> best, cur;
    detail::for_each_labeling(a, [&](const std::vector<int>& sigma) {
        detail::serialize_relabeled(a, sigma, cur);
        if (best.empty() || cur < best) best = cur;
    });
    best.insert(best.begin(), a.size());
    return best;
}

inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

/// The algebra relabeled into its canonical labeling (top = m-1; least = 0
/// when one exists). Declared boundedness carries over.
inline FiniteAlgebra canonical_relabel(const FiniteAlgebra& a) {
    std::vector<int> best, cur, best_sigma;
    detail::for_each_labeling(a, [&](const std::vector<int>& sigma) {
        detail::serialize_relabeled(a, sigma, cur);
        if (best.empty() || cur < best) {
            best = cur;
            best_sigma = sigma;
        }
    });
    int m = a.size();
    std::vector<int> prod(static_cast<std::size_t>(m) * m), to(prod.size()), sto(prod.size());
    std::size_t at = 0;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y, ++at) {
            prod[at] = best[at];
            to[at] = best[static_cast<std::size_t>(m) * m + at];
            sto[at] = best[static_cast<std::size_t>(2) * m * m + at];
        }
    std::optional<int> bottom;
    if (a.bounded()) bottom = best_sigma[static_cast<std::size_t>(a.bottom())];
    return FiniteAlgebra::from_tables(m, std::move(prod), std::move(to), std::move(sto), m - 1,
                                      bottom);
}

// ============================================================================
// Model enumeration
// ============================================================================

struct SearchSpec {
    int size = 2;
    Profile profile = Profile::pseudo_bl;
    std::function<bool(const FiniteAlgebra&)> constraint; // optional keep-filter
    long long node_budget = 200'000'000;
    int jobs = 1;
    int size_cap = 7;
};

struct SearchResult {
    std::vector<FiniteAlgebra> models; // canonical labels, canonical order
    bool complete = true;
    long long nodes = 0;
};

namespace detail {

struct OrderData {
    int m = 0;
    std::vector<std::uint8_t> leq;
    std::vector<int> meet, join;
    std::vector<std::vector<int>> downset; // ascending
    std::optional<int> least;
};

/// Labeled meet-semilattices with top = m-1 (and bottom = 0 when
/// `fixed_bottom`): enumerate strict relations on the free elements, close
/// nothing, and keep exactly the transitive antisymmetric ones whose meets
/// all exist.
inline std::vector<OrderData> enumerate_orders(int m, bool fixed_bottom) {
    std::vector<OrderData> out;
    int top = m - 1;
    std::vector<int> free_elems;
    for (int i = 0; i < m - 1; ++i)
        if (!(fixed_bottom && i == 0)) free_elems.push_back(i);
    int k = static_cast<int>(free_elems.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(free_elems[i], free_elems[j]);

    long long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

    for (long long code = 0; code < total; ++code) {
        OrderData od;
        od.m = m;
        od.leq.assign(static_cast<std::size_t>(m) * m, 0);
        auto set_le = [&](int x, int y) { od.leq[static_cast<std::size_t>(x) * m + y] = 1; };
        auto le = [&](int x, int y) { return od.leq[static_cast<std::size_t>(x) * m + y] != 0; };
        for (int i = 0; i < m; ++i) {
            set_le(i, i);
            set_le(i, top);
            if (fixed_bottom) set_le(0, i);
        }
        long long c = code;
        for (auto [x, y] : pairs) {
            switch (c % 3) {
                case 1: set_le(x, y); break;
                case 2: set_le(y, x); break;
                default: break;
            }
            c /= 3;
        }
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            for (int y = 0; y < m && ok; ++y) {
                if (x != y && le(x, y) && le(y, x)) ok = false;
                if (!le(x, y)) continue;
                for (int z = 0; z < m; ++z)
                    if (le(y, z) && !le(x, z)) {
                        ok = false;
                        break;
                    }
            }
        if (!ok) continue;

        // meets must exist for every pair
        od.meet.assign(static_cast<std::size_t>(m) * m, -1);
        for (int x = 0; x < m && ok; ++x)
            for (int y = 0; y < m && ok; ++y) {
                int best = -1;
                for (int z = 0; z < m; ++z)
                    if (le(z, x) && le(z, y) && (best < 0 || le(best, z))) best = z;
                if (best < 0) {
                    ok = false;
                    break;
                }
                for (int z = 0; z < m; ++z)
                    if (le(z, x) && le(z, y) && !le(z, best)) {
                        ok = false;
                        break;
                    }
                od.meet[static_cast<std::size_t>(x) * m + y] = best;
            }
        if (!ok) continue;

        od.join.assign(static_cast<std::size_t>(m) * m, -1);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                int j = top;
                for (int z = 0; z < m; ++z)
                    if (le(x, z) && le(y, z))
                        j = od.meet[static_cast<std::size_t>(j) * m + z];
                od.join[static_cast<std::size_t>(x) * m + y] = j;
            }

        od.downset.assign(static_cast<std::size_t>(m), {});
        for (int x = 0; x < m; ++x)
            for (int z = 0; z < m; ++z)
                if (le(z, x)) od.downset[static_cast<std::size_t>(x)].push_back(z);
        for (int c2 = 0; c2 < m; ++c2) {
            bool least = true;
            for (int x = 0; x < m && least; ++x) least = le(c2, x);
            if (least) {
                od.least = c2;
                break;
            }
        }
        out.push_back(std::move(od));
    }
    return out;
}

/// Residuation-driven completion of the product table over one fixed order.
/// Cells are filled column-major; finishing a column decides the whole left
/// residuum into every target, so existence of the maximum and divisibility
/// prune there. Rows (the right residuum) are checked at the leaves.
class TableCompletion {
public:
    TableCompletion(const OrderData& od, Profile profile, std::atomic<long long>& nodes,
                    long long budget, std::vector<FiniteAlgebra>& sink)
        : od_(od), profile_(profile), nodes_(nodes), budget_(budget), sink_(sink) {
        m_ = od.m;
        top_ = m_ - 1;
        prod_.assign(static_cast<std::size_t>(m_) * m_, -1);
        for (int i = 0; i < m_; ++i) {
            prod_[at(top_, i)] = i;
            prod_[at(i, top_)] = i;
        }
        for (int y = 0; y < m_ - 1; ++y)
            for (int x = 0; x < m_ - 1; ++x) cells_.emplace_back(x, y);
    }

    [[nodiscard]] bool exhausted_budget() const { return over_budget_; }

    void run() { dfs(0); }

private:
    std::size_t at(int x, int y) const { return static_cast<std::size_t>(x) * m_ + y; }
    bool le(int x, int y) const { return od_.leq[at(x, y)] != 0; }
    int meet(int x, int y) const { return od_.meet[at(x, y)]; }

    bool monotone_ok(int x, int y, int v) const {
        for (int x2 = 0; x2 < m_; ++x2)
            for (int y2 = 0; y2 < m_; ++y2) {
                int w = prod_[at(x2, y2)];
                if (w < 0) continue;
                if (le(x2, x) && le(y2, y) && !le(w, v)) return false;
                if (le(x, x2) && le(y, y2) && !le(v, w)) return false;
            }
        return true;
    }

    bool assoc_ok_partial() const {
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b < m_; ++b) {
                int ab = prod_[at(a, b)];
                if (ab < 0) continue;
                for (int c = 0; c < m_; ++c) {
                    int bc = prod_[at(b, c)];
                    if (bc < 0) continue;
                    int l = prod_[at(ab, c)], r = prod_[at(a, bc)];
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
            }
        return true;
    }

    /// Column y complete: every left residuum into every target must exist
    /// and satisfy divisibility (y -> t).y = y ^ t.
    bool column_ok(int y) const {
        for (int t = 0; t < m_; ++t) {
            int best = -1;
            for (int z = 0; z < m_; ++z) {
                if (!le(prod_[at(z, y)], t)) continue;
                if (best < 0 || le(best, z))
                    best = z;
            }
            if (best < 0) return false;
            for (int z = 0; z < m_; ++z)
                if (le(prod_[at(z, y)], t) && !le(z, best)) return false;
            if (prod_[at(best, y)] != meet(y, t)) return false;
        }
        return true;
    }

    void dfs(std::size_t cell) {
        if (over_budget_) return;
        if (cell == cells_.size()) {
            finish();
            return;
        }
        auto [x, y] = cells_[cell];
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
            over_budget_ = true;
            return;
        }
        for (int v : od_.downset[static_cast<std::size_t>(meet(x, y))]) {
            if (!monotone_ok(x, y, v)) continue;
            prod_[at(x, y)] = v;
            bool column_done = (x == m_ - 2);
            bool ok = !column_done || (column_ok(y) && assoc_ok_partial());
            if (ok) dfs(cell + 1);
            prod_[at(x, y)] = -1;
            if (over_budget_) return;
        }
    }

    void finish() {
        // Derive both residua; maxima must exist on rows too.
        std::vector<int> to(static_cast<std::size_t>(m_) * m_, -1),
            sto(static_cast<std::size_t>(m_) * m_, -1);
        for (int x = 0; x < m_; ++x)
            for (int t = 0; t < m_; ++t) {
                int best = -1;
                for (int z = 0; z < m_; ++z) {
                    if (!le(prod_[at(z, x)], t)) continue;
                    if (best < 0 || le(best, z)) best = z;
                }
                if (best < 0) return;
                for (int z = 0; z < m_; ++z)
                    if (le(prod_[at(z, x)], t) && !le(z, best)) return;
                if (prod_[at(best, x)] != meet(x, t)) return;
                to[at(x, t)] = best;

                int bestr = -1;
                for (int w = 0; w < m_; ++w) {
                    if (!le(prod_[at(x, w)], t)) continue;
                    if (bestr < 0 || le(bestr, w)) bestr = w;
                }
                if (bestr < 0) return;
                for (int w = 0; w < m_; ++w)
                    if (le(prod_[at(x, w)], t) && !le(w, bestr)) return;
                if (prod_[at(x, bestr)] != meet(x, t)) return;
                sto[at(x, t)] = bestr;
            }

        if (profile_ == Profile::basic_hoop || profile_ == Profile::pseudo_bl ||
            profile_ == Profile::pseudo_mv) {
            for (int x = 0; x < m_; ++x)
                for (int y = 0; y < m_; ++y) {
                    if (od_.join[at(to[at(x, y)], to[at(y, x)])] != top_) return;
                    if (od_.join[at(sto[at(x, y)], sto[at(y, x)])] != top_) return;
                }
        }
        if (profile_ == Profile::pseudo_mv) {
            for (int x = 0; x < m_; ++x) {
                int nm = to[at(x, 0)], nt = sto[at(x, 0)];
                if (sto[at(nm, 0)] != x || to[at(nt, 0)] != x) return;
            }
        }

        std::optional<int> bottom;
        if (profile_requires_bounded(profile_))
            bottom = 0;
        else if (od_.least)
            bottom = od_.least;
        try {
            FiniteAlgebra a = FiniteAlgebra::from_tables(m_, prod_, to, sto, top_, bottom);
            if (validate_axioms(a, profile_).all_pass()) sink_.push_back(std::move(a));
        } catch (const error&) {
            // structurally impossible completion; drop it
        }
    }

    const OrderData& od_;
    Profile profile_;
    std::atomic<long long>& nodes_;
    long long budget_;
    std::vector<FiniteAlgebra>& sink_;
    int m_ = 0, top_ = 0;
    std::vector<int> prod_;
    std::vector<std::pair<int, int>> cells_;
    bool over_budget_ = false;
};

} // namespace detail

/// All models of the profile at the given size, one canonical representative
/// per isomorphism class, in canonical order. Worker count never changes the
/// emitted set or order; an exhausted budget flips `complete` off instead of
/// emitting a partial answer silently.
inline SearchResult enumerate_models(const SearchSpec& spec) {
    if (spec.size < 1 || spec.size > spec.size_cap)
        fail(errc::size_limit, "model search size must lie in 1.." + std::to_string(spec.size_cap));
    if (spec.node_budget <= 0) fail(errc::domain_error, "node budget must be positive");
    SearchResult result;

    std::vector<FiniteAlgebra> raw;
    std::atomic<long long> nodes{0};
    if (spec.size == 1) {
        std::vector<int> t{0};
        raw.push_back(FiniteAlgebra::from_tables(1, t, t, t, 0, 0));
    } else {
        auto orders = detail::enumerate_orders(spec.size, profile_requires_bounded(spec.profile));
        int jobs = std::max(1, spec.jobs);
        std::vector<std::vector<FiniteAlgebra>> sinks(static_cast<std::size_t>(jobs));
        std::vector<std::uint8_t> overb(static_cast<std::size_t>(jobs), 0);
        auto work = [&](int w) {
            for (std::size_t i = static_cast<std::size_t>(w); i < orders.size();
                 i += static_cast<std::size_t>(jobs)) {
                detail::TableCompletion tc(orders[i], spec.profile, nodes, spec.node_budget,
                                           sinks[static_cast<std::size_t>(w)]);
                tc.run();
                if (tc.exhausted_budget()) overb[static_cast<std::size_t>(w)] = 1;
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
            for (auto& t : threads) t.join();
        }
        for (int w = 0; w < jobs; ++w) {
            if (overb[static_cast<std::size_t>(w)]) result.complete = false;
            for (auto& a : sinks[static_cast<std::size_t>(w)]) raw.push_back(std::move(a));
        }
    }
    result.nodes = nodes.load();

    // Canonicalize, dedupe, order.
    std::map<std::vector<int>, FiniteAlgebra> canon;
    for (const auto& a : raw) {
        if (spec.constraint && !spec.constraint(a)) continue;
        auto key = canonical_key(a);
        if (!canon.count(key)) canon.emplace(std::move(key), canonical_relabel(a));
    }
    for (auto& [key, alg] : canon) result.models.push_back(std::move(alg));
    return result;
}

struct CounterexampleResult {
    std::optional<FiniteAlgebra> found;
    bool complete = true;
    long long nodes = 0;
};

/// Least (canonical order, sizes ascending) model violating the property, or
/// none within budget.
inline CounterexampleResult find_counterexample(
    int max_size, Profile profile, const std::function<bool(const FiniteAlgebra&)>& property,
    long long node_budget = 200'000'000, int jobs = 1) {
    CounterexampleResult r;
    for (int size = 1; size <= max_size; ++size) {
        SearchSpec spec;
        spec.size = size;
        spec.profile = profile;
        spec.node_budget = node_budget;
        spec.jobs = jobs;
        SearchResult res = enumerate_models(spec);
        r.nodes += res.nodes;
        if (!res.complete) r.complete = false;
        for (const auto& a : res.models)
            if (!property(a)) {
                r.found = a;
                return r;
            }
    }
    return r;
}

// ============================================================================
// Catalogs
// ============================================================================

struct CatalogEntry {
    int size = 0;
    std::string file;
    bool commutative = false;
    bool basic = false;
    bool in_class = false; // every maximal filter normal
    int filters = 0;
    int maximal = 0;
};

struct CatalogResult {
    Profile profile = Profile::pseudo_bl;
    int max_size = 0;
    std::map<int, int> counts;
    std::vector<CatalogEntry> entries;
    bool complete = true;
    std::string manifest; // JSON document, byte-stable across runs
};

/// Enumerates every model up to max_size, writes one file per model in the
/// algebra format plus a manifest; reruns are byte-identical.
inline CatalogResult catalog(int max_size, Profile profile, const std::string& out_dir,
                             int jobs = 1, long long node_budget = 200'000'000) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) fail(errc::io_error, "cannot create '" + out_dir + "': " + ec.message());

    CatalogResult result;
    result.profile = profile;
    result.max_size = max_size;
    for (int size = 1; size <= max_size; ++size) {
        SearchSpec spec;
        spec.size = size;
        spec.profile = profile;
        spec.jobs = jobs;
        spec.node_budget = node_budget;
        SearchResult res = enumerate_models(spec);
        if (!res.complete) result.complete = false;
        result.counts[size] = static_cast<int>(res.models.size());
        int idx = 0;
        for (const auto& a : res.models) {
            CatalogEntry e;
            e.size = size;
            e.file = std::string(profile_name(profile)) + "_s" + std::to_string(size) + "_" +
                     std::to_string(idx) + ".alg";
            e.commutative = is_commutative(a);
            e.basic = check_basic(a).basic();
            e.in_class = in_mnp(a).in_class;
            e.filters = static_cast<int>(all_filters(a).size());
            e.maximal = static_cast<int>(maximal_filters(a).size());
            std::string doc = save_algebra(
                a, {"catalog " + std::string(profile_name(profile)) + " size " +
                    std::to_string(size) + " index " + std::to_string(idx)});
            write_file((fs::path(out_dir) / e.file).string(), doc);
            result.entries.push_back(std::move(e));
            ++idx;
        }
    }

    std::ostringstream ms;
    ms << "{\n";
    ms << "  \"profile\": \"" << profile_name(profile) << "\",\n";
    ms << "  \"max_size\": " << max_size << ",\n";
    ms << "  \"complete\": " << (result.complete ? "true" : "false") << ",\n";
    ms << "  \"counts\": {";
    bool first = true;
    for (auto [size, count] : result.counts) {
        ms << (first ? "" : ", ") << "\"" << size << "\": " << count;
        first = false;
    }
    ms << "},\n  \"observations\": [\n";
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
        const auto& e = result.entries[i];
        ms << "    {\"file\": \"" << e.file << "\", \"size\": " << e.size
           << ", \"commutative\": " << (e.commutative ? "true" : "false")
           << ", \"basic\": " << (e.basic ? "true" : "false")
           << ", \"every_maximal_normal\": " << (e.in_class ? "true" : "false")
           << ", \"filters\": " << e.filters << ", \"maximal\": " << e.maximal << "}"
           << (i + 1 < result.entries.size() ? "," : "") << "\n";
    }
    ms << "  ]\n}\n";
    result.manifest = ms.str();
    write_file((fs::path(out_dir) / "manifest.json").string(), result.manifest);
    return result;
}

} // namespace hoops
