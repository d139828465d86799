#include "acm/lab.hpp"

#include <chrono>
#include <numeric>
#include <set>

#include "acm/acm.hpp"
#include "acm/rng.hpp"

namespace acm {

namespace {

struct PointPool {
    std::vector<std::vector<std::int64_t>> raw;
    std::vector<ProjPoint<Fp>> pts;
};

PointPool distinct_points(std::mt19937_64& rng, int dim, int count, const Fp& unit, std::uint64_t prime) {
    PointPool pool;
    int guard = 0;
    while (static_cast<int>(pool.pts.size()) < count) {
        if (++guard > 20000) throw retry_exhausted_error("could not draw enough distinct points");
        std::vector<std::int64_t> c(dim + 1);
        bool all_zero = true;
        for (auto& v : c) {
            v = static_cast<std::int64_t>(rnd_below(rng, prime));
            all_zero = all_zero && v == 0;
        }
        if (all_zero) continue;
        std::vector<Fp> fc;
        for (auto v : c) fc.push_back(unit.of(v));
        ProjPoint<Fp> p = ProjPoint<Fp>::normalized(std::move(fc));
        bool dup = false;
        for (const auto& q : pool.pts)
            if (q == p) { dup = true; break; }
        if (dup) continue;
        pool.raw.push_back(std::move(c));
        pool.pts.push_back(std::move(p));
    }
    return pool;
}

template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rnd_below(rng, i)]);
}

ConfigData gen_random(const GenSpec& s, std::mt19937_64& rng, const Fp& unit) {
    const int n = s.shape.factors();
    std::vector<PointPool> pools;
    for (int f = 0; f < n; ++f)
        pools.push_back(distinct_points(rng, s.shape.dims[f], 2 + static_cast<int>(rnd_below(rng, 3)), unit, s.prime));
    std::vector<std::vector<int>> cells;
    std::vector<int> idx(n, 0);
    for (;;) {
        cells.push_back(idx);
        int f = n - 1;
        while (f >= 0) {
            if (++idx[f] < static_cast<int>(pools[f].pts.size())) break;
            idx[f] = 0;
            --f;
        }
        if (f < 0) break;
    }
    shuffle_vec(cells, rng);
    const int k =
        1 + static_cast<int>(rnd_below(rng, std::min<std::uint64_t>(s.points, cells.size())));
    ConfigData d;
    d.shape = s.shape;
    d.prime = s.prime;
    d.seed = s.seed;
    for (int c = 0; c < k; ++c) {
        std::vector<std::vector<std::int64_t>> row;
        for (int f = 0; f < n; ++f) row.push_back(pools[f].raw[cells[c][f]]);
        d.points.push_back(std::move(row));
    }
    return d;
}

long long staircase_size(const std::vector<std::pair<int, int>>& corners) {
    long long size = 0;
    for (int i = 0; i <= corners.front().first; ++i) {
        int w = 0;
        for (const auto& [ik, jk] : corners)
            if (ik >= i) w = std::max(w, jk + 1);
        size += w;
    }
    return size;
}

ConfigData gen_star(const GenSpec& s, std::mt19937_64& rng, const Fp& unit) {
    if (s.shape.factors() != 2) throw invariant_error("star pattern needs a two-factor shape");
    std::vector<std::pair<int, int>> corners = s.corners;
    if (!corners.empty()) {
        for (std::size_t k = 0; k + 1 < corners.size(); ++k)
            if (!(corners[k].first > corners[k + 1].first && corners[k].second < corners[k + 1].second))
                throw invariant_error("corner profile must have i strictly decreasing, j strictly increasing");
    } else {
        for (int attempt = 0;; ++attempt) {
            const int t = 1 + static_cast<int>(rnd_below(rng, 3));
            std::set<int> is_, js_;
            while (static_cast<int>(is_.size()) < t) is_.insert(static_cast<int>(rnd_below(rng, 5)));
            while (static_cast<int>(js_.size()) < t) js_.insert(static_cast<int>(rnd_below(rng, 5)));
            std::vector<int> iv(is_.rbegin(), is_.rend()), jv(js_.begin(), js_.end());
            corners.clear();
            for (int k = 0; k < t; ++k) corners.emplace_back(iv[k], jv[k]);
            if (staircase_size(corners) <= s.points) break;
            if (attempt >= 50) {
                int r = std::max(1, std::min(2, s.points));
                int c = std::max(1, s.points / r);
                corners = {{r - 1, c - 1}};
                break;
            }
        }
    }
    const int rows = corners.front().first + 1;
    const int cols = corners.back().second + 1;
    PointPool rp = distinct_points(rng, s.shape.dims[0], rows, unit, s.prime);
    PointPool cp = distinct_points(rng, s.shape.dims[1], cols, unit, s.prime);
    ConfigData d;
    d.shape = s.shape;
    d.prime = s.prime;
    d.seed = s.seed;
    for (int i = 0; i < rows; ++i) {
        int w = 0;
        for (const auto& [ik, jk] : corners)
            if (ik >= i) w = std::max(w, jk + 1);
        for (int j = 0; j < w; ++j) d.points.push_back({rp.raw[i], cp.raw[j]});
    }
    return d;
}

ConfigData gen_inclusion(const GenSpec& s, std::mt19937_64& rng, const Fp& unit) {
    if (s.shape.factors() < 2) throw invariant_error("inclusion pattern needs at least two factors");
    const int t = std::max(1, s.levels);
    const FactorShape trailing = s.shape.omitting(1);
    const int per = std::max(1, s.points / t);

    // Trailing points per level (point = one coordinate tuple per trailing
    // factor), nested downward.
    std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> level_pts(t);
    if (trailing.factors() == 1) {
        const int m1 = 1 + static_cast<int>(rnd_below(rng, std::min(5, per)));
        PointPool pool = distinct_points(rng, trailing.dims[0], m1, unit, s.prime);
        std::vector<int> cur(m1);
        std::iota(cur.begin(), cur.end(), 0);
        for (int u = 0; u < t; ++u) {
            for (int k : cur) level_pts[u].push_back({pool.raw[k]});
            std::vector<int> next = cur;
            shuffle_vec(next, rng);
            next.resize(1 + rnd_below(rng, next.size()));
            std::sort(next.begin(), next.end());
            cur = std::move(next);
        }
    } else if (trailing.factors() == 2) {
        // A chain of downward-closed width profiles: every level is a
        // staircase (hence ACM) and the chain is nested.
        const int r = 1 + static_cast<int>(rnd_below(rng, 2));
        std::vector<int> w(r);
        w[0] = 1 + static_cast<int>(rnd_below(rng, std::max(1, std::min(3, per - (r - 1)))));
        for (int i = 1; i < r; ++i) w[i] = 1 + static_cast<int>(rnd_below(rng, w[i - 1]));
        PointPool rp = distinct_points(rng, trailing.dims[0], r, unit, s.prime);
        PointPool cp = distinct_points(rng, trailing.dims[1], w[0], unit, s.prime);
        std::vector<int> cur = w;
        for (int u = 0; u < t; ++u) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < cur[i]; ++j) level_pts[u].push_back({rp.raw[i], cp.raw[j]});
            std::vector<int> next(r);
            int cap = cur[0];
            for (int i = 0; i < r; ++i) {
                next[i] = static_cast<int>(rnd_below(rng, cur[i] + 1));
                next[i] = std::min(next[i], cap);
                cap = next[i];
            }
            if (next[0] == 0) next[0] = 1;
            cur = std::move(next);
        }
    } else {
        // Nested grids of per-factor prefixes; grids are ACM.
        const int nf = trailing.factors();
        std::vector<int> sz(nf, 1);
        long long total = 1;
        for (int f = 0; f < nf; ++f) {
            int grow = 1 + static_cast<int>(rnd_below(rng, 2));
            if (total * grow <= per) {
                sz[f] = grow;
                total *= grow;
            }
        }
        std::vector<PointPool> pools;
        for (int f = 0; f < nf; ++f) pools.push_back(distinct_points(rng, trailing.dims[f], sz[f], unit, s.prime));
        std::vector<int> cur = sz;
        for (int u = 0; u < t; ++u) {
            std::vector<int> idx(nf, 0);
            for (;;) {
                std::vector<std::vector<std::int64_t>> tup;
                for (int f = 0; f < nf; ++f) tup.push_back(pools[f].raw[idx[f]]);
                level_pts[u].push_back(std::move(tup));
                int f = nf - 1;
                while (f >= 0) {
                    if (++idx[f] < cur[f]) break;
                    idx[f] = 0;
                    --f;
                }
                if (f < 0) break;
            }
            for (int f = 0; f < nf; ++f) cur[f] = 1 + static_cast<int>(rnd_below(rng, cur[f]));
        }
    }

    PointPool rows = distinct_points(rng, s.shape.dims[0], t, unit, s.prime);
    ConfigData d;
    d.shape = s.shape;
    d.prime = s.prime;
    d.seed = s.seed;
    for (int u = 0; u < t; ++u)
        for (const auto& tp : level_pts[u]) {
            std::vector<std::vector<std::int64_t>> row = {rows.raw[u]};
            row.insert(row.end(), tp.begin(), tp.end());
            d.points.push_back(std::move(row));
        }
    return d;
}

ConfigData gen_ab(const GenSpec& s, std::mt19937_64& rng, const Fp& unit) {
    if (s.shape.factors() != 2 || s.shape.dims[0] != 1 || s.shape.dims[1] < 2)
        throw invariant_error("ab pattern needs shape (1, n) with n >= 2");
    if (s.levels < 2) throw invariant_error("ab pattern needs at least two levels");
    if (s.n0 < 2) throw invariant_error("ab pattern needs N0 >= 2");
    if (s.n1 < 0) throw invariant_error("ab pattern needs N1 >= 0");
    if (s.n1 == 0 && s.n0 < s.levels) throw invariant_error("N1 = 0 needs N0 >= levels to keep all levels nonempty");
    const int t = s.levels;

    for (int attempt = 0; attempt < 32; ++attempt) {
        PointPool rows = distinct_points(rng, 1, t, unit, s.prime);
        PointPool cols = distinct_points(rng, s.shape.dims[1], s.n0 + s.n1, unit, s.prime);

        std::vector<std::vector<int>> owner(s.n0);
        if (!s.intersect_allowed) {
            for (int m = 0; m < s.n0; ++m) {
                int r;
                if (s.n1 == 0)
                    r = m < t ? m : static_cast<int>(rnd_below(rng, t));
                else
                    r = m < 2 ? m : static_cast<int>(rnd_below(rng, t));
                owner[m] = {r};
            }
        } else {
            for (int m = 0; m < s.n0; ++m) {
                std::vector<int> all(t);
                std::iota(all.begin(), all.end(), 0);
                shuffle_vec(all, rng);
                int first = s.n1 == 0 ? m % t : all[0];
                std::set<int> chosen = {first};
                int extras = static_cast<int>(rnd_below(rng, t - 1));
                for (int e = 0; e < extras && static_cast<int>(chosen.size()) < t - 1; ++e) chosen.insert(all[e + 1]);
                owner[m] = std::vector<int>(chosen.begin(), chosen.end());
            }
        }

        ConfigData d;
        d.shape = s.shape;
        d.prime = s.prime;
        d.seed = s.seed;
        for (int r = 0; r < t; ++r)
            for (int b = 0; b < s.n1; ++b) d.points.push_back({rows.raw[r], cols.raw[s.n0 + b]});
        for (int m = 0; m < s.n0; ++m)
            for (int r : owner[m]) d.points.push_back({rows.raw[r], cols.raw[m]});

        Configuration<Fp> x = to_configuration(d, unit);
        if (static_cast<int>(level_sets(x, 1).classes.size()) != t) continue;
        ABPartition<Fp> ab = ab_partition(x);
        if (ab.n0 != s.n0 || ab.n1 != s.n1) continue;
        Thm47Report rep = thm47_hypotheses(x, unit);
        if (!rep.no_inclusion || !rep.genericity) continue;
        if (!s.intersect_allowed && !rep.pairwise_in_by) continue;
        return d;
    }
    throw retry_exhausted_error("ab pattern failed certification after 32 attempts");
}

}  // namespace

ConfigData generate(const GenSpec& spec) {
    Fp unit = fp_unit(spec.prime);
    std::mt19937_64 rng(splitmix64(spec.seed));
    switch (spec.pattern) {
        case Pattern::Random: return gen_random(spec, rng, unit);
        case Pattern::Star: return gen_star(spec, rng, unit);
        case Pattern::Inclusion: return gen_inclusion(spec, rng, unit);
        case Pattern::AB: return gen_ab(spec, rng, unit);
    }
    throw error("unknown generation pattern");
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
SuiteReport run_suite(const std::string& name, int cases, std::uint64_t seed, F&& body) {
    SuiteReport rep;
    rep.suite = name;
    rep.cases = cases;
    auto t0 = Clock::now();
    for (int i = 0; i < cases; ++i) {
        std::uint64_t cs = mix_seed(seed, static_cast<std::uint64_t>(i));
        std::string note;
        bool ok = false;
        try {
            ok = body(i, cs, note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (ok)
            ++rep.passed;
        else {
            ++rep.failed;
            rep.failures.push_back(CaseFailure{i, cs, note});
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
}

// Shared by the decomposition and star-ACM suites so the same seed
// exercises the same configurations in both.
ConfigData star_case(int i, std::uint64_t cs) {
    GenSpec gs;
    gs.seed = cs;
    gs.pattern = Pattern::Star;
    gs.points = 10;
    std::mt19937_64 r(splitmix64(cs ^ 0x5741u));
    gs.shape = FactorShape({1 + static_cast<int>(rnd_below(r, 3)), 1 + static_cast<int>(rnd_below(r, 3))});
    (void)i;
    return generate(gs);
}

struct AbParams {
    int n0, n1, t;
};
const std::vector<AbParams> kMembers2 = {{2, 1, 2}, {2, 3, 2}, {2, 4, 2}, {3, 3, 2}, {2, 1, 3}, {2, 3, 3}};
const std::vector<AbParams> kNonMembers2 = {{2, 2, 2}, {2, 5, 2}, {3, 1, 2}, {3, 2, 2}, {3, 4, 2}, {2, 2, 3}};

ConfigData ab_case(std::uint64_t cs, int n, const AbParams& p, bool intersect) {
    GenSpec gs;
    gs.seed = cs;
    gs.pattern = Pattern::AB;
    gs.shape = FactorShape({1, n});
    gs.n0 = p.n0;
    gs.n1 = p.n1;
    gs.levels = p.t;
    gs.intersect_allowed = intersect;
    gs.points = p.n0 + p.n1 * p.t;
    return generate(gs);
}

bool examples_case(int i, std::uint64_t cs, std::string& note, const Fp& unit) {
    const FactorShape shape({1, 2});
    auto build = [&](const std::vector<std::pair<int, int>>& cells,
                     const std::vector<std::vector<std::int64_t>>& qs) {
        std::vector<std::vector<std::vector<std::int64_t>>> rows;
        for (const auto& [p, q] : cells) rows.push_back({{1, p}, qs[q]});
        return Configuration<Fp>::from_integers(shape, rows, unit);
    };
    if (i == 0) {
        // Four points over two rows; one shared column.
        const std::vector<std::vector<std::int64_t>> qs = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        std::vector<ProjPoint<Fp>> qpts;
        for (const auto& q : qs) {
            std::vector<Fp> c;
            for (auto v : q) c.push_back(unit.of(v));
            qpts.push_back(ProjPoint<Fp>::normalized(c));
        }
        if (!certify_genericity(qpts, {}, unit)) { note = "column points failed genericity"; return false; }
        Configuration<Fp> x = build({{1, 0}, {2, 1}, {1, 2}, {2, 2}}, qs);
        if (has_star(x)) { note = "expected no (*)-property"; return false; }
        Ideal<Fp> ix = config_ideal(x, unit);
        AcmVerdict<Fp> v = acm_decide(x, ix, 3, cs, unit);
        if (!v.acm) { note = "expected ACM"; return false; }
        if (!verify_witness(ix, v.witness->forms, unit)) { note = "witness failed re-verification"; return false; }
        auto fp = acm_fast_paths(x, 3, cs, unit);
        if (!fp || !fp->acm || fp->path != "thm-4.8") { note = "expected fast path thm-4.8"; return false; }
        return true;
    }
    if (i == 1) {
        // Six points (not ACM), then eight points (ACM again).
        const std::vector<std::vector<std::int64_t>> qs = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}};
        std::vector<ProjPoint<Fp>> qpts;
        for (const auto& q : qs) {
            std::vector<Fp> c;
            for (auto v : q) c.push_back(unit.of(v));
            qpts.push_back(ProjPoint<Fp>::normalized(c));
        }
        if (!certify_genericity(qpts, {}, unit)) { note = "column points failed genericity"; return false; }
        Configuration<Fp> xp = build({{1, 0}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}}, qs);
        AcmVerdict<Fp> vp = acm_decide(xp, 3, cs, unit);
        if (vp.acm) { note = "expected X' not ACM"; return false; }
        if (static_cast<int>(vp.failures.size()) != 3) { note = "expected 3 recorded trial failures"; return false; }
        Configuration<Fp> xpp = build({{1, 0}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}, qs);
        Ideal<Fp> ixpp = config_ideal(xpp, unit);
        AcmVerdict<Fp> vpp = acm_decide(xpp, ixpp, 3, cs, unit);
        if (!vpp.acm) { note = "expected X'' ACM"; return false; }
        if (!verify_witness(ixpp, vpp.witness->forms, unit)) { note = "X'' witness failed"; return false; }
        return true;
    }
    // D-membership table for N0 = 4, n = 2 over 0..35.
    const std::set<long long> expected = {6, 10, 11, 15, 16, 17, 21, 22, 23, 24, 28, 29, 30, 31, 32};
    for (long long n1 = 0; n1 <= 35; ++n1) {
        bool member = d_membership(4, n1, 2).has_value();
        if (member != (expected.count(n1) > 0)) {
            note = "D-table mismatch at n1=" + std::to_string(n1);
            return false;
        }
    }
    return true;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"lemma-3.4", "prop-3.2",  "thm-decomposition",
                                                   "thm-star-acm", "lemma-4.5", "thm-4.7",
                                                   "thm-4.8",      "examples"};
    return names;
}

const std::vector<std::string>& scan_conjecture_names() {
    static const std::vector<std::string> names = {"conj-3.9", "conj-4.10"};
    return names;
}

SuiteReport verify(const std::string& suite, int cases, std::uint64_t seed) {
    const Fp unit = fp_unit(kDefaultPrime);

    if (suite == "lemma-3.4") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            GenSpec gs;
            gs.seed = cs;
            gs.points = 10;
            std::mt19937_64 r(splitmix64(cs ^ 0x34u));
            gs.shape = FactorShape({1 + static_cast<int>(rnd_below(r, 3)), 1 + static_cast<int>(rnd_below(r, 3))});
            gs.pattern = (i % 3 == 1) ? Pattern::Star : Pattern::Random;
            ConfigData d = generate(gs);
            if (i % 3 == 2 && d.points.size() > 1) d.points.erase(d.points.begin() + rnd_below(r, d.points.size()));
            Configuration<Fp> x = to_configuration(d, unit);
            bool star = has_star(x), incl = has_inclusion(x, 1);
            if (star != incl) {
                note = "star=" + std::to_string(star) + " inclusion=" + std::to_string(incl);
                return false;
            }
            return true;
        });
    }

    if (suite == "prop-3.2") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            GenSpec gs;
            gs.seed = cs;
            gs.pattern = Pattern::Inclusion;
            std::mt19937_64 r(splitmix64(cs ^ 0x32u));
            gs.levels = 2 + static_cast<int>(rnd_below(r, 2));
            gs.shape = (i % 2) ? FactorShape({1, 1, 2}) : FactorShape({1, 2});
            gs.points = 8;
            ConfigData d = generate(gs);
            Configuration<Fp> x = to_configuration(d, unit);
            std::function<bool(const Configuration<Fp>&)> oracle;
            if (x.shape().factors() >= 3)
                oracle = [&](const Configuration<Fp>& img) { return acm_decide(img, 3, mix_seed(cs, 7), unit).acm; };
            if (!has_inclusion(x, 1, oracle)) { note = "generated configuration lacks inclusion"; return false; }
            RingPtr ring = make_ring(x.shape());
            auto [levels, forms] = bdl_data(x, ring, unit);
            Ideal<Fp> lhs = bdl_ideal(levels, forms, ring, unit);
            Ideal<Fp> ci = config_ideal(x, ring, unit);
            if (!lhs.equals(ci)) { note = "bdl sum differs from the configuration ideal"; return false; }
            if (!acm_decide(x, ci, 3, cs, unit).acm) { note = "expected ACM"; return false; }
            return true;
        });
    }

    if (suite == "thm-decomposition") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            ConfigData d = star_case(i, cs);
            Configuration<Fp> x = to_configuration(d, unit);
            RingPtr ring = make_ring(x.shape());
            Staircase<Fp> st = staircase(x);
            if (!staircase_ideal(st, ring, unit).equals(config_ideal(x, ring, unit))) {
                note = "staircase sum differs from the configuration ideal";
                return false;
            }
            return true;
        });
    }

    if (suite == "thm-star-acm") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            ConfigData d = star_case(i, cs);
            Configuration<Fp> x = to_configuration(d, unit);
            if (!acm_decide(x, 3, cs, unit).acm) { note = "expected ACM"; return false; }
            return true;
        });
    }

    if (suite == "lemma-4.5") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            std::mt19937_64 r(splitmix64(cs ^ 0x45u));
            const int n = 2 + i % 2;
            GenSpec gs;
            gs.seed = cs;
            gs.shape = FactorShape({1, n});
            const int mode = i % 3;
            if (mode == 0) {
                gs.pattern = Pattern::Star;
                gs.points = 8;
            } else if (mode == 1) {
                gs.pattern = Pattern::Inclusion;
                gs.levels = 2 + static_cast<int>(rnd_below(r, 2));
                gs.points = 8;
            } else {
                gs.pattern = Pattern::AB;
                gs.intersect_allowed = false;
                static const std::vector<AbParams> m2 = {{2, 1, 2}, {2, 3, 2}, {3, 3, 2}};
                static const std::vector<AbParams> m3 = {{2, 1, 2}, {2, 2, 2}, {3, 1, 2}};
                const AbParams& p = (n == 2) ? m2[rnd_below(r, m2.size())] : m3[rnd_below(r, m3.size())];
                gs.n0 = p.n0;
                gs.n1 = p.n1;
                gs.levels = p.t;
            }
            Configuration<Fp> x = to_configuration(generate(gs), unit);
            if (!acm_decide(x, 3, cs, unit).acm) { note = "generated configuration is not ACM"; return false; }
            GenFactorReport<Fp> rep = generator_factorization_check(x, true, unit);
            if (!rep.factorable_basis) { note = "a degree has no factorable generating basis"; return false; }
            if (!rep.all_residuals_in_image) { note = "a residual failed the image membership"; return false; }
            return true;
        });
    }

    if (suite == "thm-4.7") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            std::mt19937_64 r(splitmix64(cs ^ 0x47u));
            const bool member = i % 2 == 0;
            const auto& table = member ? kMembers2 : kNonMembers2;
            const AbParams& p = table[rnd_below(r, table.size())];
            ConfigData d = ab_case(cs, 2, p, false);
            Configuration<Fp> x = to_configuration(d, unit);
            Thm47Report rep = thm47_hypotheses(x, unit);
            if (!rep.applicable()) { note = "hypotheses not certified"; return false; }
            if (rep.d_member != member) { note = "generated instance on the wrong side of D"; return false; }
            bool acm = acm_decide(x, 3, cs, unit).acm;
            if (acm != member) {
                note = "acm=" + std::to_string(acm) + " but d_member=" + std::to_string(member);
                return false;
            }
            return true;
        });
    }

    if (suite == "thm-4.8") {
        return run_suite(suite, cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            std::mt19937_64 r(splitmix64(cs ^ 0x48u));
            static const std::vector<AbParams> members = {{2, 1, 2}, {2, 3, 2}, {2, 4, 2}, {3, 3, 2}, {2, 3, 3}};
            const AbParams& p = members[rnd_below(r, members.size())];
            ConfigData d = ab_case(cs, 2, p, true);
            Configuration<Fp> x = to_configuration(d, unit);
            if (!acm_decide(x, 3, cs, unit).acm) { note = "expected ACM"; return false; }
            if (i % 3 == 2) {
                // One-point extension: an open cell under an A-column.
                ABPartition<Fp> ab = ab_partition(x);
                std::optional<MultiPoint<Fp>> p_new;
                for (const auto& q : eta(ab.a_part, 2)) {
                    for (const auto& base : ab.level_bases) {
                        MultiPoint<Fp> cand;
                        cand.parts = {base, q};
                        if (!x.contains(cand)) { p_new = cand; break; }
                    }
                    if (p_new) break;
                }
                if (!p_new) { note = "no open cell for the extension step"; return false; }
                Thm48Result<Fp> res = thm48_saturation_claim(x, *p_new, 3, cs, unit);
                if (!res.violated_precondition.empty()) {
                    note = "claim precondition violated: " + res.violated_precondition;
                    return false;
                }
                if (!res.holds) { note = "saturation identity failed"; return false; }
            }
            return true;
        });
    }

    if (suite == "examples") {
        (void)cases;
        return run_suite(suite, 3, seed,
                         [&](int i, std::uint64_t cs, std::string& note) { return examples_case(i, cs, note, unit); });
    }

    throw invariant_error("unknown suite '" + suite + "'");
}

SuiteReport scan(const std::string& conjecture, const ScanBudget& budget, std::uint64_t seed) {
    const Fp unit = fp_unit(kDefaultPrime);
    const Rat runit(1);

    if (conjecture == "conj-3.9") {
        std::vector<FactorShape> shapes;
        for (const auto& dims : std::vector<std::vector<int>>{{2, 1, 1}, {1, 1, 2}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}})
            if (FactorShape(dims).ambient_vars() <= budget.max_ambient_vars) shapes.push_back(FactorShape(dims));
        if (shapes.empty()) throw invariant_error("ambient-variable budget admits no scan shapes");
        return run_suite(conjecture, budget.cases, seed, [&, shapes](int i, std::uint64_t cs, std::string& note) {
            GenSpec gs;
            gs.seed = cs;
            gs.pattern = Pattern::Inclusion;
            gs.shape = shapes[i % shapes.size()];
            std::mt19937_64 r(splitmix64(cs ^ 0x39u));
            gs.levels = 2 + static_cast<int>(rnd_below(r, 2));
            gs.points = std::min(8, budget.max_points);
            ConfigData d = generate(gs);
            Configuration<Fp> x = to_configuration(d, unit);
            std::function<bool(const Configuration<Fp>&)> oracle = [&](const Configuration<Fp>& img) {
                return acm_decide(img, 3, mix_seed(cs, 11), unit).acm;
            };
            if (!has_inclusion(x, 1, oracle)) { note = "generation: inclusion check failed"; return false; }
            if (acm_decide(x, 3, cs, unit).acm) return true;
            // Candidate: only report if it survives the exact-rational recheck.
            Configuration<Rat> xr = to_configuration(d, runit);
            if (acm_decide(xr, 3, cs, runit).acm) return true;  // prime-field artifact
            note = "counterexample candidate (reproduced over Q):\n" + serialize_config(d);
            return false;
        });
    }

    if (conjecture == "conj-4.10") {
        return run_suite(conjecture, budget.cases, seed, [&](int i, std::uint64_t cs, std::string& note) {
            std::mt19937_64 r(splitmix64(cs ^ 0x410u));
            std::vector<AbParams> usable;
            for (const auto& p : kNonMembers2)
                if (p.n0 + p.n1 * p.t <= budget.max_points) usable.push_back(p);
            if (usable.empty()) { note = "point budget admits no instances"; return false; }
            const AbParams& p = usable[rnd_below(r, usable.size())];
            ConfigData d = ab_case(cs, 2, p, true);
            Configuration<Fp> x = to_configuration(d, unit);
            (void)i;
            if (!acm_decide(x, 3, cs, unit).acm) return true;
            Configuration<Rat> xr = to_configuration(d, runit);
            if (!acm_decide(xr, 3, cs, runit).acm) return true;  // prime-field artifact
            note = "counterexample candidate (ACM over Q with N1 outside D):\n" + serialize_config(d);
            return false;
        });
    }

    throw invariant_error("unknown conjecture '" + conjecture + "'");
}

}  // namespace acm
