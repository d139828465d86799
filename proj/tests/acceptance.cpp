// Acceptance suite: one pass/fail line per criterion. All algebra is exact,
// so every comparison is exact equality; randomized criteria pin their
// seeds and trial counts, and each criterion carries a wall-clock bound.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "acm/acm.hpp"
#include "acm/lab.hpp"
#include "acm/rng.hpp"

using namespace acm;

namespace {

const Fp kUnit(1, kDefaultPrime);
constexpr std::uint64_t kSeed = 20250811;

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    bool passed;
    double elapsed_s;
    std::string detail;
};

std::vector<Criterion> g_results;

template <class F>
void criterion(int id, const std::string& name, double limit_s, F&& body) {
    Criterion c{id, name, limit_s, false, 0.0, ""};
    auto t0 = std::chrono::steady_clock::now();
    try {
        c.detail = body();
        c.passed = c.detail.empty();
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    c.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.passed && c.elapsed_s > c.limit_s) {
        c.passed = false;
        c.detail = "runtime " + std::to_string(c.elapsed_s) + " s exceeds " + std::to_string(limit_s) + " s";
    }
    g_results.push_back(c);
    std::ostringstream line;
    line << (c.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << name << "  (" << std::fixed
         << std::setprecision(2) << c.elapsed_s << " s, limit " << limit_s << " s)";
    if (!c.passed) line << "  -- " << c.detail;
    std::cout << line.str() << std::endl;
}

std::string suite_detail(const SuiteReport& r) {
    if (r.failed == 0) return "";
    std::string d = std::to_string(r.failed) + "/" + std::to_string(r.cases) + " cases failed;";
    for (const auto& f : r.failures) {
        d += " [case " + std::to_string(f.index) + " seed " + std::to_string(f.seed) + ": " + f.note + "]";
        if (d.size() > 400) break;
    }
    return d;
}

Configuration<Fp> cfg(const FactorShape& shape, const std::vector<std::vector<std::vector<std::int64_t>>>& rows) {
    return Configuration<Fp>::from_integers(shape, rows, kUnit);
}

const std::vector<std::vector<std::int64_t>> kGenericPlane = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}};

Configuration<Fp> paper_config(const std::vector<std::pair<int, int>>& cells) {
    std::vector<std::vector<std::vector<std::int64_t>>> rows;
    for (const auto& [p, q] : cells) rows.push_back({{1, p}, kGenericPlane[q]});
    return cfg(FactorShape({1, 2}), rows);
}

}  // namespace

int main() {
    std::cout << "acceptance suite (prime " << kDefaultPrime << ", seed " << kSeed << ")\n";

    criterion(1, "four-point example: no (*) but ACM with verified witness", 5.0, []() -> std::string {
        auto x = paper_config({{1, 0}, {2, 1}, {1, 2}, {2, 2}});
        std::vector<ProjPoint<Fp>> qs;
        for (int q : {0, 1, 2}) {
            std::vector<Fp> c;
            for (auto v : kGenericPlane[q]) c.push_back(kUnit.of(v));
            qs.push_back(ProjPoint<Fp>::normalized(c));
        }
        if (!certify_genericity(qs, {}, kUnit)) return "column points are not certified generic";
        if (has_star(x)) return "expected the (*)-property to fail";
        Ideal<Fp> ix = config_ideal(x, kUnit);
        auto v = acm_decide(x, ix, 3, kSeed, kUnit);
        if (!v.acm) return "expected ACM";
        if (!v.witness || !verify_witness(ix, v.witness->forms, kUnit)) return "witness did not re-verify";
        return "";
    });

    criterion(2, "six-point example not ACM; eight-point extension ACM", 30.0, []() -> std::string {
        auto xp = paper_config({{1, 0}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}});
        auto vp = acm_decide(xp, 3, kSeed, kUnit);
        if (vp.acm) return "expected the six-point set to fail ACM";
        if (static_cast<int>(vp.failures.size()) != 3) return "expected three Monte Carlo failures";
        auto xpp = paper_config({{1, 0}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
        Ideal<Fp> ixpp = config_ideal(xpp, kUnit);
        auto vpp = acm_decide(xpp, ixpp, 3, kSeed, kUnit);
        if (!vpp.acm) return "expected the eight-point set to be ACM";
        if (!vpp.witness || !verify_witness(ixpp, vpp.witness->forms, kUnit)) return "witness did not re-verify";
        return "";
    });

    criterion(3, "D-membership table for N0=4, n=2 over 0..35", 1.0, []() -> std::string {
        const std::set<long long> expected = {6, 10, 11, 15, 16, 17, 21, 22, 23, 24, 28, 29, 30, 31, 32};
        for (long long n1 = 0; n1 <= 35; ++n1) {
            bool member = d_membership(4, n1, 2).has_value();
            if (member != (expected.count(n1) > 0)) return "mismatch at n1=" + std::to_string(n1);
        }
        // the last n0-1 = 3 values of each column block are excluded
        for (long long k = 4; k <= 8; ++k)
            for (long long n1 = binom(k + 1, 2) - 3; n1 <= binom(k + 1, 2) - 1; ++n1)
                if (d_membership(4, n1, 2).has_value()) return "block tail " + std::to_string(n1) + " not excluded";
        return "";
    });

    criterion(4, "star iff inclusion on 200 random two-factor configurations", 10.0,
              []() { return suite_detail(verify("lemma-3.4", 200, kSeed)); });

    criterion(5, "staircase decomposition + ACM on 50 (*)-configurations", 300.0, []() -> std::string {
        std::string d = suite_detail(verify("thm-decomposition", 50, kSeed));
        if (!d.empty()) return "decomposition: " + d;
        d = suite_detail(verify("thm-star-acm", 50, kSeed));
        if (!d.empty()) return "star-acm: " + d;
        return "";
    });

    criterion(6, "basic double linkage on 50 inclusion configurations", 300.0,
              []() { return suite_detail(verify("prop-3.2", 50, kSeed)); });

    criterion(7, "exact criterion (iff) on 50 disjoint-intersection instances", 600.0,
              []() { return suite_detail(verify("thm-4.7", 50, kSeed)); });

    criterion(8, "sufficiency with intersections: 30 instances + 10 saturation identities", 600.0,
              []() { return suite_detail(verify("thm-4.8", 30, kSeed)); });

    criterion(9, "product of two lines: decision equals (*) on 200 configurations", 120.0, []() -> std::string {
        for (int i = 0; i < 200; ++i) {
            std::uint64_t cs = mix_seed(kSeed ^ 0x9u, i);
            GenSpec gs;
            gs.seed = cs;
            gs.shape = FactorShape({1, 1});
            gs.points = 9;
            auto x = to_configuration(generate(gs), kUnit);
            bool star = has_star(x);
            bool acm = acm_decide(x, 3, cs, kUnit).acm;
            if (star != acm)
                return "case " + std::to_string(i) + " (seed " + std::to_string(cs) + "): star=" +
                       std::to_string(star) + " acm=" + std::to_string(acm);
        }
        return "";
    });

    criterion(10, "engine soundness: GB uniqueness, membership, saturation, Hilbert", 60.0, []() -> std::string {
        std::mt19937_64 rng(kSeed ^ 0x10u);
        // reduced-GB uniqueness under generator shuffles and rescaling
        for (int trial = 0; trial < 5; ++trial) {
            GenSpec gs;
            gs.seed = mix_seed(kSeed, 100 + trial);
            gs.shape = FactorShape({1, 2});
            gs.points = 6;
            auto x = to_configuration(generate(gs), kUnit);
            auto ring = make_ring(x.shape());
            Ideal<Fp> ix = config_ideal(x, ring, kUnit);
            std::vector<Poly<Fp>> gens = ix.gens();
            for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rnd_below(rng, i)]);
            for (auto& g : gens) g = g.scaled(kUnit.of(1 + static_cast<std::int64_t>(rnd_below(rng, kDefaultPrime - 1))));
            if (!Ideal<Fp>(ring, gens).equals(ix)) return "GB changed under generator shuffle";
            if (!is_saturated(ix, kUnit)) return "configuration ideal not saturated";
            Ideal<Fp> sat = saturation_irrelevant(ix, kUnit);
            if (!saturation_irrelevant(sat, kUnit).equals(sat)) return "saturation not idempotent";

            // membership iff vanishing at all components, sampled
            auto vanishes = [&](const Poly<Fp>& f) {
                for (const auto& p : x.points()) {
                    std::vector<Fp> vals;
                    for (const auto& part : p.parts)
                        for (const auto& c : part.coords) vals.push_back(c);
                    if (!f.evaluate(vals, kUnit).is_zero()) return false;
                }
                return true;
            };
            for (int k = 0; k < 10; ++k) {
                auto monos = monomials_of_multidegree(*ring, {static_cast<int>(rnd_below(rng, 3)),
                                                              static_cast<int>(rnd_below(rng, 3))});
                std::vector<Term<Fp>> ts;
                for (const auto& m : monos)
                    if (rnd_below(rng, 3) == 0)
                        ts.push_back({m, kUnit.of(static_cast<std::int64_t>(rnd_below(rng, kDefaultPrime)))});
                Poly<Fp> f = Poly<Fp>::from_terms(ring, ts);
                if (f.is_zero()) continue;
                if (ix.contains(f) != vanishes(f)) return "membership/vanishing mismatch";
            }
            const auto& gb = ix.groebner();
            Poly<Fp> member = Poly<Fp>::zero(ring);
            for (const auto& g : gb)
                member = member + g.times_term(Monomial::var(static_cast<int>(rnd_below(rng, 5))),
                                               kUnit.of(1 + static_cast<std::int64_t>(rnd_below(rng, 100))));
            if (!member.is_zero() && (!ix.contains(member) || !vanishes(member)))
                return "ideal combination not recognized as member";
        }
        // multigraded Hilbert function of the free ring
        auto ring = make_ring(FactorShape({1, 2}));
        Ideal<Fp> zero(ring, {});
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b)
                if (hilbert_multi(zero, {a, b}) != binom(a + 1, 1) * binom(b + 2, 2))
                    return "free-ring Hilbert value wrong at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return "";
    });

    criterion(11, "conjecture scans run clean (30 + 30 cases)", 900.0, []() -> std::string {
        ScanBudget b;
        b.cases = 30;
        std::string d = suite_detail(scan("conj-3.9", b, kSeed));
        if (!d.empty()) return "conj-3.9: " + d;
        d = suite_detail(scan("conj-4.10", b, kSeed));
        if (!d.empty()) return "conj-4.10: " + d;
        return "";
    });

    int failed = 0;
    double total = 0;
    for (const auto& c : g_results) {
        if (!c.passed) ++failed;
        total += c.elapsed_s;
    }
    std::cout << std::fixed << std::setprecision(2) << (g_results.size() - failed) << "/" << g_results.size()
              << " criteria passed in " << total << " s\n";
    return failed == 0 ? 0 : 1;
}
