#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acm/acm.hpp"
#include "acm/lab.hpp"
#include "acm/rng.hpp"

using namespace acm;

namespace {

const Fp kUnit(1, kDefaultPrime);

Configuration<Fp> cfg(const FactorShape& shape, const std::vector<std::vector<std::vector<std::int64_t>>>& rows) {
    return Configuration<Fp>::from_integers(shape, rows, kUnit);
}

Configuration<Fp> example_4pt() {
    return cfg(FactorShape({1, 2}), {
                                        {{1, 1}, {1, 0, 0}},
                                        {{1, 2}, {0, 1, 0}},
                                        {{1, 1}, {0, 0, 1}},
                                        {{1, 2}, {0, 0, 1}},
                                    });
}

Configuration<Fp> example_6pt() {
    return cfg(FactorShape({1, 2}), {
                                        {{1, 1}, {1, 0, 0}},
                                        {{1, 2}, {0, 1, 0}},
                                        {{1, 1}, {0, 0, 1}},
                                        {{1, 2}, {0, 0, 1}},
                                        {{1, 1}, {1, 1, 1}},
                                        {{1, 2}, {1, 1, 1}},
                                    });
}

Configuration<Fp> example_8pt() {
    return cfg(FactorShape({1, 2}), {
                                        {{1, 1}, {1, 0, 0}},
                                        {{1, 2}, {0, 1, 0}},
                                        {{1, 1}, {0, 0, 1}},
                                        {{1, 2}, {0, 0, 1}},
                                        {{1, 1}, {1, 1, 1}},
                                        {{1, 2}, {1, 1, 1}},
                                        {{1, 1}, {1, 2, 3}},
                                        {{1, 2}, {1, 2, 3}},
                                    });
}

// Random invertible change of coordinates in each factor, applied to the
// points (ACM-ness is a geometric property).
Configuration<Fp> random_coordinate_change(const Configuration<Fp>& x, std::mt19937_64& rng) {
    std::vector<std::vector<std::vector<Fp>>> mats;
    for (int a : x.shape().dims) {
        const int m = a + 1;
        std::vector<std::vector<Fp>> mat;
        for (;;) {
            mat.assign(m, std::vector<Fp>(m, kUnit.zero()));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    mat[i][j] = kUnit.of(static_cast<std::int64_t>(rnd_below(rng, kDefaultPrime)));
            if (matrix_rank(mat) == static_cast<std::size_t>(m)) break;
        }
        mats.push_back(std::move(mat));
    }
    std::vector<MultiPoint<Fp>> pts;
    for (const auto& p : x.points()) {
        MultiPoint<Fp> q;
        for (std::size_t f = 0; f < p.parts.size(); ++f) {
            const auto& mat = mats[f];
            std::vector<Fp> out(mat.size(), kUnit.zero());
            for (std::size_t i = 0; i < mat.size(); ++i)
                for (std::size_t j = 0; j < mat.size(); ++j) out[i] += mat[i][j] * p.parts[f].coords[j];
            q.parts.push_back(ProjPoint<Fp>::normalized(std::move(out)));
        }
        pts.push_back(std::move(q));
    }
    return Configuration<Fp>(x.shape(), std::move(pts));
}

Configuration<Fp> swap_factors(const Configuration<Fp>& x) {
    FactorShape s({x.shape().dims[1], x.shape().dims[0]});
    std::vector<MultiPoint<Fp>> pts;
    for (const auto& p : x.points()) {
        MultiPoint<Fp> q;
        q.parts = {p.parts[1], p.parts[0]};
        pts.push_back(std::move(q));
    }
    return Configuration<Fp>(s, std::move(pts));
}

}  // namespace

TEST_CASE("is_saturated on the worked examples") {
    auto ring = make_ring(FactorShape({1, 1}));
    auto x0 = Poly<Fp>::variable(ring, 0, kUnit);
    auto y0 = Poly<Fp>::variable(ring, 2, kUnit);
    auto y1 = Poly<Fp>::variable(ring, 3, kUnit);
    CHECK_FALSE(is_saturated(Ideal<Fp>(ring, {x0 * y0, x0 * y1}), kUnit));
    CHECK(is_saturated(config_ideal(example_4pt(), kUnit), kUnit));

    // nested-pair sum I_{V1} + I_{V2} I_{Z1} is saturated
    auto ring12 = make_ring(FactorShape({1, 2}));
    auto nested = cfg(FactorShape({1, 2}), {
                                               {{1, 1}, {1, 0, 0}},
                                               {{1, 1}, {0, 1, 0}},
                                               {{1, 1}, {0, 0, 1}},
                                               {{1, 2}, {0, 0, 1}},
                                           });
    auto st = staircase(nested);
    REQUIRE(st.corners.size() == 2);
    auto ch = vz_chains(st);
    Ideal<Fp> partial = ideal_sum(subset_ideal(ch.v[0], 1, ring12, kUnit),
                                  ideal_product(subset_ideal(ch.v[1], 1, ring12, kUnit),
                                                subset_ideal(ch.z[0], 2, ring12, kUnit)));
    CHECK(is_saturated(partial, kUnit));
}

TEST_CASE("acm_decide on the worked examples") {
    auto v4 = acm_decide(example_4pt(), 3, 42, kUnit);
    CHECK(v4.acm);
    REQUIRE(v4.witness.has_value());
    CHECK(v4.witness->forms.size() == 2);
    CHECK(verify_witness(example_4pt(), v4.witness->forms, kUnit));

    auto v6 = acm_decide(example_6pt(), 3, 42, kUnit);
    CHECK_FALSE(v6.acm);
    CHECK(v6.failures.size() == 3);
    CHECK_FALSE(v6.confidence_note.empty());

    auto v8 = acm_decide(example_8pt(), 3, 42, kUnit);
    CHECK(v8.acm);

    auto grid = cfg(FactorShape({1, 1}), {{{1, 0}, {1, 2}}, {{1, 0}, {1, 3}}, {{1, 1}, {1, 2}}, {{1, 1}, {1, 3}}});
    CHECK(acm_decide(grid, 3, 7, kUnit).acm);
}

TEST_CASE("acm_decide is seed-deterministic") {
    auto a = acm_decide(example_6pt(), 3, 123, kUnit);
    auto b = acm_decide(example_6pt(), 3, 123, kUnit);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
        CHECK(a.failures[i].step == b.failures[i].step);
        CHECK(a.failures[i].mismatch_degrees == b.failures[i].mismatch_degrees);
    }
}

TEST_CASE("a corrupted witness fails re-verification") {
    auto x = example_4pt();
    Ideal<Fp> ix = config_ideal(x, kUnit);
    auto v = acm_decide(x, ix, 3, 42, kUnit);
    REQUIRE(v.acm);
    // a level form is a zerodivisor, so it can never head a regular sequence
    auto ring = ix.ring();
    std::vector<Poly<Fp>> broken = {Poly<Fp>::variable(ring, 1, kUnit) - Poly<Fp>::variable(ring, 0, kUnit),
                                    v.witness->forms[1]};
    CHECK_FALSE(verify_witness(ix, broken, kUnit));
}

TEST_CASE("decision is invariant under coordinate changes and factor swap") {
    std::mt19937_64 rng(2718);
    for (const auto& x : {example_4pt(), example_6pt()}) {
        bool base = acm_decide(x, 3, 1, kUnit).acm;
        for (int trial = 0; trial < 2; ++trial) {
            auto y = random_coordinate_change(x, rng);
            CHECK(acm_decide(y, 3, mix_seed(9, trial), kUnit).acm == base);
        }
        CHECK(acm_decide(swap_factors(x), 3, 5, kUnit).acm == base);
    }
}

TEST_CASE("classification agreement in the product of two lines") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 12; ++trial) {
        GenSpec gs;
        gs.seed = mix_seed(31415, trial);
        gs.shape = FactorShape({1, 1});
        gs.points = 9;
        auto x = to_configuration(generate(gs), kUnit);
        CHECK(acm_decide(x, 3, gs.seed, kUnit).acm == has_star(x));
    }
}

TEST_CASE("fast paths") {
    // (*) short-circuit in a product of two planes
    GenSpec gs;
    gs.seed = 5;
    gs.pattern = Pattern::Star;
    gs.shape = FactorShape({2, 2});
    gs.points = 8;
    auto star_cfg = to_configuration(generate(gs), kUnit);
    auto fp1 = acm_fast_paths(star_cfg, 3, 1, kUnit);
    REQUIRE(fp1.has_value());
    CHECK(fp1->acm);
    CHECK(fp1->path == "star");
    CHECK(acm_decide(star_cfg, 3, 1, kUnit).acm);

    // the four-point example goes through the D-membership sufficiency
    auto fp2 = acm_fast_paths(example_4pt(), 3, 1, kUnit);
    REQUIRE(fp2.has_value());
    CHECK(fp2->acm);
    CHECK(fp2->path == "thm-4.8");

    // the six-point example is decided negatively by the iff criterion
    auto fp3 = acm_fast_paths(example_6pt(), 3, 1, kUnit);
    REQUIRE(fp3.has_value());
    CHECK_FALSE(fp3->acm);
    CHECK(fp3->path == "thm-4.7");

    // a non-star configuration in P^2 x P^2 has no fast path
    auto nostar = cfg(FactorShape({2, 2}), {
                                               {{1, 0, 0}, {1, 2, 3}},
                                               {{0, 1, 0}, {1, 5, 7}},
                                           });
    CHECK_FALSE(acm_fast_paths(nostar, 3, 1, kUnit).has_value());
    CHECK_THROWS_AS(acm_fast_paths(nostar, 3, 1, kUnit, false), error);

    // inclusion path with three factors recurses through the oracle
    GenSpec gi;
    gi.seed = 6;
    gi.pattern = Pattern::Inclusion;
    gi.shape = FactorShape({1, 1, 2});
    gi.levels = 2;
    gi.points = 6;
    auto incl_cfg = to_configuration(generate(gi), kUnit);
    auto fp4 = acm_fast_paths(incl_cfg, 3, 1, kUnit);
    REQUIRE(fp4.has_value());
    CHECK(fp4->acm);
    CHECK(fp4->path == "inclusion");
}

TEST_CASE("criterion hypotheses report") {
    auto rep = thm47_hypotheses(example_4pt(), kUnit);
    CHECK(rep.pairwise_in_by);
    CHECK(rep.genericity);
    CHECK(rep.no_inclusion);
    CHECK(rep.n0 == 2);
    CHECK(rep.n1 == 1);
    CHECK(rep.d_member);
    CHECK(rep.d_witness.value() == 0);
    CHECK(rep.applicable());

    auto grid = cfg(FactorShape({1, 2}), {
                                             {{1, 1}, {1, 0, 0}},
                                             {{1, 1}, {0, 1, 0}},
                                             {{1, 2}, {1, 0, 0}},
                                             {{1, 2}, {0, 1, 0}},
                                         });
    auto repg = thm47_hypotheses(grid, kUnit);
    CHECK_FALSE(repg.no_inclusion);

    // two levels sharing a column that a third level misses: the shared
    // point is not common to all levels, so (a) fails
    auto shared = cfg(FactorShape({1, 2}), {
                                               {{1, 1}, {1, 0, 0}},
                                               {{1, 1}, {0, 1, 0}},
                                               {{1, 2}, {1, 0, 0}},
                                               {{1, 2}, {0, 0, 1}},
                                               {{1, 3}, {1, 1, 1}},
                                           });
    auto reps = thm47_hypotheses(shared, kUnit);
    CHECK_FALSE(reps.pairwise_in_by);
}

TEST_CASE("saturation identity of the one-point extension") {
    // Start from the four-point example: columns Q1 (row 1), Q2 (row 2)
    // are the A-columns. The open cell (row 1, Q2) admits the extension.
    auto x = example_4pt();
    MultiPoint<Fp> p;
    p.parts = {ProjPoint<Fp>::normalized({kUnit.of(1), kUnit.of(1)}),
               ProjPoint<Fp>::normalized({kUnit.zero(), kUnit.one(), kUnit.zero()})};
    auto res = thm48_saturation_claim(x, p, 3, 42, kUnit);
    CHECK(res.violated_precondition.empty());
    CHECK(res.holds);
    CHECK(res.s == 1);  // one point shares Q2's column
    CHECK(res.r == 1);  // row [1,1] sees two generic columns: a linear form vanishes there
    CHECK(res.ok());
}

TEST_CASE("extension preconditions are reported by name") {
    auto x = example_4pt();
    MultiPoint<Fp> inside = x.points()[0];
    CHECK(thm48_saturation_claim(x, inside, 3, 1, kUnit).violated_precondition == "P-in-Xprime");

    MultiPoint<Fp> fresh_col;
    fresh_col.parts = {ProjPoint<Fp>::normalized({kUnit.of(1), kUnit.of(1)}),
                       ProjPoint<Fp>::normalized({kUnit.of(1), kUnit.of(9), kUnit.of(11)})};
    CHECK(thm48_saturation_claim(x, fresh_col, 3, 1, kUnit).violated_precondition == "pi1P-not-in-pi1AX");

    MultiPoint<Fp> fresh_row;
    fresh_row.parts = {ProjPoint<Fp>::normalized({kUnit.of(1), kUnit.of(9)}),
                       ProjPoint<Fp>::normalized({kUnit.zero(), kUnit.one(), kUnit.zero()})};
    CHECK(thm48_saturation_claim(x, fresh_row, 3, 1, kUnit).violated_precondition == "pi2P-not-in-pi2BX");

    MultiPoint<Fp> bad_shape;
    bad_shape.parts = {ProjPoint<Fp>::normalized({kUnit.one(), kUnit.zero(), kUnit.zero()}),
                       ProjPoint<Fp>::normalized({kUnit.one(), kUnit.zero(), kUnit.zero()})};
    Configuration<Fp> wrong = swap_factors(x);
    CHECK(thm48_saturation_claim(wrong, bad_shape, 3, 1, kUnit).violated_precondition == "shape");
}

TEST_CASE("rational-mode decision agrees on the worked examples") {
    Rat ru(1);
    auto over_q = [&](const Configuration<Fp>&, const std::vector<std::vector<std::vector<std::int64_t>>>& rows) {
        return Configuration<Rat>::from_integers(FactorShape({1, 2}), rows, ru);
    };
    auto x4 = over_q(example_4pt(), {
                                        {{1, 1}, {1, 0, 0}},
                                        {{1, 2}, {0, 1, 0}},
                                        {{1, 1}, {0, 0, 1}},
                                        {{1, 2}, {0, 0, 1}},
                                    });
    CHECK(acm_decide(x4, 3, 42, ru).acm);
    auto x6 = over_q(example_6pt(), {
                                        {{1, 1}, {1, 0, 0}},
                                        {{1, 2}, {0, 1, 0}},
                                        {{1, 1}, {0, 0, 1}},
                                        {{1, 2}, {0, 0, 1}},
                                        {{1, 1}, {1, 1, 1}},
                                        {{1, 2}, {1, 1, 1}},
                                    });
    CHECK_FALSE(acm_decide(x6, 3, 42, ru).acm);
}
