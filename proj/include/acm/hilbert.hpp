#pragma once

// Graded dimensions. Two independent routes are implemented on purpose:
// ideals are measured by counting standard monomials under their reduced
// Groebner basis, while finite point sets in a single projective space are
// measured by ranks of evaluation matrices. The point-set route also
// provides h-vectors, the generic-Hilbert-function test, and genericity
// certification.

#include <algorithm>
#include <vector>

#include "acm/geometry.hpp"
#include "acm/ideal.hpp"
#include "acm/linalg.hpp"

namespace acm {

inline std::vector<Monomial> monomials_of_multidegree(const Ring& ring, const std::vector<int>& d) {
    if (static_cast<int>(d.size()) != ring.shape.factors())
        throw invariant_error("multidegree has wrong length");
    std::vector<Monomial> acc = {Monomial::one()};
    for (int f = 0; f < ring.shape.factors(); ++f) {
        if (d[f] < 0) throw invariant_error("negative multidegree");
        int lo = ring.factor_lo[f], hi = lo + ring.shape.dims[f] + 1;
        std::vector<Monomial> block = monomials_of_block_degree(lo, hi, d[f]);
        std::vector<Monomial> next;
        next.reserve(acc.size() * block.size());
        for (const auto& a : acc)
            for (const auto& b : block) next.push_back(a * b);
        acc = std::move(next);
    }
    return acc;
}

namespace detail {
template <class K>
std::vector<Monomial> leading_monomials(const Ideal<K>& I) {
    std::vector<Monomial> lms;
    for (const auto& g : I.groebner()) lms.push_back(g.lm());
    return lms;
}
inline bool standard(const Monomial& m, const std::vector<Monomial>& lms) {
    for (const auto& l : lms)
        if (m.divisible_by(l)) return false;
    return true;
}
}  // namespace detail

// dim_k (R/I)_d for a multihomogeneous ideal: standard monomials of
// multidegree d under the reduced Groebner basis.
template <class K>
long long hilbert_multi(const Ideal<K>& I, const std::vector<int>& d) {
    for (const auto& g : I.gens())
        if (!g.is_multihomogeneous()) throw error("hilbert_multi needs a multihomogeneous ideal");
    auto lms = detail::leading_monomials(I);
    long long count = 0;
    for (const auto& m : monomials_of_multidegree(*I.ring(), d))
        if (detail::standard(m, lms)) ++count;
    return count;
}

// dim_k (R/I)_t in the standard grading.
template <class K>
long long hilbert_std(const Ideal<K>& I, int t) {
    for (const auto& g : I.gens())
        if (!g.is_multihomogeneous()) throw error("hilbert_std needs a homogeneous ideal");
    auto lms = detail::leading_monomials(I);
    long long count = 0;
    for (const auto& m : monomials_of_block_degree(0, I.ring()->nmain, t))
        if (detail::standard(m, lms)) ++count;
    return count;
}

// Hilbert function of a finite point set in a single projective space,
// evaluated by the rank of the degree-i evaluation matrix.
template <class K>
int points_hilbert(const std::vector<ProjPoint<K>>& pts, int i, const K& unit) {
    if (pts.empty()) throw invariant_error("Hilbert function of an empty point set");
    const int m = pts[0].dim();
    for (const auto& p : pts)
        if (p.dim() != m) throw invariant_error("points of mixed dimension");
    auto monos = monomials_of_block_degree(0, m + 1, i);
    std::vector<std::vector<K>> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<K> row;
        row.reserve(monos.size());
        for (const auto& mono : monos) {
            K v = unit.one();
            for (int x = 0; x <= m; ++x)
                for (int k = 0; k < mono.e[x]; ++k) v *= p.coords[x];
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return static_cast<int>(matrix_rank(rows));
}

// First difference of the Hilbert function, up to the last positive entry.
template <class K>
std::vector<int> h_vector(const std::vector<ProjPoint<K>>& pts, const K& unit) {
    const int s = static_cast<int>(pts.size());
    std::vector<int> h;
    int prev = 0;
    for (int i = 0;; ++i) {
        int cur = points_hilbert(pts, i, unit);
        h.push_back(cur - prev);
        if (cur == s) break;
        if (cur < prev || i > s + 2) throw error("internal: point Hilbert function failed to stabilize");
        prev = cur;
    }
    return h;
}

// H_Z(i) = min( C(i+m, m), #Z ) for all i.
template <class K>
bool is_generic_hf(const std::vector<ProjPoint<K>>& pts, const K& unit) {
    if (pts.empty()) return true;
    const int s = static_cast<int>(pts.size());
    const int m = pts[0].dim();
    for (int i = 0;; ++i) {
        long long expected = std::min<long long>(binom(i + m, m), s);
        if (points_hilbert(pts, i, unit) != expected) return false;
        if (expected == s) return true;
    }
}

// Genericity certificate: pairwise distinct and generic Hilbert function
// for the set and each listed subset.
template <class K>
bool certify_genericity(const std::vector<ProjPoint<K>>& pts,
                        const std::vector<std::vector<ProjPoint<K>>>& subsets, const K& unit) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (pts[a] == pts[b]) return false;
    if (!is_generic_hf(pts, unit)) return false;
    for (const auto& s : subsets)
        if (!is_generic_hf(s, unit)) return false;
    return true;
}

// Smallest t with (I_pts)_t != 0 in the single-space coordinate ring.
template <class K>
int initial_degree_of_points(const std::vector<ProjPoint<K>>& pts, const K& unit) {
    const int m = pts[0].dim();
    for (int t = 1;; ++t)
        if (points_hilbert(pts, t, unit) < binom(t + m, m)) return t;
}

template <class K>
struct MinGensEntry {
    std::vector<int> mdeg;
    int count = 0;
    std::vector<Poly<K>> reps;
};

namespace detail {
template <class K>
std::vector<K> coeff_vector(const Poly<K>& f, const std::vector<Monomial>& cols, const K& unit) {
    std::vector<K> row(cols.size(), unit.zero());
    for (const auto& t : f.terms()) {
        bool placed = false;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (cols[c] == t.m) { row[c] = t.c; placed = true; break; }
        if (!placed) throw error("internal: monomial outside the expected multidegree");
    }
    return row;
}
}  // namespace detail

// Minimal multihomogeneous generators, degree by degree: in each
// multidegree d (increasing total degree), new generators are Groebner
// elements of degree d that are independent of products of lower-degree
// elements of the ideal with monomials.
template <class K>
std::vector<MinGensEntry<K>> min_gens(const Ideal<K>& I, const K& unit) {
    for (const auto& g : I.gens())
        if (!g.is_multihomogeneous()) throw error("min_gens needs a multihomogeneous ideal");
    const auto& gb = I.groebner();
    if (gb.empty()) return {};
    const Ring& ring = *I.ring();

    std::vector<std::vector<int>> degs;
    for (const auto& g : gb) {
        auto d = *g.multidegree();
        if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
    std::sort(degs.begin(), degs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ta = 0, tb = 0;
        for (int x : a) ta += x;
        for (int x : b) tb += x;
        if (ta != tb) return ta < tb;
        return a < b;
    });

    std::vector<MinGensEntry<K>> out;
    for (const auto& d : degs) {
        auto cols = monomials_of_multidegree(ring, d);
        RowSpace<K> span;
        for (const auto& g : gb) {
            auto dg = *g.multidegree();
            if (dg == d) continue;
            bool below = true;
            std::vector<int> diff(d.size());
            for (std::size_t k = 0; k < d.size(); ++k) {
                diff[k] = d[k] - dg[k];
                if (diff[k] < 0) { below = false; break; }
            }
            if (!below) continue;
            for (const auto& u : monomials_of_multidegree(ring, diff))
                span.add(detail::coeff_vector(g.times_term(u, unit.one()), cols, unit));
        }
        MinGensEntry<K> entry;
        entry.mdeg = d;
        for (const auto& g : gb) {
            if (*g.multidegree() != d) continue;
            if (span.add(detail::coeff_vector(g, cols, unit))) {
                ++entry.count;
                entry.reps.push_back(g);
            }
        }
        if (entry.count) out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace acm
