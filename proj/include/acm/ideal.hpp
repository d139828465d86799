#pragma once

// Ideals with cached reduced Groebner bases, Buchberger's algorithm with
// the coprime and chain criteria, and the elimination-based ideal
// operations: sum, product, intersection, quotient, saturation.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "acm/poly.hpp"

namespace acm {

// Remainder of f under multivariate division by `basis`; no term of the
// result is divisible by any leading monomial of the basis.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis) {
    Poly<K> p = f;
    std::vector<Term<K>> rem;
    while (!p.is_zero()) {
        const Term<K>& lead = p.lt();
        const Poly<K>* div = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && lead.m.divisible_by(g.lm())) { div = &g; break; }
        if (div) {
            K c = lead.c / div->lc();
            p = p - div->times_term(lead.m / div->lm(), c);
        } else {
            rem.push_back(lead);
            p = p - Poly<K>::from_terms(p.ring(), {lead});
        }
    }
    return Poly<K>::from_terms(f.ring(), std::move(rem));
}

// Quotient of exact division, or nullopt when g does not divide f.
template <class K>
std::optional<Poly<K>> try_divide_exact(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw error("division by zero polynomial");
    Poly<K> p = f;
    std::vector<Term<K>> quot;
    while (!p.is_zero()) {
        const Term<K>& lead = p.lt();
        if (!lead.m.divisible_by(g.lm())) return std::nullopt;
        Term<K> t{lead.m / g.lm(), lead.c / g.lc()};
        quot.push_back(t);
        p = p - g.times_term(t.m, t.c);
    }
    return Poly<K>::from_terms(f.ring(), std::move(quot));
}

template <class K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g) {
    Monomial l = f.lm().lcm(g.lm());
    Poly<K> a = f.times_term(l / f.lm(), f.lc().inv());
    Poly<K> b = g.times_term(l / g.lm(), g.lc().inv());
    return a - b;
}

namespace detail {

template <class K>
std::vector<Poly<K>> interreduce(std::vector<Poly<K>> basis) {
    const MonoOrder& ord = basis.front().ring()->order;
    // Minimalize: drop elements whose leading monomial is divisible by
    // another's. Sorting by leading monomial first makes the scan one-pass.
    std::sort(basis.begin(), basis.end(),
              [&](const Poly<K>& a, const Poly<K>& b) { return ord.cmp(a.lm(), b.lm()) < 0; });
    std::vector<Poly<K>> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (g.lm().divisible_by(h.lm())) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(g));
    }
    // Tail-reduce each element against the others; leading monomials are
    // pairwise non-divisible so they survive reduction.
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(normal_form(minimal[i], others).monic());
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly<K>& a, const Poly<K>& b) { return ord.cmp(a.lm(), b.lm()) < 0; });
    return out;
}

}  // namespace detail

// Reduced Groebner basis under the ring's order. Pairs are popped by
// increasing lcm; the coprime criterion and the chain criterion (both
// cited pairs already treated) prune the queue.
template <class K>
std::vector<Poly<K>> buchberger(RingPtr ring, const std::vector<Poly<K>>& gens) {
    std::vector<Poly<K>> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return {};
    const MonoOrder& ord = ring->order;

    struct PairKey {
        Monomial l;
        int i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        int c = ord.cmp(a.l, b.l);
        if (c) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> pending(pair_less);
    std::set<std::pair<int, int>> treated;

    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) pending.insert(PairKey{basis[i].lm().lcm(basis[j].lm()), i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        treated.insert({pk.i, pk.j});

        const Monomial& lmi = basis[pk.i].lm();
        const Monomial& lmj = basis[pk.j].lm();
        if (lmi.coprime_with(lmj, ring->nvars())) continue;

        bool chain = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!pk.l.divisible_by(basis[k].lm())) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (treated.count(key(pk.i, k)) && treated.count(key(pk.j, k))) chain = true;
        }
        if (chain) continue;

        Poly<K> r = normal_form(spoly(basis[pk.i], basis[pk.j]), basis);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }
    return detail::interreduce(std::move(basis));
}

template <class K>
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly<K>> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!g.ring()->same(*ring_)) throw error("generator ring mismatch");
            gens_.push_back(std::move(g));
        }
    }

    // For results that are already a reduced Groebner basis in `ring`'s
    // order (e.g. restrictions of elimination bases); seeds the cache.
    static Ideal from_groebner(RingPtr ring, std::vector<Poly<K>> gb) {
        Ideal I(std::move(ring), std::move(gb));
        I.gb_ = std::make_shared<const std::vector<Poly<K>>>(I.gens_);
        return I;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly<K>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const std::vector<Poly<K>>& groebner() const {
        if (!gb_) gb_ = std::make_shared<const std::vector<Poly<K>>>(buchberger(ring_, gens_));
        return *gb_;
    }

    bool contains(const Poly<K>& f) const {
        if (!f.ring()->same(*ring_)) throw error("ring mismatch in membership test");
        return normal_form(f, groebner()).is_zero();
    }

    // Reduced Groebner bases are unique, so this is ideal equality.
    bool equals(const Ideal& o) const {
        if (!ring_->same(*o.ring_)) return false;
        const auto& a = groebner();
        const auto& b = o.groebner();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    }

    bool is_proper() const {
        const auto& g = groebner();
        return g.empty() || !g.front().lm().is_one(ring_->nvars());
    }

private:
    RingPtr ring_;
    std::vector<Poly<K>> gens_;
    mutable std::shared_ptr<const std::vector<Poly<K>>> gb_;
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
    if (!a.ring()->same(*b.ring())) throw error("ideal ring mismatch");
    std::vector<Poly<K>> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    if (!a.ring()->same(*b.ring())) throw error("ideal ring mismatch");
    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal<K>(a.ring(), std::move(gens));
}

// I n J via a single auxiliary variable t:  (t I + (1-t) J) n R.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b, const K& unit) {
    if (!a.ring()->same(*b.ring())) throw error("ideal ring mismatch");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>(a.ring(), {});
    RingPtr base = a.ring();
    RingPtr ext = with_aux(base, base->naux + 1);
    const int t = ext->aux_index(ext->naux - 1);
    Poly<K> tv = Poly<K>::variable(ext, t, unit);
    Poly<K> one_minus_t = Poly<K>::constant(ext, unit.one()) - tv;

    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens()) gens.push_back(tv * rering(f, ext));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * rering(g, ext));

    // The auxiliary-free part of a reduced elimination basis is itself a
    // reduced Groebner basis of the intersection in the base order.
    std::vector<Poly<K>> kept;
    for (const auto& g : buchberger(ext, gens)) {
        bool free = true;
        for (const auto& term : g.terms())
            if (term.m.e[t]) { free = false; break; }
        if (free) kept.push_back(rering(g, base));
    }
    return Ideal<K>::from_groebner(base, std::move(kept));
}

// (I : f), computed as (I n (f)) / f.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& a, const Poly<K>& f, const K& unit) {
    if (f.is_zero()) throw error("ideal quotient by zero polynomial");
    Ideal<K> inter = ideal_intersection(a, Ideal<K>(a.ring(), {f}), unit);
    std::vector<Poly<K>> gens;
    for (const auto& g : inter.groebner()) {
        auto q = try_divide_exact(g, f);
        if (!q) throw error("internal: inexact division in ideal quotient");
        gens.push_back(std::move(*q));
    }
    return Ideal<K>(a.ring(), std::move(gens));
}

// (I : J) as the intersection of (I : g) over the generators of J.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& a, const Ideal<K>& b, const K& unit) {
    if (!a.ring()->same(*b.ring())) throw error("ideal ring mismatch");
    if (b.is_zero_ideal()) throw error("ideal quotient by the zero ideal");
    std::optional<Ideal<K>> acc;
    for (const auto& g : b.gens()) {
        Ideal<K> q = ideal_quotient(a, g, unit);
        acc = acc ? ideal_intersection(*acc, q, unit) : q;
    }
    return *acc;
}

// (I : f^inf) by iterating single quotients to the fixpoint.
template <class K>
Ideal<K> saturation(const Ideal<K>& a, const Poly<K>& f, const K& unit) {
    Ideal<K> cur = a;
    for (;;) {
        Ideal<K> next = ideal_quotient(cur, f, unit);
        if (next.equals(cur)) return cur;
        cur = std::move(next);
    }
}

// Saturation by the multigraded irrelevant ideal: successively saturate by
// each factor's maximal ideal m_i, using (I : m_i^inf) = n_j (I : x_{i,j}^inf).
template <class K>
Ideal<K> saturation_irrelevant(const Ideal<K>& a, const K& unit) {
    Ideal<K> cur = a;
    const RingPtr& ring = a.ring();
    for (int f = 1; f <= ring->shape.factors(); ++f) {
        std::optional<Ideal<K>> acc;
        for (int j = 0; j <= ring->shape.dims[f - 1]; ++j) {
            Poly<K> xv = Poly<K>::variable(ring, ring->var_index(f, j), unit);
            Ideal<K> s = saturation(cur, xv, unit);
            acc = acc ? ideal_intersection(*acc, s, unit) : s;
        }
        cur = std::move(*acc);
    }
    return cur;
}

// Saturation by the maximal ideal of all main variables (the ambient
// projective space of the cone); this is the coarser saturation used when
// a multigraded ideal is intentionally viewed in P^{N-1}.
template <class K>
Ideal<K> saturation_maximal(const Ideal<K>& a, const K& unit) {
    const RingPtr& ring = a.ring();
    std::optional<Ideal<K>> acc;
    for (int v = 0; v < ring->nmain; ++v) {
        Ideal<K> s = saturation(a, Poly<K>::variable(ring, v, unit), unit);
        acc = acc ? ideal_intersection(*acc, s, unit) : s;
    }
    return *acc;
}

template <class K>
bool is_saturated(const Ideal<K>& a, const K& unit) {
    for (const auto& g : a.gens())
        if (!g.is_multihomogeneous()) throw error("saturation test needs a multihomogeneous ideal");
    return saturation_irrelevant(a, unit).equals(a);
}

}  // namespace acm
