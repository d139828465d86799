#pragma once

// The multigraded coordinate ring of a product of projective spaces and
// exact polynomial arithmetic over a generic field scalar K. Variables are
// laid out factor-major (x_{1,0},...,x_{1,a_1}, x_{2,0},...), optionally
// followed by auxiliary elimination variables used by ideal intersections.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acm/errors.hpp"
#include "acm/geometry.hpp"
#include "acm/monomial.hpp"

namespace acm {

struct Ring {
    FactorShape shape;
    int naux = 0;
    int nmain = 0;
    MonoOrder order;
    std::vector<int> factor_lo;  // start variable index of each factor block

    explicit Ring(FactorShape s, int aux = 0) : shape(std::move(s)), naux(aux) {
        nmain = shape.ambient_vars();
        if (nmain + naux > kMaxVars)
            throw invariant_error("too many variables: " + std::to_string(nmain + naux) + " > " +
                                  std::to_string(kMaxVars));
        order = MonoOrder{nmain, naux};
        int lo = 0;
        for (int a : shape.dims) {
            factor_lo.push_back(lo);
            lo += a + 1;
        }
    }

    int nvars() const { return nmain + naux; }
    int var_index(int factor, int j) const { return factor_lo[factor - 1] + j; }  // factor 1-based
    int aux_index(int k) const { return nmain + k; }

    bool same(const Ring& o) const { return shape == o.shape && naux == o.naux; }

    std::string var_name(int v) const {
        if (v >= nmain) return "t" + std::to_string(v - nmain);
        static const char letters[] = {'x', 'y', 'z', 'w', 'u', 'v'};
        for (int f = static_cast<int>(factor_lo.size()) - 1; f >= 0; --f)
            if (v >= factor_lo[f]) {
                int j = v - factor_lo[f];
                if (f < 6) return std::string(1, letters[f]) + std::to_string(j);
                return "x" + std::to_string(f + 1) + "_" + std::to_string(j);
            }
        return "?";
    }

    bool aux_free(const Monomial& m) const {
        for (int k = nmain; k < nvars(); ++k)
            if (m.e[k]) return false;
        return true;
    }

    std::vector<int> multidegree(const Monomial& m) const {
        std::vector<int> d(shape.factors());
        for (int f = 0; f < shape.factors(); ++f)
            d[f] = m.deg(factor_lo[f], factor_lo[f] + shape.dims[f] + 1);
        return d;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(const FactorShape& shape, int naux = 0) {
    return std::make_shared<const Ring>(shape, naux);
}

inline RingPtr with_aux(const RingPtr& r, int naux) { return make_ring(r->shape, naux); }

template <class K>
struct Term {
    Monomial m;
    K c;
};

template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly from_terms(RingPtr ring, std::vector<Term<K>> ts) {
        const MonoOrder& ord = ring->order;
        std::sort(ts.begin(), ts.end(),
                  [&](const Term<K>& a, const Term<K>& b) { return ord.cmp(a.m, b.m) > 0; });
        std::vector<Term<K>> out;
        for (auto& t : ts) {
            if (t.c.is_zero()) continue;
            if (!out.empty() && out.back().m == t.m) {
                out.back().c += t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        Poly p(std::move(ring));
        p.t_ = std::move(out);
        return p;
    }

    static Poly variable(RingPtr ring, int v, const K& unit) {
        return from_terms(ring, {Term<K>{Monomial::var(v), unit.one()}});
    }
    static Poly constant(RingPtr ring, const K& c) {
        return from_terms(std::move(ring), {Term<K>{Monomial::one(), c}});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int nterms() const { return static_cast<int>(t_.size()); }

    const Term<K>& lt() const {
        if (t_.empty()) throw error("leading term of zero polynomial");
        return t_.front();
    }
    const Monomial& lm() const { return lt().m; }
    const K& lc() const { return lt().c; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_ring(o);
        std::vector<Term<K>> out;
        out.reserve(t_.size() + o.t_.size());
        const MonoOrder& ord = ring_->order;
        std::size_t a = 0, b = 0;
        while (a < t_.size() && b < o.t_.size()) {
            int c = ord.cmp(t_[a].m, o.t_[b].m);
            if (c > 0) out.push_back(t_[a++]);
            else if (c < 0) out.push_back(o.t_[b++]);
            else {
                K s = t_[a].c + o.t_[b].c;
                if (!s.is_zero()) out.push_back(Term<K>{t_[a].m, s});
                ++a, ++b;
            }
        }
        while (a < t_.size()) out.push_back(t_[a++]);
        while (b < o.t_.size()) out.push_back(o.t_[b++]);
        Poly r(ring_);
        r.t_ = std::move(out);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    // f * (c * m)
    Poly times_term(const Monomial& m, const K& c) const {
        if (c.is_zero()) return zero(ring_);
        Poly r(ring_);
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back(Term<K>{t.m * m, t.c * c});
        return r;  // multiplying by a fixed monomial preserves the order
    }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        std::vector<Term<K>> out;
        out.reserve(t_.size() * o.t_.size());
        for (const auto& a : t_)
            for (const auto& b : o.t_) out.push_back(Term<K>{a.m * b.m, a.c * b.c});
        return from_terms(ring_, std::move(out));
    }

    Poly scaled(const K& c) const { return times_term(Monomial::one(), c); }
    Poly monic() const { return is_zero() ? *this : scaled(lc().inv()); }

    bool operator==(const Poly& o) const {
        if (!ring_->same(*o.ring_) || t_.size() != o.t_.size()) return false;
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Multidegree when multihomogeneous (and auxiliary-free); nullopt otherwise.
    std::optional<std::vector<int>> multidegree() const {
        if (t_.empty()) return std::nullopt;
        for (const auto& t : t_)
            if (!ring_->aux_free(t.m)) return std::nullopt;
        std::vector<int> d = ring_->multidegree(t_.front().m);
        for (const auto& t : t_)
            if (ring_->multidegree(t.m) != d) return std::nullopt;
        return d;
    }
    bool is_multihomogeneous() const { return is_zero() || multidegree().has_value(); }

    int std_degree() const {
        int d = 0;
        for (const auto& t : t_) d = std::max(d, t.m.deg(ring_->nvars()));
        return d;
    }

    // Evaluation at a full main-variable coordinate vector.
    K evaluate(const std::vector<K>& vals, const K& unit) const {
        K acc = unit.zero();
        for (const auto& t : t_) {
            if (!ring_->aux_free(t.m)) throw error("cannot evaluate auxiliary variables");
            K prod = t.c;
            for (int v = 0; v < ring_->nmain; ++v)
                for (int k = 0; k < t.m.e[v]; ++k) prod *= vals[v];
            acc += prod;
        }
        return acc;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i) s += " + ";
            const Term<K>& t = t_[i];
            bool unit_coeff = (t.c == t.c.one()) && !t.m.is_one(ring_->nvars());
            if (!unit_coeff) s += t.c.str();
            bool first = unit_coeff;
            for (int v = 0; v < ring_->nvars(); ++v) {
                if (!t.m.e[v]) continue;
                if (!first || !unit_coeff) s += "*";
                s += ring_->var_name(v);
                if (t.m.e[v] > 1) s += "^" + std::to_string(t.m.e[v]);
                first = false;
            }
        }
        return s;
    }

private:
    void check_ring(const Poly& o) const {
        if (!ring_->same(*o.ring_)) throw error("polynomial ring mismatch");
    }
    RingPtr ring_;
    std::vector<Term<K>> t_;
};

// Re-associates the polynomial to a content-identical ring instance (used
// when moving between a base ring and its auxiliary extension, where the
// exponent layout is unchanged).
template <class K>
Poly<K> rering(const Poly<K>& f, const RingPtr& to) {
    if (f.ring()->nmain != to->nmain) throw error("rering across different main variables");
    for (const auto& t : f.terms())
        for (int v = to->nvars(); v < kMaxVars; ++v)
            if (t.m.e[v]) throw error("rering would drop auxiliary exponents");
    std::vector<Term<K>> ts(f.terms().begin(), f.terms().end());
    return Poly<K>::from_terms(to, std::move(ts));
}

// Linear form  sum coeffs[v] * var_v  over the main variables.
template <class K>
Poly<K> linear_form(const RingPtr& ring, const std::vector<K>& coeffs) {
    std::vector<Term<K>> ts;
    for (std::size_t v = 0; v < coeffs.size(); ++v)
        if (!coeffs[v].is_zero()) ts.push_back(Term<K>{Monomial::var(static_cast<int>(v)), coeffs[v]});
    return Poly<K>::from_terms(ring, std::move(ts));
}

}  // namespace acm
