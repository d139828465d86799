#pragma once

// Monomials as fixed-capacity exponent vectors and the two monomial orders
// the library uses: degrevlex over all ring variables, and the elimination
// order whose leading block holds the auxiliary variables.

#include <array>
#include <cstdint>
#include <vector>

#include "acm/errors.hpp"

namespace acm {

inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, int k = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint8_t>(k);
        return m;
    }

    int deg(int lo, int hi) const {
        int d = 0;
        for (int i = lo; i < hi; ++i) d += e[i];
        return d;
    }
    int deg(int nvars) const { return deg(0, nvars); }

    bool is_one(int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw error("monomial exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            if (e[i] < o.e[i]) throw error("monomial division is not exact");
            r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(e[i], o.e[i]);
        return r;
    }

    bool coprime_with(const Monomial& o, int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Degrevlex on a contiguous variable block: higher total degree wins; on
// ties the monomial with the smaller exponent at the last differing
// variable is the larger one. Returns <0, 0, >0 like memcmp.
inline int cmp_block_degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = a.deg(lo, hi), db = b.deg(lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

// Monomial order of a ring with `nmain` proper variables and `naux`
// auxiliary (elimination) variables stored after them. With naux = 0 this
// is plain degrevlex; otherwise the auxiliary block is compared first, so
// a Groebner basis eliminates the auxiliary variables.
struct MonoOrder {
    int nmain = 0;
    int naux = 0;

    int nvars() const { return nmain + naux; }

    int cmp(const Monomial& a, const Monomial& b) const {
        if (naux) {
            int c = cmp_block_degrevlex(a, b, nmain, nmain + naux);
            if (c) return c;
        }
        return cmp_block_degrevlex(a, b, 0, nmain);
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

// All exponent vectors over variables [lo, hi) of total degree d, appended
// to out as full-width monomials (other entries zero).
inline void enumerate_block(int lo, int hi, int d, Monomial cur, std::vector<Monomial>& out) {
    if (lo == hi - 1) {
        cur.e[lo] = static_cast<std::uint8_t>(d);
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur.e[lo] = static_cast<std::uint8_t>(k);
        enumerate_block(lo + 1, hi, d - k, cur, out);
    }
    cur.e[lo] = 0;
}

inline std::vector<Monomial> monomials_of_block_degree(int lo, int hi, int d) {
    std::vector<Monomial> out;
    enumerate_block(lo, hi, d, Monomial{}, out);
    return out;
}

}  // namespace acm
