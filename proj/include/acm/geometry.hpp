#pragma once

// Point configurations in a product of projective spaces and the
// combinatorial structure living on them: projections, level sets, the
// (*)-property, the inclusion property, staircases of a (*)-configuration,
// the A/B partition in P^1 x P^n, and the numerical membership test D.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acm/errors.hpp"
#include "acm/field.hpp"

namespace acm {

struct FactorShape {
    std::vector<int> dims;  // (a_1, ..., a_n), all >= 1

    FactorShape() = default;
    explicit FactorShape(std::vector<int> d) : dims(std::move(d)) {
        if (dims.empty()) throw invariant_error("shape needs at least one factor");
        for (int a : dims)
            if (a < 1) throw invariant_error("factor dimensions must be >= 1");
    }

    int factors() const { return static_cast<int>(dims.size()); }
    int ambient_vars() const {
        int n = 0;
        for (int a : dims) n += a + 1;
        return n;
    }
    FactorShape omitting(int i) const {  // i is 1-based
        if (factors() < 2) throw error("cannot omit a factor from a single-factor shape");
        std::vector<int> d = dims;
        d.erase(d.begin() + (i - 1));
        return FactorShape(d);
    }
    bool operator==(const FactorShape& o) const { return dims == o.dims; }
    bool operator!=(const FactorShape& o) const { return !(*this == o); }
    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
        return s;
    }
};

// A point of P^a with the canonical normalization: first nonzero coordinate
// equals 1, so equality and ordering are plain coordinate comparisons.
template <class K>
struct ProjPoint {
    std::vector<K> coords;

    static ProjPoint normalized(std::vector<K> c) {
        std::size_t k = 0;
        while (k < c.size() && c[k].is_zero()) ++k;
        if (k == c.size()) throw invariant_error("projective point has all coordinates zero");
        K inv = c[k].inv();
        for (std::size_t j = k; j < c.size(); ++j) c[j] *= inv;
        ProjPoint p;
        p.coords = std::move(c);
        return p;
    }

    int dim() const { return static_cast<int>(coords.size()) - 1; }

    int cmp(const ProjPoint& o) const {
        for (std::size_t j = 0; j < coords.size(); ++j) {
            int c = coords[j].cmp(o.coords[j]);
            if (c) return c;
        }
        return 0;
    }
    bool operator==(const ProjPoint& o) const { return cmp(o) == 0; }
    bool operator!=(const ProjPoint& o) const { return cmp(o) != 0; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t j = 0; j < coords.size(); ++j) s += (j ? "," : "") + coords[j].str();
        return s + "]";
    }
};

template <class K>
struct MultiPoint {
    std::vector<ProjPoint<K>> parts;

    int cmp(const MultiPoint& o) const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            int c = parts[i].cmp(o.parts[i]);
            if (c) return c;
        }
        return 0;
    }
    bool operator==(const MultiPoint& o) const { return cmp(o) == 0; }
    bool operator!=(const MultiPoint& o) const { return cmp(o) != 0; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "x" : "") + parts[i].str();
        return s;
    }
};

// A reduced finite set of points; input order is preserved (it fixes the
// deterministic orderings used downstream), equality is set equality.
template <class K>
class Configuration {
public:
    Configuration() = default;
    Configuration(FactorShape shape, std::vector<MultiPoint<K>> pts)
        : shape_(std::move(shape)), pts_(std::move(pts)) {
        for (const auto& p : pts_) {
            if (static_cast<int>(p.parts.size()) != shape_.factors())
                throw invariant_error("point has wrong number of factors");
            for (int i = 0; i < shape_.factors(); ++i)
                if (p.parts[i].dim() != shape_.dims[i])
                    throw invariant_error("point part has wrong dimension for factor " + std::to_string(i + 1));
        }
        for (std::size_t a = 0; a < pts_.size(); ++a)
            for (std::size_t b = a + 1; b < pts_.size(); ++b)
                if (pts_[a] == pts_[b])
                    throw invariant_error("duplicate point " + pts_[a].str());
    }

    // Integer coordinates are mapped into the field of `unit`.
    static Configuration from_integers(const FactorShape& shape,
                                       const std::vector<std::vector<std::vector<std::int64_t>>>& rows,
                                       const K& unit) {
        std::vector<MultiPoint<K>> pts;
        pts.reserve(rows.size());
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != shape.factors())
                throw invariant_error("point has " + std::to_string(row.size()) + " tuples, expected " +
                                      std::to_string(shape.factors()));
            MultiPoint<K> mp;
            for (int i = 0; i < shape.factors(); ++i) {
                if (static_cast<int>(row[i].size()) != shape.dims[i] + 1)
                    throw invariant_error("tuple for factor " + std::to_string(i + 1) + " has length " +
                                          std::to_string(row[i].size()) + ", expected " +
                                          std::to_string(shape.dims[i] + 1));
                std::vector<K> c;
                c.reserve(row[i].size());
                for (std::int64_t v : row[i]) c.push_back(unit.of(v));
                mp.parts.push_back(ProjPoint<K>::normalized(std::move(c)));
            }
            pts.push_back(std::move(mp));
        }
        return Configuration(shape, std::move(pts));
    }

    const FactorShape& shape() const { return shape_; }
    const std::vector<MultiPoint<K>>& points() const { return pts_; }
    int size() const { return static_cast<int>(pts_.size()); }
    bool empty() const { return pts_.empty(); }

    bool contains(const MultiPoint<K>& p) const {
        for (const auto& q : pts_)
            if (q == p) return true;
        return false;
    }

    bool set_equal(const Configuration& o) const {
        if (shape_ != o.shape_ || pts_.size() != o.pts_.size()) return false;
        return subset_of(o);
    }
    bool subset_of(const Configuration& o) const {
        for (const auto& p : pts_)
            if (!o.contains(p)) return false;
        return true;
    }

private:
    FactorShape shape_;
    std::vector<MultiPoint<K>> pts_;
};

namespace detail {
template <class K>
void dedup_points(std::vector<ProjPoint<K>>& v) {
    std::vector<ProjPoint<K>> out;
    for (auto& p : v) {
        bool seen = false;
        for (const auto& q : out)
            if (q == p) { seen = true; break; }
        if (!seen) out.push_back(std::move(p));
    }
    v = std::move(out);
}
inline void check_factor_index(int i, int n) {
    if (i < 1 || i > n)
        throw invariant_error("factor index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}
}  // namespace detail

// eta_i: projection to the i-th factor (1-based), deduplicated, in order of
// first occurrence.
template <class K>
std::vector<ProjPoint<K>> eta(const Configuration<K>& x, int i) {
    detail::check_factor_index(i, x.shape().factors());
    std::vector<ProjPoint<K>> v;
    v.reserve(x.size());
    for (const auto& p : x.points()) v.push_back(p.parts[i - 1]);
    detail::dedup_points(v);
    return v;
}

// pi_i: projection omitting the i-th factor. For two factors pi_1 agrees
// with eta_2 up to packaging.
template <class K>
Configuration<K> pi(const Configuration<K>& x, int i) {
    const int n = x.shape().factors();
    detail::check_factor_index(i, n);
    if (n < 2) throw invariant_error("pi undefined on a single-factor configuration");
    FactorShape s = x.shape().omitting(i);
    std::vector<MultiPoint<K>> pts;
    for (const auto& p : x.points()) {
        MultiPoint<K> q;
        q.parts = p.parts;
        q.parts.erase(q.parts.begin() + (i - 1));
        bool seen = false;
        for (const auto& r : pts)
            if (r == q) { seen = true; break; }
        if (!seen) pts.push_back(std::move(q));
    }
    return Configuration<K>(s, std::move(pts));
}

template <class K>
struct LevelClass {
    ProjPoint<K> base;        // the point of eta_i(X) this fiber sits over
    Configuration<K> fiber;   // eta_i^{-1}(base) as a sub-configuration
};

template <class K>
struct LevelDecomposition {
    int factor = 1;
    std::vector<LevelClass<K>> classes;  // ordered by first occurrence of base
};

template <class K>
LevelDecomposition<K> level_sets(const Configuration<K>& x, int i) {
    detail::check_factor_index(i, x.shape().factors());
    if (x.empty()) throw invariant_error("level_sets of an empty configuration");
    LevelDecomposition<K> d;
    d.factor = i;
    std::vector<ProjPoint<K>> bases = eta(x, i);
    for (const auto& b : bases) {
        std::vector<MultiPoint<K>> fib;
        for (const auto& p : x.points())
            if (p.parts[i - 1] == b) fib.push_back(p);
        d.classes.push_back(LevelClass<K>{b, Configuration<K>(x.shape(), std::move(fib))});
    }
    return d;
}

// (*)-property: for any two points (P1,Q1),(P2,Q2) of X, one of the mixed
// points (P1,Q2),(P2,Q1) is also in X. Two-factor configurations only.
template <class K>
bool has_star(const Configuration<K>& x) {
    if (x.shape().factors() != 2)
        throw invariant_error("(*)-property is defined for two-factor products only");
    if (x.empty()) throw invariant_error("(*)-property of an empty configuration");
    const auto& pts = x.points();
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            MultiPoint<K> m1, m2;
            m1.parts = {pts[a].parts[0], pts[b].parts[1]};
            m2.parts = {pts[b].parts[0], pts[a].parts[1]};
            if (!x.contains(m1) && !x.contains(m2)) return false;
        }
    }
    return true;
}

// Inclusion property with respect to pi_i: the images of the level sets are
// totally ordered by inclusion and each image is ACM. In a two-factor
// product the images live in a single projective space, where every finite
// set is ACM, so the oracle is bypassed there.
template <class K>
bool has_inclusion(const Configuration<K>& x, int i,
                   const std::function<bool(const Configuration<K>&)>& acm_oracle = {}) {
    const int n = x.shape().factors();
    detail::check_factor_index(i, n);
    if (x.empty()) throw invariant_error("inclusion property of an empty configuration");
    if (n < 2) throw invariant_error("inclusion property needs at least two factors");
    LevelDecomposition<K> lv = level_sets(x, i);
    std::vector<Configuration<K>> images;
    images.reserve(lv.classes.size());
    for (const auto& c : lv.classes) images.push_back(pi(c.fiber, i));
    std::stable_sort(images.begin(), images.end(),
                     [](const Configuration<K>& a, const Configuration<K>& b) { return a.size() > b.size(); });
    for (std::size_t k = 0; k + 1 < images.size(); ++k)
        if (!images[k + 1].subset_of(images[k])) return false;
    if (n >= 3) {
        if (!acm_oracle) throw invariant_error("inclusion property with 3+ factors needs an ACM oracle");
        for (const auto& img : images)
            if (!acm_oracle(img)) return false;
    }
    return true;
}

// Staircase description of a (*)-configuration: rows and columns are
// relabeled deterministically (decreasing fiber size, ties by first
// occurrence) and the corners (i_k, j_k) are listed with i strictly
// decreasing and j strictly increasing, 0-indexed.
template <class K>
struct Staircase {
    std::vector<std::pair<int, int>> corners;
    std::vector<ProjPoint<K>> row_points;
    std::vector<ProjPoint<K>> col_points;
    FactorShape shape;
};

template <class K>
Staircase<K> staircase(const Configuration<K>& x) {
    if (x.shape().factors() != 2)
        throw invariant_error("staircase is defined for two-factor products only");
    if (!has_star(x)) throw not_star_error();

    LevelDecomposition<K> lv = level_sets(x, 1);
    std::stable_sort(lv.classes.begin(), lv.classes.end(),
                     [](const LevelClass<K>& a, const LevelClass<K>& b) { return a.fiber.size() > b.fiber.size(); });

    Staircase<K> st;
    st.shape = x.shape();
    for (const auto& c : lv.classes) st.row_points.push_back(c.base);

    std::vector<ProjPoint<K>> cols = eta(x, 2);
    auto col_count = [&](const ProjPoint<K>& q) {
        int c = 0;
        for (const auto& p : x.points())
            if (p.parts[1] == q) ++c;
        return c;
    };
    std::stable_sort(cols.begin(), cols.end(),
                     [&](const ProjPoint<K>& a, const ProjPoint<K>& b) { return col_count(a) > col_count(b); });
    st.col_points = cols;

    const int t = static_cast<int>(lv.classes.size());
    std::vector<int> m(t);
    for (int i = 0; i < t; ++i) m[i] = lv.classes[i].fiber.size();
    for (int i = t - 1; i >= 0; --i) {
        int next = (i + 1 < t) ? m[i + 1] : 0;
        if (next < m[i]) st.corners.emplace_back(i, m[i] - 1);
    }

    // The relabeling must reproduce X exactly; anything else means the
    // input was not a staircase, which has_star already rules out.
    for (const auto& p : x.points()) {
        int ri = -1, cj = -1;
        for (int i = 0; i < t; ++i)
            if (st.row_points[i] == p.parts[0]) { ri = i; break; }
        for (std::size_t j = 0; j < st.col_points.size(); ++j)
            if (st.col_points[j] == p.parts[1]) { cj = static_cast<int>(j); break; }
        if (ri < 0 || cj < 0 || cj >= m[ri]) throw error("internal: staircase relabeling failed");
    }
    return st;
}

// Rebuilds the point set described by a staircase; inverse of staircase().
template <class K>
Configuration<K> staircase_points(const Staircase<K>& st) {
    std::vector<MultiPoint<K>> pts;
    const int rows = st.corners.front().first + 1;  // corners are i-descending
    for (int i = 0; i < rows; ++i) {
        int width = 0;
        for (const auto& [ik, jk] : st.corners)
            if (ik >= i) width = std::max(width, jk + 1);
        for (int j = 0; j < width; ++j) {
            MultiPoint<K> p;
            p.parts = {st.row_points[i], st.col_points[j]};
            pts.push_back(std::move(p));
        }
    }
    return Configuration<K>(st.shape, std::move(pts));
}

// The chains V_1 >= ... >= V_t (row prefixes) and Z_1 <= ... <= Z_t
// (column prefixes) attached to the corners of a staircase.
template <class K>
struct VZChains {
    std::vector<std::vector<ProjPoint<K>>> v;  // descending
    std::vector<std::vector<ProjPoint<K>>> z;  // ascending
};

template <class K>
VZChains<K> vz_chains(const Staircase<K>& st) {
    VZChains<K> c;
    for (const auto& [ik, jk] : st.corners) {
        c.v.emplace_back(st.row_points.begin(), st.row_points.begin() + ik + 1);
        c.z.emplace_back(st.col_points.begin(), st.col_points.begin() + jk + 1);
    }
    return c;
}

// The partition X = A_X u B_X in P^1 x P^n: a point P x Q lies in B_X iff
// Q belongs to every level-set image Y_i.
template <class K>
struct ABPartition {
    Configuration<K> a_part;
    Configuration<K> b_part;
    int n0 = 0;  // # pi_1(A_X)
    int n1 = 0;  // # pi_1(B_X)
    std::vector<ProjPoint<K>> b_y;                  // the common second-factor points
    std::vector<ProjPoint<K>> level_bases;          // eta_1(X), level order
    std::vector<Configuration<K>> a_by_level;       // A_i(X) = X_i n A_X
    std::vector<Configuration<K>> b_by_level;       // B_i(X) = X_i n B_X
};

template <class K>
ABPartition<K> ab_partition(const Configuration<K>& x) {
    if (x.shape().factors() != 2 || x.shape().dims[0] != 1)
        throw invariant_error("A/B partition needs shape (1, n)");
    if (x.empty()) throw invariant_error("A/B partition of an empty configuration");

    LevelDecomposition<K> lv = level_sets(x, 1);
    std::vector<std::vector<ProjPoint<K>>> ys;
    for (const auto& c : lv.classes) {
        std::vector<ProjPoint<K>> y;
        for (const auto& p : c.fiber.points()) y.push_back(p.parts[1]);
        ys.push_back(std::move(y));
    }
    std::vector<ProjPoint<K>> common;
    for (const auto& q : ys[0]) {
        bool in_all = true;
        for (std::size_t i = 1; i < ys.size() && in_all; ++i) {
            bool found = false;
            for (const auto& r : ys[i])
                if (r == q) { found = true; break; }
            in_all = found;
        }
        if (in_all) common.push_back(q);
    }

    auto q_common = [&](const ProjPoint<K>& q) {
        for (const auto& r : common)
            if (r == q) return true;
        return false;
    };

    ABPartition<K> ab;
    ab.b_y = common;
    std::vector<MultiPoint<K>> a_pts, b_pts;
    for (const auto& p : x.points())
        (q_common(p.parts[1]) ? b_pts : a_pts).push_back(p);
    ab.a_part = Configuration<K>(x.shape(), a_pts);
    ab.b_part = Configuration<K>(x.shape(), b_pts);

    std::vector<ProjPoint<K>> a_cols;
    for (const auto& p : a_pts) a_cols.push_back(p.parts[1]);
    detail::dedup_points(a_cols);
    ab.n0 = static_cast<int>(a_cols.size());
    ab.n1 = static_cast<int>(common.size());

    for (const auto& c : lv.classes) {
        ab.level_bases.push_back(c.base);
        std::vector<MultiPoint<K>> ai, bi;
        for (const auto& p : c.fiber.points())
            (q_common(p.parts[1]) ? bi : ai).push_back(p);
        ab.a_by_level.push_back(Configuration<K>(x.shape(), std::move(ai)));
        ab.b_by_level.push_back(Configuration<K>(x.shape(), std::move(bi)));
    }
    return ab;
}

// Binomial coefficient with C(a, k) = 0 for a < k (including negative a).
inline long long binom(long long a, int k) {
    if (k < 0 || a < k) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (a - k + j) / j;
    return r;
}

// Membership of n1 in D = U_i [ C(n0+i, n), C(n0+i+1, n) - n0 ]; returns
// the witness i. Intervals with upper bound below lower bound are empty.
inline std::optional<long long> d_membership(long long n0, long long n1, int n) {
    if (n < 2) throw invariant_error("D-membership needs n >= 2");
    if (n0 < 2) throw invariant_error("D-membership needs n0 >= 2");
    if (n1 < 0) throw invariant_error("D-membership needs n1 >= 0");
    for (long long i = -n0;; ++i) {
        long long lo = binom(n0 + i, n);
        if (lo > n1) return std::nullopt;
        long long hi = binom(n0 + i + 1, n) - n0;
        if (n1 >= lo && n1 <= hi) return i;
    }
}

}  // namespace acm
