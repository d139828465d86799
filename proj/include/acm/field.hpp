#pragma once

// Exact coefficient fields. Fp is a prime residue field with the modulus
// carried per element (mixed-modulus arithmetic is a bug we want to catch,
// not mask). Rat wraps an arbitrary-precision rational for the cross-check
// mode; both expose the same minimal field surface, so all polynomial and
// linear-algebra code is generic over the scalar.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "acm/errors.hpp"

namespace acm {

inline constexpr std::uint64_t kDefaultPrime = 32003;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class Fp {
public:
    Fp() = default;
    Fp(std::int64_t value, std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
            throw invariant_error("modulus must be a prime below 2^31, got " + std::to_string(p));
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero() const { return raw(0, p_); }
    Fp one() const { return raw(1 % p_, p_); }
    Fp of(std::int64_t n) const { return Fp(n, p_); }

    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const { check(o); std::uint64_t s = v_ + o.v_; return raw(s >= p_ ? s - p_ : s, p_); }
    Fp operator-(const Fp& o) const { check(o); return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
    Fp operator*(const Fp& o) const { check(o); return raw((v_ * o.v_) % p_, p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const {
        if (v_ == 0) throw error("division by zero in GF(" + std::to_string(p_) + ")");
        // Fermat: v^(p-2) mod p.
        std::uint64_t base = v_, e = p_ - 2, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return raw(acc, p_);
    }

    bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    // Arbitrary total order, used only for canonical sorting of points.
    int cmp(const Fp& o) const { check(o); return v_ < o.v_ ? -1 : (v_ > o.v_ ? 1 : 0); }

    std::string str() const { return std::to_string(v_); }
    // Signed representative in (-p/2, p/2], nicer to read in reports.
    std::int64_t lift_signed() const {
        return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p_)
                           : static_cast<std::int64_t>(v_);
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) { Fp x; x.v_ = v; x.p_ = p; return x; }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw error("mixed moduli: GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = kDefaultPrime;
};

class Rat {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rat() = default;
    explicit Rat(std::int64_t n) : v_(n) {}
    explicit Rat(rep v) : v_(std::move(v)) {}

    const rep& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat of(std::int64_t n) const { return Rat(n); }

    Rat operator-() const { return Rat(rep(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(rep(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(rep(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(rep(v_ * o.v_)); }
    Rat operator/(const Rat& o) const { return *this * o.inv(); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inv() const {
        if (v_ == 0) throw error("division by zero in Q");
        return Rat(rep(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    int cmp(const Rat& o) const { return v_ < o.v_ ? -1 : (v_ > o.v_ ? 1 : 0); }

    std::string str() const { return v_.str(); }

private:
    rep v_ = 0;
};

}  // namespace acm
