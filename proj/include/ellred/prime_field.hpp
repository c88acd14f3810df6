#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "ellred/errors.hpp"
#include "ellred/rational.hpp"

namespace ellred {

/// Element of the prime field F_p. Each element carries its modulus;
/// operations on elements of different prime fields are rejected.
class Fp {
public:
    Fp(Int value, Int p) : p_(std::move(p)) {
        if (p_ < 2) throw DomainError("prime field modulus must be >= 2");
        v_ = value % p_;
        if (v_ < 0) v_ += p_;
    }

    const Int& value() const { return v_; }
    const Int& modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_int(std::int64_t n) const { return Fp(Int(n), p_); }
    Int characteristic() const { return p_; }

    Fp operator-() const { return Fp(-v_, p_); }
    Fp operator+(const Fp& o) const { check(o); return Fp(v_ + o.v_, p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp(v_ - o.v_, p_); }
    Fp operator*(const Fp& o) const { check(o); return Fp(v_ * o.v_, p_); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp inverse() const {
        if (is_zero()) throw DomainError("inverse of zero in F_p");
        // extended Euclid
        Int t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            Int q = r / new_r;
            t -= q * new_t; std::swap(t, new_t);
            r -= q * new_r; std::swap(r, new_r);
        }
        return Fp(t, p_);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

    /// Euler's criterion; zero counts as a square.
    bool is_square() const {
        if (is_zero()) return true;
        if (p_ == 2) return true;
        return boost::multiprecision::powm(v_, (p_ - 1) / 2, p_) == 1;
    }

    std::string str() const { return v_.str(); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw DomainError("mixed prime fields F_" + p_.str() + " and F_" + o.p_.str());
    }
    Int v_;
    Int p_;
};

/// Legendre symbol (a|p) for an odd prime p: 0, 1 or -1.
inline int legendre_symbol(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

/// Deterministic Miller-Rabin for the sizes arising here.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace ellred
