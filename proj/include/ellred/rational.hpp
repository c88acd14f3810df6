#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "ellred/errors.hpp"

namespace ellred {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(std::int64_t n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        Int n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        Int g = boost::multiprecision::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        v_ = Backing(n, d);
    }

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }
    bool is_integral() const { return den() == 1; }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t n) const { return Rational(n); }
    Int characteristic() const { return Int(0); }

    Rational operator-() const { return Rational(Backing(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(Backing(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(Backing(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(Backing(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DomainError("division by zero rational");
        return Rational(Backing(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational");
        return Rational(den(), num());
    }

    Rational pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        using boost::multiprecision::pow;
        return Rational(pow(num(), static_cast<unsigned>(n)), pow(den(), static_cast<unsigned>(n)));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        if (v_ < o.v_) return std::strong_ordering::less;
        if (v_ > o.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Exact square test over Q.
    bool is_square() const {
        if (is_zero()) return true;
        if (sign() < 0) return false;
        Int n = num(), d = den();
        Int rn = boost::multiprecision::sqrt(n);
        Int rd = boost::multiprecision::sqrt(d);
        return rn * rn == n && rd * rd == d;
    }

    /// "n" or "n/d"; round-trips through parse().
    std::string str() const {
        if (is_integral()) return num().str();
        return num().str() + "/" + den().str();
    }

    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
            Int n(std::string(s.substr(0, slash)));
            Int d(std::string(s.substr(slash + 1)));
            return Rational(n, d);
        } catch (const std::exception&) {
            throw DomainError("malformed rational literal: " + std::string(s));
        }
    }

private:
    using Backing = boost::multiprecision::cpp_rational;
    explicit Rational(Backing v) : v_(std::move(v)) {}
    Backing v_;
};

} // namespace ellred
