#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ellred/errors.hpp"
#include "ellred/rational.hpp"

namespace ellred {

/// Element of the divisible hull of the value group: a lex-ordered vector
/// of exact rationals of rank 1 or 2, plus the absorbing element INF used
/// for v(0). Values of base field elements are integral; division by
/// integers (ramification) introduces non-integral components.
class Value {
public:
    Value() : inf_(false), c_(1) {} // rank-1 zero

    static Value infinity(int rank) { return Value(true, std::vector<Rational>(static_cast<std::size_t>(rank))); }
    static Value of(std::vector<Rational> comps) { return Value(false, std::move(comps)); }
    static Value of(Rational a) { return of(std::vector<Rational>{std::move(a)}); }
    static Value of(Rational a, Rational b) { return of(std::vector<Rational>{std::move(a), std::move(b)}); }
    static Value zero(int rank) { return Value(false, std::vector<Rational>(static_cast<std::size_t>(rank))); }

    bool is_infinity() const { return inf_; }
    int rank() const { return static_cast<int>(c_.size()); }
    const Rational& comp(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& comps() const { return c_; }

    Value operator+(const Value& o) const {
        check_rank(o);
        if (inf_ || o.inf_) return infinity(rank());
        std::vector<Rational> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
        return of(std::move(r));
    }

    Value operator-() const {
        if (inf_) throw DomainError("negation of infinite value");
        std::vector<Rational> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(-x);
        return of(std::move(r));
    }

    Value operator-(const Value& o) const {
        if (o.inf_) throw DomainError("subtraction of infinite value");
        return *this + (-o);
    }

    Value times(int n) const {
        if (inf_) return *this;
        std::vector<Rational> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * Rational(n));
        return of(std::move(r));
    }

    Value div(int n) const {
        if (n == 0) throw DomainError("value divided by zero");
        if (inf_) return *this;
        std::vector<Rational> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x / Rational(n));
        return of(std::move(r));
    }

    Value half() const { return div(2); }

    bool is_integral() const {
        if (inf_) return false;
        for (const auto& x : c_)
            if (!x.is_integral()) return false;
        return true;
    }

    bool is_zero() const {
        if (inf_) return false;
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Lexicographic order; INF is maximal.
    std::strong_ordering operator<=>(const Value& o) const {
        check_rank(o);
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::greater;
        if (o.inf_) return std::strong_ordering::less;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            auto cmp = c_[i] <=> o.c_[i];
            if (cmp != std::strong_ordering::equal) return cmp;
        }
        return std::strong_ordering::equal;
    }
    bool operator==(const Value& o) const { return (*this <=> o) == std::strong_ordering::equal; }

    static Value min(const Value& a, const Value& b) { return a <= b ? a : b; }

    std::string str() const {
        if (inf_) return "inf";
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    Value(bool inf, std::vector<Rational> comps) : inf_(inf), c_(std::move(comps)) {
        if (c_.empty() || c_.size() > 2) throw DomainError("value rank must be 1 or 2");
    }
    void check_rank(const Value& o) const {
        if (c_.size() != o.c_.size()) throw DomainError("mixed value ranks");
    }

    bool inf_;
    std::vector<Rational> c_;
};

/// True iff every component of gamma is an integer divisible by n. Since
/// the value group is Z^rank, this decides membership in n*vE.
inline bool in_index_subgroup(const Value& gamma, int n) {
    if (n <= 0) throw DomainError("index must be positive");
    if (gamma.is_infinity()) throw DomainError("in_index_subgroup of infinite value");
    if (!gamma.is_integral()) throw DomainError("in_index_subgroup of non-integral value");
    for (const auto& x : gamma.comps())
        if (x.num() % n != 0) return false;
    return true;
}

} // namespace ellred
