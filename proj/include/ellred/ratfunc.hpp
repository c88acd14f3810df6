#pragma once

#include <string>
#include <utility>

#include "ellred/errors.hpp"
#include "ellred/poly.hpp"

namespace ellred {

/// Reduced rational function num/den over a coefficient field: den monic
/// and nonzero, gcd(num, den) = 1. Equality is coefficientwise, so the
/// normal form makes it canonical.
template <FieldElement K>
class RatFunc {
public:
    RatFunc() requires std::default_initializable<K>
        : num_(), den_(Poly<K>::constant(K{}.one())) {}

    explicit RatFunc(Poly<K> num) {
        if (num.is_zero()) {
            if constexpr (std::default_initializable<K>) {
                den_ = Poly<K>::constant(K{}.one(), num.var());
                return;
            }
            throw DomainError("cannot derive field context from zero polynomial");
        }
        den_ = Poly<K>::constant(num[0].zero().one(), num.var());
        num_ = std::move(num);
        normalize();
    }

    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        normalize();
    }

    static RatFunc zero(const K& ctx, std::string var = "x") {
        return RatFunc(Poly<K>{}, Poly<K>::constant(ctx.one(), std::move(var)));
    }
    static RatFunc constant(const K& c, std::string var = "x") {
        Poly<K> num = Poly<K>::constant(c, var);
        Poly<K> den = Poly<K>::constant(c.one(), std::move(var));
        return RatFunc(std::move(num), std::move(den));
    }
    static RatFunc variable(const K& ctx, std::string var = "x") {
        Poly<K> num = Poly<K>::variable(ctx, var);
        Poly<K> den = Poly<K>::constant(ctx.one(), std::move(var));
        return RatFunc(std::move(num), std::move(den));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    const std::string& var() const { return den_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_poly() const { return den_.is_constant(); }

    /// Field context, available even for zero (the denominator is never empty).
    K ctx() const { return den_.leading(); }

    RatFunc zero() const { return RatFunc(Poly<K>{}, Poly<K>::constant(ctx().one(), var())); }
    RatFunc one() const { return constant(ctx().one(), var()); }
    RatFunc from_int(std::int64_t n) const { return constant(ctx().from_int(n), var()); }
    Int characteristic() const { return ctx().characteristic(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        if (n == 0) return one();
        // gcd(num^n, den^n) = 1 and den^n stays monic: no renormalization
        RatFunc out = *this;
        out.num_ = num_.pow(static_cast<unsigned>(n));
        out.den_ = den_.pow(static_cast<unsigned>(n));
        return out;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    K evaluate(const K& x) const {
        K d = den_.evaluate(x);
        if (d.is_zero()) throw DomainError("pole of rational function at evaluation point");
        return num_.evaluate(x) * d.inverse();
    }

    /// Square test in the fraction field, via the squarefree data of
    /// num*den. Requires K to expose its own square test.
    bool is_square() const requires requires(const K& k) { { k.is_square() } -> std::same_as<bool>; } {
        if (is_zero()) return true;
        auto dec = squarefree_decompose(num_ * den_);
        for (const auto& [factor, mult] : dec.factors)
            if (mult % 2 != 0) return false;
        return dec.scalar.is_square();
    }

    std::string str() const {
        if (is_zero()) return "0";
        if (den_ == Poly<K>::constant(ctx().one())) return num_.str();
        std::string ns = num_.str();
        if (detail::coeff_needs_parens(ns)) ns = "(" + ns + ")";
        std::string ds = den_.str();
        if (!all_digits(ds)) ds = "(" + ds + ")";
        return ns + "/" + ds;
    }

private:
    static bool all_digits(const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    }

    void normalize() {
        if (!num_.is_zero() && !num_.is_constant() && !den_.is_constant()) {
            Poly<K> g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = poly_divexact(num_, g);
                den_ = poly_divexact(den_, g);
            }
        }
        K lead_inv = den_.leading().inverse();
        num_ = num_.scale(lead_inv);
        den_ = den_.scale(lead_inv);
        if (num_.is_zero()) den_ = Poly<K>::constant(den_.leading().one(), den_.var());
        std::string v = !num_.is_constant() ? num_.var() : den_.var();
        num_.set_var(v);
        den_.set_var(v);
    }

    Poly<K> num_;
    Poly<K> den_;
};

/// Fraction-free gcd for polynomials whose coefficients are themselves
/// rational functions: clear denominators, then run a primitive PRS with
/// polynomial contents. The generic monic Euclid is unusable here, its
/// coefficient degrees grow exponentially.
template <FieldElement k>
Poly<RatFunc<k>> poly_gcd(const Poly<RatFunc<k>>& f, const Poly<RatFunc<k>>& g) {
    using P = Poly<k>;
    if (f.is_zero() && g.is_zero()) return {};
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.degree() == 0 || g.degree() == 0)
        return Poly<RatFunc<k>>::constant((f.degree() == 0 ? f : g).leading().one(), f.var());

    auto clear = [](const Poly<RatFunc<k>>& h) {
        P lcm = P::constant(h.leading().ctx().one());
        for (const auto& c : h.coeffs()) {
            if (c.is_zero()) continue;
            lcm = poly_divexact(lcm * c.den(), poly_gcd(lcm, c.den()));
        }
        std::vector<P> out;
        out.reserve(h.coeffs().size());
        for (const auto& c : h.coeffs())
            out.push_back(c.is_zero() ? P{} : c.num() * poly_divexact(lcm, c.den()));
        return out;
    };
    auto trim = [](std::vector<P>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    auto content = [](const std::vector<P>& v) {
        P d{};
        for (const auto& c : v) d = poly_gcd(d, c);
        return d;
    };
    auto divide_content = [&content](std::vector<P>& v) {
        P d = content(v);
        if (d.degree() > 0)
            for (auto& c : v)
                if (!c.is_zero()) c = poly_divexact(c, d);
        if constexpr (std::same_as<k, Rational>) {
            // the monic polynomial content leaves rational scalars behind;
            // strip them too or the integers square every PRS round
            Int num = 0, den = 1;
            for (const auto& p : v)
                for (const auto& c : p.coeffs()) {
                    num = boost::multiprecision::gcd(num, c.num());
                    den = den / boost::multiprecision::gcd(den, c.den()) * c.den();
                }
            if (num != 0) {
                Rational inv_content = Rational(num, den).inverse();
                for (auto& p : v) p = p.scale(inv_content);
            }
        }
    };
    auto pseudo_rem = [&trim](std::vector<P> a, const std::vector<P>& b) {
        const P lc = b.back();
        const std::size_t db = b.size() - 1;
        while (a.size() >= b.size() && !a.empty()) {
            P top = a.back();
            for (auto& c : a) c = c * lc;
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - top * b[j];
            trim(a);
        }
        return a;
    };

    std::vector<P> a = clear(f);
    std::vector<P> b = clear(g);
    divide_content(a);
    divide_content(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<P> r = pseudo_rem(a, b);
        divide_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<RatFunc<k>> coeffs;
    coeffs.reserve(a.size());
    for (auto& c : a)
        coeffs.push_back(c.is_zero() ? RatFunc<k>::zero(a.back().leading(), f.var())
                                     : RatFunc<k>(std::move(c)));
    return Poly<RatFunc<k>>(std::move(coeffs), f.var()).monic();
}

} // namespace ellred
