#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ellred/errors.hpp"
#include "ellred/rational.hpp"

namespace ellred {

/// Requirements on a coefficient field. zero()/one()/from_int() produce
/// elements of the *same* field as the receiver, so elements that carry
/// context (a modulus, a field descriptor) stay attached to it.
template <typename K>
concept FieldElement = requires(const K& a, const K& b, std::int64_t n) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.zero() } -> std::same_as<K>;
    { a.one() } -> std::same_as<K>;
    { a.from_int(n) } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.characteristic() } -> std::same_as<Int>;
    { a.str() } -> std::same_as<std::string>;
};

/// Dense univariate polynomial over a field, coefficients stored lowest
/// degree first with a nonzero top coefficient. The zero polynomial has an
/// empty coefficient list and degree kMinusInfinity.
template <FieldElement K>
class Poly {
public:
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min() / 2;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs, std::string var = "x")
        : c_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    static Poly constant(K v, std::string var = "x") {
        return Poly(std::vector<K>{std::move(v)}, std::move(var));
    }
    /// The monomial 1*x, in the field of `ctx`.
    static Poly variable(const K& ctx, std::string var = "x") {
        return Poly(std::vector<K>{ctx.zero(), ctx.one()}, std::move(var));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](std::size_t i) const { return c_[i]; }
    const K& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == c_.back().one(); }

    Poly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(-x);
        return Poly(std::move(r), var_);
    }

    Poly operator+(const Poly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        std::vector<K> r;
        std::size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < c_.size() && i < o.c_.size()) r.push_back(c_[i] + o.c_[i]);
            else if (i < c_.size()) r.push_back(c_[i]);
            else r.push_back(o.c_[i]);
        }
        return Poly(std::move(r), pick_var(o));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero()) return *this;
        if (o.is_zero()) return o;
        std::vector<K> r(c_.size() + o.c_.size() - 1, c_.front().zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r), pick_var(o));
    }

    Poly scale(const K& s) const {
        if (s.is_zero()) return Poly(std::vector<K>{}, var_);
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * s);
        return Poly(std::move(r), var_);
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scale(leading().inverse());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(std::vector<K>{}, var_);
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(c_[i] * c_[i].from_int(static_cast<std::int64_t>(i)));
        return Poly(std::move(r), var_);
    }

    K evaluate(const K& x) const {
        if (is_zero()) return x.zero();
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Substitution p(inner): Horner over polynomial arithmetic.
    Poly compose(const Poly& inner) const {
        if (is_zero()) return Poly(std::vector<K>{}, inner.var_);
        Poly acc = Poly::constant(c_.back(), inner.var_);
        for (std::size_t i = c_.size() - 1; i-- > 0;)
            acc = acc * inner + Poly::constant(c_[i], inner.var_);
        return acc;
    }

    Poly pow(unsigned n) const {
        if (is_zero()) {
            if (n == 0) throw DomainError("0^0 polynomial power");
            return *this;
        }
        Poly acc = Poly::constant(c_.front().one(), var_);
        Poly base = *this;
        while (n) {
            if (n & 1u) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    /// Equality is coefficientwise; variable labels are presentation only.
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const std::string& pick_var(const Poly& o) const { return is_constant() && !o.is_constant() ? o.var_ : var_; }

    std::vector<K> c_;
    std::string var_ = "x";
};

template <FieldElement K>
struct PolyDivMod {
    Poly<K> quot;
    Poly<K> rem;
};

template <FieldElement K>
PolyDivMod<K> poly_divmod(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    if (num.is_zero() || num.degree() < den.degree()) return {Poly<K>{}, num};
    std::vector<K> r(num.coeffs());
    const K lc_inv = den.leading().inverse();
    const int dd = den.degree();
    std::vector<K> q(static_cast<std::size_t>(num.degree() - dd) + 1, num.leading().zero());
    for (int i = num.degree(); i >= dd; --i) {
        K t = r[static_cast<std::size_t>(i)] * lc_inv;
        if (t.is_zero()) continue;
        q[static_cast<std::size_t>(i - dd)] = t;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] =
                r[static_cast<std::size_t>(i - dd + j)] - t * den[static_cast<std::size_t>(j)];
    }
    return {Poly<K>(std::move(q), num.var()), Poly<K>(std::move(r), num.var())};
}

/// Exact division; throws if the remainder is nonzero.
template <FieldElement K>
Poly<K> poly_divexact(const Poly<K>& num, const Poly<K>& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

namespace detail {

// Primitive-PRS gcd over Z for rational-coefficient input: clear
// denominators, strip integer content before each pseudo-division step.
Poly<Rational> rational_poly_gcd(const Poly<Rational>& f, const Poly<Rational>& g);

} // namespace detail

/// Monic greatest common divisor; gcd(0,0) = 0.
template <FieldElement K>
Poly<K> poly_gcd(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() && g.is_zero()) return Poly<K>{};
    if (f.degree() == 0 || g.degree() == 0)
        return Poly<K>::constant((f.degree() == 0 ? f : g).leading().one(), f.var());
    if constexpr (std::same_as<K, Rational>) {
        return detail::rational_poly_gcd(f, g);
    } else {
        Poly<K> a = f, b = g;
        while (!b.is_zero()) {
            Poly<K> r = poly_divmod(a, b.monic()).rem;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }
}

template <FieldElement K>
struct SquarefreeDecomposition {
    K scalar;                                     // leading coefficient of the input
    std::vector<std::pair<Poly<K>, int>> factors; // monic, squarefree, pairwise coprime
};

/// Yun's algorithm. Sound for characteristic 0 or p > deg f; rejects the
/// rest rather than attempting p-th power detection.
template <FieldElement K>
SquarefreeDecomposition<K> squarefree_decompose(const Poly<K>& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
    const Int ch = f.leading().characteristic();
    if (ch != 0 && ch <= f.degree())
        throw CharacteristicError("squarefree decomposition needs characteristic 0 or p > deg f (p=" +
                                  ch.str() + ", deg=" + std::to_string(f.degree()) + ")");
    SquarefreeDecomposition<K> out{f.leading(), {}};
    if (f.degree() <= 0) return out;
    Poly<K> fm = f.monic();
    Poly<K> df = fm.derivative();
    Poly<K> g = poly_gcd(fm, df);
    if (g.degree() <= 0) {
        out.factors.emplace_back(fm, 1);
        return out;
    }
    Poly<K> w = poly_divexact(fm, g);
    Poly<K> y = poly_divexact(df, g);
    Poly<K> z = y - w.derivative();
    int mult = 1;
    while (w.degree() > 0) {
        Poly<K> q = poly_gcd(w, z);
        if (q.degree() > 0) out.factors.emplace_back(q, mult);
        w = poly_divexact(w, q);
        y = poly_divexact(z, q);
        z = y - w.derivative();
        ++mult;
    }
    return out;
}

// -- printing ---------------------------------------------------------------

namespace detail {

// A coefficient needs wrapping when its rendering would not bind as one
// factor next to '*': any '+', or '-' beyond position 0, at paren depth 0.
inline bool coeff_needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (depth == 0 && (ch == '+' || (ch == '-' && i > 0))) return true;
    }
    return false;
}

} // namespace detail

template <FieldElement K>
std::string Poly<K>::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const K& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && !detail::coeff_needs_parens(cs);
        if (out.empty()) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            if (neg) { out += "-"; cs = cs.substr(1); }
            else out += "+";
        }
        if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
        bool coeff_is_one = (i > 0) && (c == c.one() || (neg && (-c) == c.one()));
        if (i == 0) {
            out += cs;
        } else {
            if (!coeff_is_one) out += cs + "*";
            out += var_;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace ellred
