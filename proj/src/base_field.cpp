#include "ellred/base_field.hpp"

#include <utility>

namespace ellred {

namespace {

void require_good_prime(const Int& p) {
    if (p == 2 || p == 3) throw DomainError("residue characteristic 2 and 3 are not supported");
    if (!is_prime(p)) throw DomainError("modulus " + p.str() + " is not prime");
}

// t-adic order of a nonzero polynomial: index of its lowest nonzero
// coefficient.
template <FieldElement K>
int low_order(const Poly<K>& f) {
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<int>(i);
    throw DomainError("t-adic order of zero polynomial");
}

template <FieldElement K>
const K& low_coeff(const Poly<K>& f) {
    return f[static_cast<std::size_t>(low_order(f))];
}

int ord_p(const Int& n, const Int& p) {
    if (n == 0) throw DomainError("p-adic order of zero");
    Int m = n;
    int k = 0;
    while (m % p == 0) { m /= p; ++k; }
    return k;
}

int ord_p(const Rational& q, const Int& p) {
    return ord_p(q.num(), p) - ord_p(q.den(), p);
}

// Reduce a rational with nonnegative p-order into F_p.
Fp reduce_mod_p(const Rational& q, const Int& p) {
    Fp d(q.den(), p);
    if (d.is_zero()) throw DomainError("denominator not a p-adic unit");
    return Fp(q.num(), p) * d.inverse();
}

// t-adic leading coefficient ratio of a nonzero rational function: the
// residue of x * t^(-ord_t(x)).
Rational t_leading_ratio(const RatFunc<Rational>& x) {
    return low_coeff(x.num()) / low_coeff(x.den());
}

} // namespace

// -- BaseField ---------------------------------------------------------------

BaseFieldPtr BaseField::p_adic(const Int& p) {
    require_good_prime(p);
    return BaseFieldPtr(new BaseField(FieldKind::PAdicQ, p, Semantics::Exact));
}

BaseFieldPtr BaseField::t_adic_over_q(Semantics sem) {
    return BaseFieldPtr(new BaseField(FieldKind::TAdicQ, 0, sem));
}

BaseFieldPtr BaseField::t_adic_over_fp(const Int& p) {
    require_good_prime(p);
    return BaseFieldPtr(new BaseField(FieldKind::TAdicFp, p, Semantics::Exact));
}

BaseFieldPtr BaseField::composite_t_p(const Int& p) {
    require_good_prime(p);
    return BaseFieldPtr(new BaseField(FieldKind::CompositeTP, p, Semantics::Exact));
}

BaseElement BaseField::from_rational(const Rational& q) const {
    auto self = shared_from_this();
    switch (kind_) {
    case FieldKind::PAdicQ:
        return BaseElement(self, q);
    case FieldKind::TAdicQ:
    case FieldKind::CompositeTP:
        return BaseElement(self, RatFunc<Rational>::constant(q, "t"));
    case FieldKind::TAdicFp: {
        Fp d(q.den(), p_);
        if (d.is_zero()) throw DomainError("rational has no image in F_" + p_.str());
        Fp v = Fp(q.num(), p_) * d.inverse();
        return BaseElement(self, RatFunc<Fp>::constant(v, "t"));
    }
    }
    throw DomainError("unreachable");
}

BaseElement BaseField::zero() const { return from_rational(Rational(0)); }
BaseElement BaseField::one() const { return from_rational(Rational(1)); }
BaseElement BaseField::from_int(const Int& n) const { return from_rational(Rational(n)); }

BaseElement BaseField::t() const {
    auto self = shared_from_this();
    switch (kind_) {
    case FieldKind::PAdicQ:
        throw DomainError("variable t is not an element of Q with the p-adic valuation");
    case FieldKind::TAdicQ:
    case FieldKind::CompositeTP:
        return BaseElement(self, RatFunc<Rational>::variable(Rational(0), "t"));
    case FieldKind::TAdicFp:
        return BaseElement(self, RatFunc<Fp>::variable(Fp(0, p_), "t"));
    }
    throw DomainError("unreachable");
}

ResidueElement BaseField::residue_zero() const {
    return residue_kind() == ResidueKind::Q ? ResidueElement(Rational(0)) : ResidueElement(Fp(0, p_));
}

ResidueElement BaseField::residue_one() const {
    return residue_kind() == ResidueKind::Q ? ResidueElement(Rational(1)) : ResidueElement(Fp(1, p_));
}

std::string BaseField::describe() const {
    switch (kind_) {
    case FieldKind::PAdicQ: return "Q with the " + p_.str() + "-adic valuation";
    case FieldKind::TAdicQ:
        return sem_ == Semantics::RealSigns ? "Q(t) with the t-adic valuation (real-signs residue semantics)"
                                            : "Q(t) with the t-adic valuation";
    case FieldKind::TAdicFp: return "F_" + p_.str() + "(t) with the t-adic valuation";
    case FieldKind::CompositeTP: return "Q(t) with the composite (t, " + p_.str() + ")-adic valuation";
    }
    return "?";
}

// -- BaseElement -------------------------------------------------------------

BaseElement::BaseElement(BaseFieldPtr field, Payload payload)
    : field_(std::move(field)), payload_(std::move(payload)) {
    if (!field_) throw DomainError("base element without field");
    bool ok = false;
    switch (field_->kind()) {
    case FieldKind::PAdicQ: ok = std::holds_alternative<Rational>(payload_); break;
    case FieldKind::TAdicQ:
    case FieldKind::CompositeTP: ok = std::holds_alternative<RatFunc<Rational>>(payload_); break;
    case FieldKind::TAdicFp: ok = std::holds_alternative<RatFunc<Fp>>(payload_); break;
    }
    if (!ok) throw DomainError("payload type does not match field kind");
}

void BaseElement::check_compatible(const BaseElement& o) const {
    if (!(*field_ == *o.field_)) throw DomainError("mixed base fields: " + field_->describe() + " vs " + o.field_->describe());
}

bool BaseElement::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, payload_);
}

BaseElement BaseElement::operator-() const {
    return BaseElement(field_, std::visit([](const auto& v) { return Payload(-v); }, payload_));
}

#define ELLRED_BASE_BINOP(op)                                                            \
    BaseElement BaseElement::operator op(const BaseElement& o) const {                  \
        check_compatible(o);                                                             \
        return BaseElement(field_, std::visit(                                           \
            [](const auto& a, const auto& b) -> Payload {                                \
                if constexpr (std::same_as<std::decay_t<decltype(a)>,                    \
                                           std::decay_t<decltype(b)>>)                   \
                    return Payload(a op b);                                              \
                else                                                                     \
                    throw DomainError("incompatible payloads");                          \
            },                                                                           \
            payload_, o.payload_));                                                      \
    }

ELLRED_BASE_BINOP(+)
ELLRED_BASE_BINOP(-)
ELLRED_BASE_BINOP(*)
ELLRED_BASE_BINOP(/)
#undef ELLRED_BASE_BINOP

BaseElement BaseElement::inverse() const {
    return BaseElement(field_, std::visit([](const auto& v) { return Payload(v.inverse()); }, payload_));
}

BaseElement BaseElement::pow(int n) const {
    return BaseElement(field_, std::visit([n](const auto& v) { return Payload(v.pow(n)); }, payload_));
}

bool BaseElement::operator==(const BaseElement& o) const {
    if (!(*field_ == *o.field_)) return false;
    return payload_ == o.payload_;
}

bool BaseElement::is_square() const {
    return std::visit([](const auto& v) { return v.is_square(); }, payload_);
}

std::string BaseElement::str() const {
    return std::visit([](const auto& v) { return v.str(); }, payload_);
}

namespace {

template <typename T>
Poly<BaseElement> unwrapped_gcd(const Poly<BaseElement>& f, const Poly<BaseElement>& g,
                                const BaseFieldPtr& field) {
    auto unwrap = [](const Poly<BaseElement>& h) {
        std::vector<T> c;
        c.reserve(h.coeffs().size());
        for (const auto& x : h.coeffs()) c.push_back(std::get<T>(x.payload()));
        return Poly<T>(std::move(c), h.var());
    };
    Poly<T> d = poly_gcd(unwrap(f), unwrap(g));
    std::vector<BaseElement> out;
    out.reserve(d.coeffs().size());
    for (const auto& x : d.coeffs()) out.push_back(BaseElement(field, x));
    return Poly<BaseElement>(std::move(out), f.is_zero() ? g.var() : f.var());
}

} // namespace

Poly<BaseElement> poly_gcd(const Poly<BaseElement>& f, const Poly<BaseElement>& g) {
    if (f.is_zero() && g.is_zero()) return {};
    const BaseFieldPtr& field = (f.is_zero() ? g : f).leading().field();
    for (const auto& h : {&f, &g})
        for (const auto& c : h->coeffs())
            if (!(*c.field() == *field)) throw DomainError("mixed base fields in polynomial gcd");
    switch (field->kind()) {
    case FieldKind::PAdicQ: return unwrapped_gcd<Rational>(f, g, field);
    case FieldKind::TAdicQ:
    case FieldKind::CompositeTP: return unwrapped_gcd<RatFunc<Rational>>(f, g, field);
    case FieldKind::TAdicFp: return unwrapped_gcd<RatFunc<Fp>>(f, g, field);
    }
    throw DomainError("unreachable");
}

// -- valuation, residue, section ---------------------------------------------

Value valuate(const BaseElement& x) {
    const auto& field = *x.field();
    if (x.is_zero()) return Value::infinity(field.rank());
    switch (field.kind()) {
    case FieldKind::PAdicQ:
        return Value::of(Rational(ord_p(std::get<Rational>(x.payload()), field.p())));
    case FieldKind::TAdicQ: {
        const auto& f = std::get<RatFunc<Rational>>(x.payload());
        return Value::of(Rational(low_order(f.num()) - low_order(f.den())));
    }
    case FieldKind::TAdicFp: {
        const auto& f = std::get<RatFunc<Fp>>(x.payload());
        return Value::of(Rational(low_order(f.num()) - low_order(f.den())));
    }
    case FieldKind::CompositeTP: {
        const auto& f = std::get<RatFunc<Rational>>(x.payload());
        int i = low_order(f.num()) - low_order(f.den());
        int j = ord_p(t_leading_ratio(f), field.p());
        return Value::of(Rational(i), Rational(j));
    }
    }
    throw DomainError("unreachable");
}

ResidueElement residue(const BaseElement& x) {
    const auto& field = *x.field();
    Value v = valuate(x);
    const Value zero = Value::zero(field.rank());
    if (v < zero) throw DomainError("residue of an element with negative value");
    if (v > zero) return field.residue_zero();
    switch (field.kind()) {
    case FieldKind::PAdicQ:
        return ResidueElement(reduce_mod_p(std::get<Rational>(x.payload()), field.p()));
    case FieldKind::TAdicQ: {
        const auto& f = std::get<RatFunc<Rational>>(x.payload());
        return ResidueElement(f.evaluate(Rational(0)));
    }
    case FieldKind::TAdicFp: {
        const auto& f = std::get<RatFunc<Fp>>(x.payload());
        return ResidueElement(f.evaluate(Fp(0, field.p())));
    }
    case FieldKind::CompositeTP: {
        // two stages: evaluate the t-adic residue, then reduce mod p
        const auto& f = std::get<RatFunc<Rational>>(x.payload());
        return ResidueElement(reduce_mod_p(f.evaluate(Rational(0)), field.p()));
    }
    }
    throw DomainError("unreachable");
}

BaseElement section(const BaseFieldPtr& field, const Value& gamma) {
    if (gamma.is_infinity()) throw DomainError("section of the infinite value");
    if (gamma.rank() != field->rank()) throw DomainError("section of a value of wrong rank");
    if (!gamma.is_integral()) throw DomainError("section of " + gamma.str() + ": not in the value group");
    switch (field->kind()) {
    case FieldKind::PAdicQ:
        return field->from_rational(Rational(field->p())).pow(static_cast<int>(gamma.comp(0).num()));
    case FieldKind::TAdicQ:
    case FieldKind::TAdicFp:
        return field->t().pow(static_cast<int>(gamma.comp(0).num()));
    case FieldKind::CompositeTP: {
        BaseElement tk = field->t().pow(static_cast<int>(gamma.comp(0).num()));
        BaseElement pk = field->from_rational(Rational(field->p())).pow(static_cast<int>(gamma.comp(1).num()));
        return tk * pk;
    }
    }
    throw DomainError("unreachable");
}

} // namespace ellred
