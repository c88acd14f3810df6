#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "ellred/errors.hpp"
#include "ellred/prime_field.hpp"
#include "ellred/ratfunc.hpp"
#include "ellred/rational.hpp"
#include "ellred/residue.hpp"
#include "ellred/value.hpp"

namespace ellred {

/// The supported valued base fields (E, v). Residue characteristic is
/// never 2 or 3, so all constructions require p > 3.
///   PAdicQ       E = Q,       v = p-adic order,            Ev = F_p, rank 1
///   TAdicQ       E = Q(t),    v = t-adic order,            Ev = Q,   rank 1
///   TAdicFp      E = F_p(t),  v = t-adic order,            Ev = F_p, rank 1
///   CompositeTP  E = Q(t),    v = (t-order, then p-order), Ev = F_p, rank 2 lex
enum class FieldKind { PAdicQ, TAdicQ, TAdicFp, CompositeTP };

class BaseField;
using BaseFieldPtr = std::shared_ptr<const BaseField>;

class BaseElement;

class BaseField : public std::enable_shared_from_this<BaseField> {
public:
    static BaseFieldPtr p_adic(const Int& p);
    static BaseFieldPtr t_adic_over_q(Semantics sem = Semantics::Exact);
    static BaseFieldPtr t_adic_over_fp(const Int& p);
    static BaseFieldPtr composite_t_p(const Int& p);

    FieldKind kind() const { return kind_; }
    const Int& p() const { return p_; }
    Semantics semantics() const { return sem_; }
    int rank() const { return kind_ == FieldKind::CompositeTP ? 2 : 1; }
    ResidueKind residue_kind() const { return kind_ == FieldKind::TAdicQ ? ResidueKind::Q : ResidueKind::Fp; }
    bool has_variable_t() const { return kind_ != FieldKind::PAdicQ; }

    bool operator==(const BaseField& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && sem_ == o.sem_;
    }

    BaseElement zero() const;
    BaseElement one() const;
    BaseElement from_int(const Int& n) const;
    BaseElement from_rational(const Rational& q) const;
    /// The element t; rejected for p-adic Q.
    BaseElement t() const;

    ResidueElement residue_zero() const;
    ResidueElement residue_one() const;

    std::string describe() const;

private:
    BaseField(FieldKind kind, Int p, Semantics sem) : kind_(kind), p_(std::move(p)), sem_(sem) {}
    FieldKind kind_;
    Int p_;
    Semantics sem_;
};

/// Exact element of the base field E, tagged with its field.
class BaseElement {
public:
    using Payload = std::variant<Rational, RatFunc<Rational>, RatFunc<Fp>>;

    BaseElement(BaseFieldPtr field, Payload payload);

    const BaseFieldPtr& field() const { return field_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    BaseElement zero() const { return field_->zero(); }
    BaseElement one() const { return field_->one(); }
    BaseElement from_int(std::int64_t n) const { return field_->from_int(Int(n)); }
    Int characteristic() const {
        return field_->kind() == FieldKind::TAdicFp ? field_->p() : Int(0);
    }

    BaseElement operator-() const;
    BaseElement operator+(const BaseElement& o) const;
    BaseElement operator-(const BaseElement& o) const;
    BaseElement operator*(const BaseElement& o) const;
    BaseElement operator/(const BaseElement& o) const;
    BaseElement inverse() const;
    BaseElement pow(int n) const;

    bool operator==(const BaseElement& o) const;

    /// Exact square test in E.
    bool is_square() const;

    /// Expression string that parses back to an equal element.
    std::string str() const;

private:
    void check_compatible(const BaseElement& o) const;
    BaseFieldPtr field_;
    Payload payload_;
};

/// Unwrapping overload: gcd of polynomials over E runs on the payload
/// representation (fraction-free over the rational-function kinds).
Poly<BaseElement> poly_gcd(const Poly<BaseElement>& f, const Poly<BaseElement>& g);

/// The valuation map v: E^x -> Z^rank, with v(0) = INF.
Value valuate(const BaseElement& x);

/// Image of x in the residue field Ev; requires valuate(x) >= 0.
ResidueElement residue(const BaseElement& x);

/// Canonical element with the prescribed integral value: p^k, t^k or t^i*p^j.
BaseElement section(const BaseFieldPtr& field, const Value& gamma);

} // namespace ellred
