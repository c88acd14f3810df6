#pragma once

#include <string>
#include <variant>

#include "ellred/errors.hpp"
#include "ellred/prime_field.hpp"
#include "ellred/rational.hpp"

namespace ellred {

/// How residue-field square and positivity questions are decided over Q.
/// RealSigns treats the exact rational data as real numbers, which models
/// residue field R for Laurent-series style base fields; arithmetic itself
/// stays exact either way.
enum class Semantics { Exact, RealSigns };

enum class ResidueKind { Q, Fp };

/// Element of a residue field Ev, which here is either Q or F_p.
class ResidueElement {
public:
    ResidueElement() : v_(Rational(0)) {}
    ResidueElement(Rational q) : v_(std::move(q)) {}
    ResidueElement(Fp f) : v_(std::move(f)) {}

    ResidueKind kind() const { return v_.index() == 0 ? ResidueKind::Q : ResidueKind::Fp; }
    const Rational& rational() const {
        if (kind() != ResidueKind::Q) throw DomainError("residue element is not rational");
        return std::get<Rational>(v_);
    }
    const Fp& fp() const {
        if (kind() != ResidueKind::Fp) throw DomainError("residue element is not in a prime field");
        return std::get<Fp>(v_);
    }

    bool is_zero() const {
        return kind() == ResidueKind::Q ? rational().is_zero() : fp().is_zero();
    }
    ResidueElement zero() const {
        return kind() == ResidueKind::Q ? ResidueElement(Rational(0)) : ResidueElement(fp().zero());
    }
    ResidueElement one() const {
        return kind() == ResidueKind::Q ? ResidueElement(Rational(1)) : ResidueElement(fp().one());
    }
    ResidueElement from_int(std::int64_t n) const {
        return kind() == ResidueKind::Q ? ResidueElement(Rational(n)) : ResidueElement(fp().from_int(n));
    }
    Int characteristic() const { return kind() == ResidueKind::Q ? Int(0) : fp().modulus(); }

    ResidueElement operator-() const {
        return kind() == ResidueKind::Q ? ResidueElement(-rational()) : ResidueElement(-fp());
    }
    ResidueElement operator+(const ResidueElement& o) const {
        check(o);
        return kind() == ResidueKind::Q ? ResidueElement(rational() + o.rational())
                                        : ResidueElement(fp() + o.fp());
    }
    ResidueElement operator-(const ResidueElement& o) const { return *this + (-o); }
    ResidueElement operator*(const ResidueElement& o) const {
        check(o);
        return kind() == ResidueKind::Q ? ResidueElement(rational() * o.rational())
                                        : ResidueElement(fp() * o.fp());
    }
    ResidueElement operator/(const ResidueElement& o) const { return *this * o.inverse(); }
    ResidueElement inverse() const {
        return kind() == ResidueKind::Q ? ResidueElement(rational().inverse())
                                        : ResidueElement(fp().inverse());
    }

    bool operator==(const ResidueElement& o) const { return v_ == o.v_; }

    /// Exact square test in the residue field itself (no semantics tag).
    bool is_square() const {
        return kind() == ResidueKind::Q ? rational().is_square() : fp().is_square();
    }

    std::string str() const { return kind() == ResidueKind::Q ? rational().str() : fp().str(); }

private:
    void check(const ResidueElement& o) const {
        if (kind() != o.kind()) throw DomainError("mixed residue fields");
    }
    std::variant<Rational, Fp> v_;
};

/// Square test in the residue field under the given semantics: exact over
/// Q, positivity under real-signs, Euler's criterion over F_p.
inline bool residue_is_square(const ResidueElement& x, Semantics sem) {
    if (x.kind() == ResidueKind::Q && sem == Semantics::RealSigns)
        return x.rational().sign() >= 0;
    return x.is_square();
}

} // namespace ellred
