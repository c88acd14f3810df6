#pragma once

#include <string>

#include "ellred/rational.hpp"
#include "ellred/residue.hpp"

namespace ellred {

/// A place of Q: the real place or a prime.
class PlaceQ {
public:
    static PlaceQ real() { return PlaceQ(true, 0); }
    static PlaceQ prime(const Int& p);

    bool is_real() const { return real_; }
    const Int& p() const { return p_; }
    bool operator==(const PlaceQ& o) const { return real_ == o.real_ && p_ == o.p_; }
    std::string str() const { return real_ ? "real" : p_.str(); }

private:
    PlaceQ(bool real, Int p) : real_(real), p_(std::move(p)) {}
    bool real_;
    Int p_;
};

/// Hilbert symbol (a,b) at a place of Q: +1 iff z^2 = a*x^2 + b*y^2 has a
/// nontrivial solution over the completion.
int hilbert_symbol(const Rational& a, const Rational& b, const PlaceQ& place);

/// Squarefree square-class representative of a nonzero integer (sign kept).
Int squarefree_part(const Int& n);

/// Squarefree integer representative of the square class of a nonzero rational.
Int rational_square_class(const Rational& q);

/// The smooth conic Y^2 = A*X^2 + B over a residue field, with A and B
/// stored as canonical square-class representatives.
struct ConicClass {
    ResidueElement a;
    ResidueElement b;
    Semantics semantics = Semantics::Exact;

    bool operator==(const ConicClass& o) const { return a == o.a && b == o.b; }
    std::string str() const { return "[" + a.str() + "," + b.str() + "]"; }
};

/// Square-class reduction: over Q squarefree integer representatives, over
/// F_p a representative in {1, fixed nonresidue}. Point existence is
/// preserved.
ConicClass conic_normalize(const ResidueElement& a, const ResidueElement& b,
                           Semantics sem = Semantics::Exact);

/// Whether C_{A,B} has a rational point over the residue field. Over a
/// finite field (odd p, A,B nonzero) this is always the case; over Q it is
/// a Hasse test over the relevant places; under real-signs it is a sign rule.
bool conic_has_point(const ConicClass& c);

/// Fixed representative of the nonsquare class of F_p: the largest
/// nonresidue in [2, p-1].
Int canonical_nonresidue(const Int& p);

} // namespace ellred
