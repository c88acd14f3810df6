#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellred/base_field.hpp"
#include "ellred/conic.hpp"
#include "ellred/gauss.hpp"

namespace ellred {

/// The curve Y^2 = X^3 + a*X + b over E, with its discriminant cached.
/// Requires disc = 4a^3 + 27b^2 != 0.
class WeierstrassCurve {
public:
    WeierstrassCurve(BaseElement a, BaseElement b);

    const BaseElement& a() const { return a_; }
    const BaseElement& b() const { return b_; }
    const BaseElement& disc() const { return disc_; }
    const BaseFieldPtr& field() const { return a_.field(); }

private:
    BaseElement a_;
    BaseElement b_;
    BaseElement disc_;
};

/// disc(a, b) = 4a^3 + 27b^2, exactly.
BaseElement discriminant(const BaseElement& a, const BaseElement& b);

enum class ReductionKind {
    Good,                // v(disc) = min{v(a^3), v(b^2)} in 12*vE
    PotentialGoodNotGood,// v(disc) = min, but min not in 12*vE
    NotPotentialGood,    // v(disc) > min (forces v(a^3) = v(b^2))
};

/// Classification of the reduction type, with the three relevant values
/// and, for good reduction, the canonical rescaling to unit data.
struct ReductionType {
    ReductionKind kind;
    Value v_disc;
    Value v_a3;
    Value v_b2;
    struct GoodData {
        BaseElement d;       // v(d^12 * disc) = 0
        BaseElement a_unit;  // d^4 a
        BaseElement b_unit;  // d^6 b
    };
    std::optional<GoodData> good;
};

ReductionType classify_reduction(const WeierstrassCurve& curve);

enum class RescaleTarget { GoodUnits, BadUnits };

struct Rescaled {
    BaseElement a;
    BaseElement b;
    BaseElement d;
};

/// Good units: d = section(-v(disc)/12), making a' = d^4 a, b' = d^6 b
/// integral with unit discriminant. Bad units: d = section(-v(a^3)/12),
/// making v(a'^3) = v(b'^2) = 0 with v(disc') > 0.
Rescaled rescale(const WeierstrassCurve& curve, RescaleTarget target);

struct EllipticResidue {
    ResidueElement a_bar;
    ResidueElement b_bar;
    ResidueElement disc_bar; // nonzero
};

struct ConicResidue {
    ConicClass conic;
};

struct WitnessScaling {
    BaseElement d;
    std::optional<BaseElement> c;
    std::optional<BaseElement> u1;
    std::optional<BaseElement> u2;
};

struct Witness {
    AffineGenerator generator;
    WitnessScaling scaling;
};

/// The full answer for a curve: reduction type, |Omega_v^*(F)| (0 or 1),
/// and, when an extension with non-ruled transcendental residue exists,
/// the witness Gauss generator and the residue function field data.
struct OmegaStarReport {
    ReductionType reduction;
    int count = 0;
    std::optional<Witness> witness;
    std::optional<EllipticResidue> elliptic_residue;
    std::optional<ConicResidue> conic_residue;
    std::vector<std::string> notes;
};

OmegaStarReport omega_star(const WeierstrassCurve& curve);

/// Re-derive the residue function field through the Gauss analyzer and
/// check it matches the report: non-ruled, and the same elliptic curve
/// data or the same normalized conic class. Requires count = 1.
bool verify_witness(const WeierstrassCurve& curve, const OmegaStarReport& report);

/// Symbolic check of the cubic rewriting identity behind the bad-reduction
/// witness: with S = c(6aX + 9b),
///   (6a)^3 c^2 (X^3+aX+b) = c^{-1} S (S^2 + 9 c^2 D) - 27 b (S^2 + c^2 D)
/// where D = disc(a,b). Requires a != 0, c != 0.
bool weierstrass_identity_check(const BaseElement& a, const BaseElement& b, const BaseElement& c);

/// Companion identity with S = b^{-1}(6aX + 9b):
///   (36 a^2 b^{-1})^2 (X^3+aX+b) = 6ab ((S-27) S^2 + 9 (S-3) b^{-2} D).
/// Requires a != 0, b != 0.
bool bad_reduction_identity_check(const BaseElement& a, const BaseElement& b);

/// X^3 + a*X + b as a rational function in X.
XRatFunc curve_cubic(const WeierstrassCurve& curve);

std::string reduction_name(ReductionKind k);

} // namespace ellred
