#include "ellred/elliptic.hpp"

namespace ellred {

namespace {

XPoly cubic_poly(const BaseElement& a, const BaseElement& b) {
    BaseElement one = a.one();
    return XPoly(std::vector<BaseElement>{b, a, a.zero(), one}, "X");
}

} // namespace

BaseElement discriminant(const BaseElement& a, const BaseElement& b) {
    return a.from_int(4) * a.pow(3) + a.from_int(27) * b * b;
}

WeierstrassCurve::WeierstrassCurve(BaseElement a, BaseElement b)
    : a_(std::move(a)), b_(std::move(b)), disc_(discriminant(a_, b_)) {
    if (disc_.is_zero())
        throw DomainError("singular curve: 4a^3 + 27b^2 = 0");
}

XRatFunc curve_cubic(const WeierstrassCurve& curve) {
    return XRatFunc(cubic_poly(curve.a(), curve.b()));
}

ReductionType classify_reduction(const WeierstrassCurve& curve) {
    ReductionType out{ReductionKind::NotPotentialGood,
                      valuate(curve.disc()),
                      valuate(curve.a()).times(3),
                      valuate(curve.b()).times(2),
                      std::nullopt};
    Value m = Value::min(out.v_a3, out.v_b2);
    if (out.v_disc == m) {
        if (in_index_subgroup(out.v_disc, 12)) {
            out.kind = ReductionKind::Good;
            Rescaled r = rescale(curve, RescaleTarget::GoodUnits);
            out.good = ReductionType::GoodData{r.d, r.a, r.b};
        } else {
            out.kind = ReductionKind::PotentialGoodNotGood;
        }
    } else {
        // v(disc) > min is only possible with the two values equal, since
        // v(4) = v(27) = 0
        if (!(out.v_a3 == out.v_b2))
            throw DomainError("ultrametric violation: v(disc) > min with v(a^3) != v(b^2)");
        out.kind = ReductionKind::NotPotentialGood;
    }
    return out;
}

Rescaled rescale(const WeierstrassCurve& curve, RescaleTarget target) {
    Value v_disc = valuate(curve.disc());
    Value v_a3 = valuate(curve.a()).times(3);
    Value v_b2 = valuate(curve.b()).times(2);
    Value m = Value::min(v_a3, v_b2);
    const BaseFieldPtr& field = curve.field();
    BaseElement d = field->one();
    if (target == RescaleTarget::GoodUnits) {
        if (!(v_disc == m)) throw DomainError("good rescaling requires v(disc) = min{v(a^3), v(b^2)}");
        d = section(field, -v_disc.div(12)); // throws when v(disc) is not in 12*vE
    } else {
        if (!(v_disc > m)) throw DomainError("bad rescaling requires v(disc) > min{v(a^3), v(b^2)}");
        d = section(field, -v_a3.div(12));
    }
    return Rescaled{d.pow(4) * curve.a(), d.pow(6) * curve.b(), d};
}

OmegaStarReport omega_star(const WeierstrassCurve& curve) {
    OmegaStarReport out;
    out.reduction = classify_reduction(curve);
    const BaseFieldPtr& field = curve.field();

    switch (out.reduction.kind) {
    case ReductionKind::Good: {
        const auto& g = *out.reduction.good;
        BaseElement d2 = g.d * g.d;
        out.count = 1;
        out.witness = Witness{AffineGenerator(d2, field->zero(), "S"), WitnessScaling{g.d, {}, {}, {}}};
        ResidueElement a_bar = residue(g.a_unit);
        ResidueElement b_bar = residue(g.b_unit);
        ResidueElement disc_bar = residue(discriminant(g.a_unit, g.b_unit));
        out.elliptic_residue = EllipticResidue{a_bar, b_bar, disc_bar};
        Poly<ResidueElement> cubic_bar(
            std::vector<ResidueElement>{b_bar, a_bar, a_bar.zero(), a_bar.one()}, "X");
        out.notes.push_back(
            "good reduction: residue field is the function field of Y^2 = " + cubic_bar.str());
        return out;
    }
    case ReductionKind::PotentialGoodNotGood:
        out.count = 0;
        out.notes.push_back("potential good reduction only: v(disc) = min{v(a^3),v(b^2)} is not in 12*vE; "
                            "every residually transcendental extension has ruled residue field");
        return out;
    case ReductionKind::NotPotentialGood:
        break;
    }

    Value v_ab = valuate(curve.a() * curve.b());
    if (!in_index_subgroup(v_ab, 2)) {
        out.count = 0;
        out.notes.push_back("v(a*b) = " + v_ab.str() + " is not in 2*vE; no non-ruled extension");
        return out;
    }
    if (!in_index_subgroup(out.reduction.v_disc, 2)) {
        out.count = 0;
        out.notes.push_back("v(disc) = " + out.reduction.v_disc.str() + " is not in 2*vE; no non-ruled extension");
        return out;
    }

    Rescaled r = rescale(curve, RescaleTarget::BadUnits);
    BaseElement u1 = r.a * r.b;
    BaseElement c = section(field, -out.reduction.v_disc.half());
    BaseElement u2 = c * c * curve.disc();
    ResidueElement u1_bar = residue(u1);
    ResidueElement u2_bar = residue(u2);
    ResidueElement minus_two = u1_bar.from_int(-2);
    ResidueElement A = minus_two * u1_bar;
    ResidueElement B = A * u2_bar;
    ConicClass direct = conic_normalize(A, B, field->semantics());
    ConicClass companion = conic_normalize(A, u2_bar, field->semantics());
    out.notes.push_back("residue conic from -2*u1*(S^2 + u2): raw (" + A.str() + "," + B.str() +
                        "), normalized " + direct.str());
    out.notes.push_back("companion square class (-2*u1, u2) normalizes to " + companion.str());

    if (conic_has_point(direct)) {
        out.count = 0;
        out.notes.push_back("the conic " + direct.str() +
                            " has a rational point over the residue field; no non-ruled extension");
        return out;
    }
    out.count = 1;
    BaseElement six_ac = curve.a().from_int(6) * curve.a() * c;
    BaseElement nine_bc = curve.a().from_int(9) * curve.b() * c;
    out.witness = Witness{AffineGenerator(six_ac, nine_bc, "S"),
                          WitnessScaling{r.d, c, u1, u2}};
    out.conic_residue = ConicResidue{direct};
    return out;
}

bool verify_witness(const WeierstrassCurve& curve, const OmegaStarReport& report) {
    if (report.count != 1 || !report.witness)
        throw DomainError("verify_witness requires a report with count 1");
    GaussValuation w(report.witness->generator);
    ResidueAnalysis analysis = analyze_quadratic_gauss(curve_cubic(curve), w);
    if (analysis.ruled) return false;
    if (report.elliptic_residue) {
        if (analysis.kind != ResidueFieldShape::GenusAtLeastOne || analysis.genus != 1 || !analysis.core)
            return false;
        const auto& er = *report.elliptic_residue;
        if (!residue_is_square(analysis.core->constant_class, curve.field()->semantics()))
            return false;
        Poly<ResidueElement> expect(
            std::vector<ResidueElement>{er.b_bar, er.a_bar, er.a_bar.zero(), er.a_bar.one()},
            report.witness->generator.label);
        return analysis.core->core_poly == expect;
    }
    if (report.conic_residue) {
        if (analysis.kind != ResidueFieldShape::Conic || !analysis.conic_class) return false;
        return *analysis.conic_class == report.conic_residue->conic;
    }
    return false;
}

bool weierstrass_identity_check(const BaseElement& a, const BaseElement& b, const BaseElement& c) {
    if (a.is_zero() || c.is_zero()) throw DomainError("identity check requires a != 0 and c != 0");
    BaseElement disc = discriminant(a, b);
    BaseElement six_a = a.from_int(6) * a;
    XPoly s(std::vector<BaseElement>{a.from_int(9) * b * c, six_a * c}, "X"); // S = c(6aX+9b)
    XPoly s2 = s * s;
    BaseElement c2disc = c * c * disc;
    XPoly lhs = cubic_poly(a, b).scale(six_a * six_a * six_a * c * c); // (6a)^3 c^2 (X^3+aX+b)
    XPoly rhs = s * (s2 + XPoly::constant(a.from_int(9) * c2disc, "X")).scale(c.inverse()) -
                (s2 + XPoly::constant(c2disc, "X")).scale(a.from_int(27) * b);
    return lhs == rhs;
}

bool bad_reduction_identity_check(const BaseElement& a, const BaseElement& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("identity check requires a != 0 and b != 0");
    BaseElement disc = discriminant(a, b);
    BaseElement b_inv = b.inverse();
    XPoly s(std::vector<BaseElement>{a.from_int(9), a.from_int(6) * a * b_inv}, "X"); // S = b^{-1}(6aX+9b)
    XPoly s2 = s * s;
    BaseElement scale = (a.from_int(36) * a * a * b_inv).pow(2);
    XPoly lhs = cubic_poly(a, b).scale(scale);
    XPoly sm27 = s - XPoly::constant(a.from_int(27), "X");
    XPoly sm3 = s - XPoly::constant(a.from_int(3), "X");
    XPoly rhs = (sm27 * s2 + sm3.scale(a.from_int(9) * b_inv * b_inv * disc))
                    .scale(a.from_int(6) * a * b);
    return lhs == rhs;
}

std::string reduction_name(ReductionKind k) {
    switch (k) {
    case ReductionKind::Good: return "good";
    case ReductionKind::PotentialGoodNotGood: return "potential_good_not_good";
    case ReductionKind::NotPotentialGood: return "not_potential_good";
    }
    return "?";
}

} // namespace ellred
