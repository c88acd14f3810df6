#include <functional>
#include <ostream>

#include "ellred/batch.hpp"
#include "ellred/expr.hpp"

namespace ellred {

namespace {

struct Harness {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty()) out << " (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
};

WeierstrassCurve laurent_example_curve(const BaseFieldPtr& field) {
    BaseElement a = parse_element("(3*t^2-1)/(3*t^4)", field);
    BaseElement b = parse_element("-2*(9*t^2+1)/(27*t^6)", field);
    return WeierstrassCurve(a, b);
}

} // namespace

int run_selftest(std::ostream& out) {
    Harness h{out};

    h.check("t-adic example: discriminant 4*(t^2+1)^2/t^10", [] {
        auto field = BaseField::t_adic_over_q(Semantics::RealSigns);
        WeierstrassCurve curve = laurent_example_curve(field);
        return curve.disc() == parse_element("4*(t^2+1)^2/t^10", field);
    });

    h.check("t-adic example: v(disc) = -10 > -12 = v(a^3) = v(b^2)", [] {
        auto field = BaseField::t_adic_over_q(Semantics::RealSigns);
        WeierstrassCurve curve = laurent_example_curve(field);
        auto r = classify_reduction(curve);
        return r.kind == ReductionKind::NotPotentialGood &&
               r.v_disc == Value::of(Rational(-10)) && r.v_a3 == Value::of(Rational(-12)) &&
               r.v_b2 == Value::of(Rational(-12));
    });

    h.check("t-adic example, real signs: one extension with conic class [-1,-1]", [] {
        auto field = BaseField::t_adic_over_q(Semantics::RealSigns);
        WeierstrassCurve curve = laurent_example_curve(field);
        OmegaStarReport rep = omega_star(curve);
        if (rep.count != 1 || !rep.conic_residue || !rep.witness) return false;
        ConicClass expect = conic_normalize(ResidueElement(Rational(-1)), ResidueElement(Rational(-1)),
                                            Semantics::RealSigns);
        BaseElement c = section(field, Value::of(Rational(5)));
        BaseElement e = field->from_int(6) * curve.a() * c;
        BaseElement f = field->from_int(9) * curve.b() * c;
        return rep.conic_residue->conic == expect && rep.witness->generator.e == e &&
               rep.witness->generator.f == f && verify_witness(curve, rep);
    });

    h.check("t-adic example, exact semantics: class [-1,-1] has no Q-point either", [] {
        auto field = BaseField::t_adic_over_q(Semantics::Exact);
        WeierstrassCurve curve = laurent_example_curve(field);
        OmegaStarReport rep = omega_star(curve);
        return rep.count == 1 && rep.conic_residue &&
               rep.conic_residue->conic.a == ResidueElement(Rational(-1)) &&
               rep.conic_residue->conic.b == ResidueElement(Rational(-1));
    });

    h.check("genus-one quartic: Gauss analysis at S=X gives conic [-1,-1], not ruled", [] {
        auto field = BaseField::t_adic_over_q(Semantics::Exact);
        XRatFunc g = parse_x_ratfunc("-(X^2+t^2)*(X^2+1)", field);
        auto analysis = analyze_quadratic_gauss(g, GaussValuation::wrt_x(field));
        return analysis.kind == ResidueFieldShape::Conic && !analysis.ruled &&
               analysis.conic_class->a == ResidueElement(Rational(-1)) &&
               analysis.conic_class->b == ResidueElement(Rational(-1));
    });

    h.check("genus-one quartic: second generator t^-1*X gives a second non-ruled extension", [] {
        auto field = BaseField::t_adic_over_q(Semantics::Exact);
        XRatFunc g = parse_x_ratfunc("-(X^2+t^2)*(X^2+1)", field);
        GaussValuation w(parse_generator("t^-1*X", field));
        if (same_gauss_valuation(w, GaussValuation::wrt_x(field))) return false;
        auto analysis = analyze_quadratic_gauss(g, w);
        return analysis.kind == ResidueFieldShape::Conic && !analysis.ruled &&
               analysis.conic_class->a == ResidueElement(Rational(-1)) &&
               analysis.conic_class->b == ResidueElement(Rational(-1));
    });

    h.check("good reduction at p=5: (1,1) has elliptic residue (1,1), delta_bar=1", [] {
        auto field = BaseField::p_adic(5);
        WeierstrassCurve curve(field->from_int(1), field->from_int(1));
        OmegaStarReport rep = omega_star(curve);
        return rep.count == 1 && rep.elliptic_residue &&
               rep.elliptic_residue->a_bar == ResidueElement(Fp(1, 5)) &&
               rep.elliptic_residue->b_bar == ResidueElement(Fp(1, 5)) &&
               rep.elliptic_residue->disc_bar == ResidueElement(Fp(1, 5)) &&
               verify_witness(curve, rep);
    });

    h.check("good reduction at p=5: (625, 15625) rescales by d=1/5 to the same residue", [] {
        auto field = BaseField::p_adic(5);
        WeierstrassCurve curve(field->from_int(625), field->from_int(15625));
        OmegaStarReport rep = omega_star(curve);
        return rep.count == 1 && rep.witness &&
               rep.witness->scaling.d == field->from_rational(Rational(1, 5)) &&
               rep.elliptic_residue->a_bar == ResidueElement(Fp(1, 5)) &&
               rep.elliptic_residue->b_bar == ResidueElement(Fp(1, 5));
    });

    h.check("composite rank-2: (1, 5t) has residue curve (1,0) over F_5", [] {
        auto field = BaseField::composite_t_p(5);
        WeierstrassCurve curve(field->from_int(1), field->from_int(5) * field->t());
        OmegaStarReport rep = omega_star(curve);
        return rep.count == 1 && rep.elliptic_residue &&
               rep.elliptic_residue->a_bar == ResidueElement(Fp(1, 5)) &&
               rep.elliptic_residue->b_bar == ResidueElement(Fp(0, 5)) &&
               rep.elliptic_residue->disc_bar == ResidueElement(Fp(4, 5)) &&
               verify_witness(curve, rep);
    });

    h.check("hilbert symbol examples", [] {
        return hilbert_symbol(Rational(-1), Rational(-1), PlaceQ::real()) == -1 &&
               hilbert_symbol(Rational(-1), Rational(-1), PlaceQ::prime(2)) == -1 &&
               hilbert_symbol(Rational(2), Rational(7), PlaceQ::prime(7)) == 1;
    });

    h.check("conic examples over Q and F_7", [] {
        ConicClass c1 = conic_normalize(ResidueElement(Rational(-1)), ResidueElement(Rational(-1)));
        ConicClass c2 = conic_normalize(ResidueElement(Rational(2)), ResidueElement(Rational(7)));
        ConicClass c3 = conic_normalize(ResidueElement(Fp(3, 7)), ResidueElement(Fp(5, 7)));
        ConicClass c4 = conic_normalize(ResidueElement(Rational(8)), ResidueElement(Rational(18)));
        return !conic_has_point(c1) && conic_has_point(c2) && conic_has_point(c3) &&
               c4.a == ResidueElement(Rational(2)) && c4.b == ResidueElement(Rational(2));
    });

    h.check("cubic rewriting identities", [] {
        auto field = BaseField::p_adic(5);
        return weierstrass_identity_check(field->from_int(1), field->from_int(1), field->from_int(1)) &&
               weierstrass_identity_check(field->from_int(2), field->from_int(3), field->from_int(7)) &&
               bad_reduction_identity_check(field->from_int(2), field->from_int(3));
    });

    return h.failures;
}

} // namespace ellred
