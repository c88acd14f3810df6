#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellred/elliptic.hpp"
#include "ellred/expr.hpp"
#include "testutil.hpp"

using namespace ellred;
using ellred::testing::Rng;

namespace {

WeierstrassCurve laurent_example_curve(const BaseFieldPtr& field) {
    return WeierstrassCurve(parse_element("(3*t^2-1)/(3*t^4)", field),
                            parse_element("-2*(9*t^2+1)/(27*t^6)", field));
}

/// Curves spread across the three reduction types; roughly half are
/// near-singular so that the bad-reduction branch is well represented.
WeierstrassCurve random_curve(Rng& rng, const BaseFieldPtr& field) {
    for (;;) {
        BaseElement a = field->zero(), b = field->zero();
        double roll = rng.chance(0.5) ? 0.0 : 1.0;
        if (roll == 0.0) {
            // v(disc) > min: a = -3 m^2, b = 2 m^3 + eps with small eps
            BaseElement m = rng.unit(field);
            int j = static_cast<int>(rng.int_in(1, 4));
            BaseElement eps = rng.unit(field) *
                              section(field, Value::of(std::vector<Rational>(
                                                 static_cast<std::size_t>(field->rank()), Rational(j))));
            a = field->from_int(-3) * m * m;
            b = field->from_int(2) * m * m * m + eps;
        } else if (rng.chance(0.12)) {
            a = field->zero();
            b = rng.element(field, 2, true, 1);
        } else if (rng.chance(0.12)) {
            a = rng.element(field, 2, true, 1);
            b = field->zero();
        } else {
            a = rng.element(field, 2, false, 1);
            b = rng.element(field, 2, false, 1);
        }
        if (rng.chance(0.4)) {
            BaseElement e = rng.element(field, 1, true, 1);
            a = a * e.pow(4);
            b = b * e.pow(6);
        }
        if (discriminant(a, b).is_zero()) continue;
        if (a.is_zero() && b.is_zero()) continue;
        return WeierstrassCurve(a, b);
    }
}

} // namespace

TEST_CASE("discriminant examples") {
    auto q5 = BaseField::p_adic(5);
    CHECK(discriminant(q5->from_int(1), q5->from_int(1)) == q5->from_int(31));
    CHECK(discriminant(q5->zero(), q5->from_int(3)) == q5->from_int(243)); // 27 b^2

    auto qt = BaseField::t_adic_over_q();
    WeierstrassCurve curve = laurent_example_curve(qt);
    CHECK(curve.disc() == parse_element("4*(t^2+1)^2/t^10", qt));

    CHECK_THROWS_AS(WeierstrassCurve(qt->from_int(-3), qt->from_int(2)), DomainError);
}

TEST_CASE("classify_reduction examples") {
    auto q5 = BaseField::p_adic(5);
    auto r1 = classify_reduction(WeierstrassCurve(q5->from_int(1), q5->from_int(1)));
    CHECK(r1.kind == ReductionKind::Good);
    REQUIRE(r1.good);
    CHECK(r1.good->d == q5->one());

    auto qt = BaseField::t_adic_over_q();
    auto r2 = classify_reduction(laurent_example_curve(qt));
    CHECK(r2.kind == ReductionKind::NotPotentialGood);
    CHECK(r2.v_disc == Value::of(Rational(-10)));
    CHECK(r2.v_a3 == Value::of(Rational(-12)));
    CHECK(r2.v_b2 == Value::of(Rational(-12)));

    auto r3 = classify_reduction(WeierstrassCurve(qt->zero(), qt->t()));
    CHECK(r3.kind == ReductionKind::PotentialGoodNotGood);
    CHECK(r3.v_disc == Value::of(Rational(2)));
    CHECK(r3.v_a3.is_infinity());

    auto r4 = classify_reduction(WeierstrassCurve(q5->from_int(625), q5->from_int(15625)));
    CHECK(r4.kind == ReductionKind::Good);
    REQUIRE(r4.good);
    CHECK(r4.good->d == q5->from_rational(Rational(1, 5)));
    CHECK(r4.good->a_unit == q5->one());
    CHECK(r4.good->b_unit == q5->one());
}

TEST_CASE("rescale examples") {
    auto q5 = BaseField::p_adic(5);
    auto good = rescale(WeierstrassCurve(q5->from_int(625), q5->from_int(15625)),
                        RescaleTarget::GoodUnits);
    CHECK(good.a == q5->one());
    CHECK(good.b == q5->one());
    CHECK(good.d == q5->from_rational(Rational(1, 5)));

    auto qt = BaseField::t_adic_over_q();
    auto bad = rescale(laurent_example_curve(qt), RescaleTarget::BadUnits);
    CHECK(bad.d == qt->t());
    CHECK(residue(bad.a) == ResidueElement(Rational(-1, 3)));
    CHECK(residue(bad.b) == ResidueElement(Rational(-2, 27)));
    CHECK(valuate(discriminant(bad.a, bad.b)) > Value::zero(1));

    auto good2 = rescale(WeierstrassCurve(qt->t().pow(4), qt->t().pow(6)), RescaleTarget::GoodUnits);
    CHECK(good2.a == qt->one());
    CHECK(good2.b == qt->one());
    CHECK(good2.d == qt->t().pow(-1));

    // divisibility precondition failure surfaces as an error
    CHECK_THROWS_AS(rescale(WeierstrassCurve(qt->zero(), qt->t()), RescaleTarget::GoodUnits),
                    DomainError);
}

TEST_CASE("omega_star: good reduction over Q_5") {
    auto q5 = BaseField::p_adic(5);
    WeierstrassCurve curve(q5->from_int(1), q5->from_int(1));
    OmegaStarReport rep = omega_star(curve);
    CHECK(rep.count == 1);
    REQUIRE(rep.witness);
    CHECK(rep.witness->generator.e == q5->one());
    CHECK(rep.witness->generator.f == q5->zero());
    REQUIRE(rep.elliptic_residue);
    CHECK(rep.elliptic_residue->a_bar == ResidueElement(Fp(1, 5)));
    CHECK(rep.elliptic_residue->b_bar == ResidueElement(Fp(1, 5)));
    CHECK(rep.elliptic_residue->disc_bar == ResidueElement(Fp(1, 5)));
    CHECK(verify_witness(curve, rep));
}

TEST_CASE("omega_star: the Laurent-series style example") {
    for (Semantics sem : {Semantics::RealSigns, Semantics::Exact}) {
        auto field = BaseField::t_adic_over_q(sem);
        WeierstrassCurve curve = laurent_example_curve(field);
        OmegaStarReport rep = omega_star(curve);
        CHECK(rep.count == 1);
        REQUIRE(rep.witness);
        REQUIRE(rep.conic_residue);
        CHECK(rep.conic_residue->conic.a == ResidueElement(Rational(-1)));
        CHECK(rep.conic_residue->conic.b == ResidueElement(Rational(-1)));
        // witness generator is S = c(6aX + 9b) with c = t^5
        BaseElement c = section(field, Value::of(Rational(5)));
        REQUIRE(rep.witness->scaling.c);
        CHECK(*rep.witness->scaling.c == c);
        CHECK(rep.witness->generator.e == field->from_int(6) * curve.a() * c);
        CHECK(rep.witness->generator.f == field->from_int(9) * curve.b() * c);
        // scaling data: d = t, u1_bar = 2/81, u2_bar = 4
        CHECK(rep.witness->scaling.d == field->t());
        REQUIRE(rep.witness->scaling.u1);
        REQUIRE(rep.witness->scaling.u2);
        CHECK(residue(*rep.witness->scaling.u1) == ResidueElement(Rational(2, 81)));
        CHECK(residue(*rep.witness->scaling.u2) == ResidueElement(Rational(4)));
        CHECK(verify_witness(curve, rep));
    }
}

TEST_CASE("omega_star: count 0 branches") {
    auto q5 = BaseField::p_adic(5);
    // disc = 140, v(140) = 1 odd
    OmegaStarReport rep = omega_star(WeierstrassCurve(q5->from_int(2), q5->from_int(2)));
    CHECK(rep.reduction.kind == ReductionKind::NotPotentialGood);
    CHECK(rep.count == 0);
    CHECK(!rep.witness);

    auto qt = BaseField::t_adic_over_q();
    OmegaStarReport rep2 = omega_star(WeierstrassCurve(qt->zero(), qt->t()));
    CHECK(rep2.reduction.kind == ReductionKind::PotentialGoodNotGood);
    CHECK(rep2.count == 0);
}

TEST_CASE("omega_star: composite rank-2 good reduction") {
    auto comp = BaseField::composite_t_p(5);
    WeierstrassCurve curve(comp->from_int(1), comp->from_int(5) * comp->t());
    OmegaStarReport rep = omega_star(curve);
    CHECK(rep.reduction.kind == ReductionKind::Good);
    CHECK(rep.count == 1);
    REQUIRE(rep.elliptic_residue);
    CHECK(rep.elliptic_residue->a_bar == ResidueElement(Fp(1, 5)));
    CHECK(rep.elliptic_residue->b_bar == ResidueElement(Fp(0, 5)));
    CHECK(rep.elliptic_residue->disc_bar == ResidueElement(Fp(4, 5)));
    CHECK(verify_witness(curve, rep));
}

TEST_CASE("omega_star: vanishing a or b routes through the potential-good test") {
    auto q5 = BaseField::p_adic(5);
    // a = 0: good iff v(b) in 6*vE
    OmegaStarReport r1 = omega_star(WeierstrassCurve(q5->zero(), q5->from_int(1)));
    CHECK(r1.reduction.kind == ReductionKind::Good);
    CHECK(r1.count == 1);
    CHECK(r1.elliptic_residue->a_bar == ResidueElement(Fp(0, 5)));
    CHECK(r1.elliptic_residue->disc_bar == ResidueElement(Fp(2, 5))); // 27 mod 5
    CHECK(verify_witness(WeierstrassCurve(q5->zero(), q5->from_int(1)), r1));

    OmegaStarReport r2 = omega_star(WeierstrassCurve(q5->zero(), q5->from_int(5)));
    CHECK(r2.reduction.kind == ReductionKind::PotentialGoodNotGood); // v(b^2) = 2 not in 12Z
    CHECK(r2.count == 0);

    auto qt = BaseField::t_adic_over_q();
    OmegaStarReport r3 = omega_star(WeierstrassCurve(qt->t().pow(-6), qt->zero()));
    CHECK(r3.reduction.kind == ReductionKind::PotentialGoodNotGood); // v(a^3) = -18 not in 12Z
    CHECK(r3.count == 0);
    OmegaStarReport r4 = omega_star(WeierstrassCurve(qt->t().pow(-4), qt->zero()));
    CHECK(r4.reduction.kind == ReductionKind::Good); // v(a^3) = -12
    CHECK(r4.count == 1);
    CHECK(verify_witness(WeierstrassCurve(qt->t().pow(-4), qt->zero()), r4));
}

TEST_CASE("verify_witness rejects a corrupted generator") {
    auto field = BaseField::t_adic_over_q(Semantics::RealSigns);
    WeierstrassCurve curve = laurent_example_curve(field);
    OmegaStarReport rep = omega_star(curve);
    REQUIRE(rep.count == 1);
    OmegaStarReport corrupted = rep;
    corrupted.witness->generator = AffineGenerator::x(field, "S");
    CHECK(!verify_witness(curve, corrupted));

    OmegaStarReport no_witness = omega_star(WeierstrassCurve(field->zero(), field->t()));
    CHECK_THROWS_AS(verify_witness(WeierstrassCurve(field->zero(), field->t()), no_witness),
                    DomainError);
}

TEST_CASE("cubic rewriting identity: examples and perturbation") {
    auto q5 = BaseField::p_adic(5);
    CHECK(weierstrass_identity_check(q5->from_int(1), q5->from_int(1), q5->from_int(1)));
    CHECK(weierstrass_identity_check(q5->from_int(2), q5->from_int(3), q5->from_int(7)));

    // replacing 27b by 26b on the right-hand side destroys the identity
    BaseElement a = q5->from_int(1), b = q5->from_int(1), c = q5->from_int(1);
    BaseElement disc = discriminant(a, b);
    BaseElement six_a = a.from_int(6) * a;
    XPoly s(std::vector<BaseElement>{a.from_int(9) * b * c, six_a * c}, "X");
    XPoly s2 = s * s;
    BaseElement c2disc = c * c * disc;
    XPoly lhs = XPoly(std::vector<BaseElement>{b, a, a.zero(), a.one()}, "X")
                    .scale(six_a * six_a * six_a * c * c);
    XPoly rhs_bad = s * (s2 + XPoly::constant(a.from_int(9) * c2disc, "X")).scale(c.inverse()) -
                    (s2 + XPoly::constant(c2disc, "X")).scale(a.from_int(26) * b);
    CHECK(!(lhs == rhs_bad));
}

TEST_CASE("identities hold on random triples over every field kind") {
    Rng rng(31);
    for (const auto& field : ellred::testing::all_field_kinds()) {
        for (int iter = 0; iter < 100; ++iter) {
            BaseElement a = rng.element(field, 2, true, 1);
            BaseElement b = rng.element(field, 2, false, 1);
            BaseElement c = rng.element(field, 2, true, 1);
            CHECK(weierstrass_identity_check(a, b, c));
            if (!b.is_zero()) CHECK(bad_reduction_identity_check(a, b));
        }
    }
}

TEST_CASE("omega_star: count is 0 or 1 and reduction invariants hold (random)") {
    Rng rng(32);
    for (const auto& field : ellred::testing::all_field_kinds()) {
        for (int iter = 0; iter < 80; ++iter) {
            WeierstrassCurve curve = random_curve(rng, field);
            OmegaStarReport rep = omega_star(curve);
            CHECK((rep.count == 0 || rep.count == 1));
            if (rep.reduction.kind == ReductionKind::NotPotentialGood)
                CHECK(rep.reduction.v_a3 == rep.reduction.v_b2);
            if (rep.count == 1) {
                CHECK(rep.witness.has_value());
                CHECK((rep.elliptic_residue.has_value() || rep.conic_residue.has_value()));
                if (rep.elliptic_residue) {
                    CHECK(!rep.elliptic_residue->disc_bar.is_zero());
                    // residue discriminant recomputed from (a_bar, b_bar)
                    const auto& er = *rep.elliptic_residue;
                    ResidueElement again = er.a_bar.from_int(4) * er.a_bar * er.a_bar * er.a_bar +
                                           er.a_bar.from_int(27) * er.b_bar * er.b_bar;
                    CHECK(again == er.disc_bar);
                }
                if (rep.conic_residue) CHECK(!conic_has_point(rep.conic_residue->conic));
                CHECK(verify_witness(curve, rep));
            } else {
                CHECK(!rep.witness);
            }
        }
    }
}

TEST_CASE("omega_star is invariant under (a,b) -> (e^4 a, e^6 b)") {
    Rng rng(33);
    for (const auto& field : ellred::testing::all_field_kinds()) {
        for (int iter = 0; iter < 40; ++iter) {
            WeierstrassCurve curve = random_curve(rng, field);
            BaseElement e = rng.element(field, 2, true, 1);
            WeierstrassCurve twisted(curve.a() * e.pow(4), curve.b() * e.pow(6));
            OmegaStarReport r1 = omega_star(curve);
            OmegaStarReport r2 = omega_star(twisted);
            CHECK(r1.count == r2.count);
            CHECK(r1.reduction.kind == r2.reduction.kind);
            if (r1.conic_residue && r2.conic_residue)
                CHECK(r1.conic_residue->conic == r2.conic_residue->conic);
            CHECK(r1.conic_residue.has_value() == r2.conic_residue.has_value());
            CHECK(r1.elliptic_residue.has_value() == r2.elliptic_residue.has_value());
            if (r1.elliptic_residue && r2.elliptic_residue) {
                // the residue curves differ by the residue of eta = d2*e/d1
                const auto& g1 = *r1.reduction.good;
                const auto& g2 = *r2.reduction.good;
                ResidueElement eta = residue(g2.d * e / g1.d);
                ResidueElement eta4 = eta * eta * eta * eta;
                ResidueElement eta6 = eta4 * eta * eta;
                CHECK(r2.elliptic_residue->a_bar == eta4 * r1.elliptic_residue->a_bar);
                CHECK(r2.elliptic_residue->b_bar == eta6 * r1.elliptic_residue->b_bar);
            }
        }
    }
}

TEST_CASE("conic class does not depend on the choice of the scaling representatives") {
    // valid alternatives to the canonical sections d, c differ by units, so
    // u1 and u2 move by residue squares and the normalized class is fixed
    Rng rng(35);
    for (const auto& field :
         {BaseField::t_adic_over_q(), BaseField::t_adic_over_q(Semantics::RealSigns)}) {
        for (int iter = 0; iter < 25; ++iter) {
            WeierstrassCurve curve = random_curve(rng, field);
            OmegaStarReport rep = omega_star(curve);
            if (!rep.conic_residue) continue;
            const auto& sc = rep.witness->scaling;
            BaseElement du = sc.d * rng.unit(field);
            BaseElement cu = *sc.c * rng.unit(field);
            BaseElement u1_alt = du.pow(4) * curve.a() * du.pow(6) * curve.b();
            BaseElement u2_alt = cu * cu * curve.disc();
            ResidueElement m2 = field->residue_one().from_int(-2);
            ResidueElement a_alt = m2 * residue(u1_alt);
            ResidueElement b_alt = a_alt * residue(u2_alt);
            CHECK(conic_normalize(a_alt, b_alt, field->semantics()) == rep.conic_residue->conic);
        }
    }
}

TEST_CASE("uniqueness spot-check over sampled non-witness generators") {
    Rng rng(34);
    for (const auto& field : ellred::testing::all_field_kinds()) {
        int checked = 0;
        for (int iter = 0; iter < 25; ++iter) {
            WeierstrassCurve curve = random_curve(rng, field);
            OmegaStarReport rep = omega_star(curve);
            XRatFunc cubic = curve_cubic(curve);

            std::vector<GaussValuation> sample;
            sample.push_back(GaussValuation::wrt_x(field));
            for (int k = -2; k <= 2; ++k) {
                if (k == 0) continue;
                std::vector<Rational> comps(static_cast<std::size_t>(field->rank()), Rational(0));
                comps[0] = Rational(k);
                sample.push_back(GaussValuation(
                    AffineGenerator(section(field, Value::of(comps)), field->zero())));
                if (field->rank() == 2) {
                    std::vector<Rational> c2 = {Rational(0), Rational(k)};
                    sample.push_back(GaussValuation(
                        AffineGenerator(section(field, Value::of(c2)), field->zero())));
                }
            }
            // the bad-reduction shape c(6aX+9b) when the witness is linear in X
            Value v_disc = valuate(curve.disc());
            if (!curve.a().is_zero() && in_index_subgroup(v_disc, 2)) {
                BaseElement c = section(field, -v_disc.half());
                sample.push_back(GaussValuation(AffineGenerator(
                    field->from_int(6) * curve.a() * c, field->from_int(9) * curve.b() * c)));
            }

            for (const auto& w : sample) {
                if (rep.count == 1 && same_gauss_valuation(w, GaussValuation(rep.witness->generator)))
                    continue;
                ResidueAnalysis analysis = analyze_quadratic_gauss(cubic, w);
                CHECK(analysis.ruled);
                ++checked;
            }
        }
        CHECK(checked > 50);
    }
}
