#include "ellred/gauss.hpp"

namespace ellred {

namespace {

// X = (S - f)/e as a polynomial in S.
XPoly substitution_poly(const GaussValuation& w) {
    const auto& gen = w.generator;
    BaseElement e_inv = gen.e.inverse();
    return XPoly(std::vector<BaseElement>{-(gen.f * e_inv), e_inv}, gen.label);
}

Value min_coeff_value(const XPoly& p, int rank) {
    Value m = Value::infinity(rank);
    for (const auto& c : p.coeffs()) m = Value::min(m, valuate(c));
    return m;
}

Poly<ResidueElement> residue_poly(const XPoly& p, const BaseElement& scale, const std::string& var) {
    std::vector<ResidueElement> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs.push_back(residue(c * scale));
    return Poly<ResidueElement>(std::move(coeffs), var);
}

} // namespace

bool same_gauss_valuation(const GaussValuation& w1, const GaussValuation& w2) {
    if (!(*w1.field() == *w2.field())) return false;
    // S2 = (e2/e1)*S1 + (f2 - e2*f1/e1); equal valuations iff the slope is
    // a unit and the shift is integral.
    BaseElement slope = w2.generator.e / w1.generator.e;
    BaseElement shift = w2.generator.f - slope * w1.generator.f;
    const int r = w1.field()->rank();
    return valuate(slope) == Value::zero(r) && valuate(shift) >= Value::zero(r);
}

Value gauss_value_pair(const XPoly& num, const XPoly& den, const GaussValuation& w) {
    if (den.is_zero()) throw DomainError("gauss value of pair with zero denominator");
    const int rank = w.field()->rank();
    if (num.is_zero()) return Value::infinity(rank);
    XPoly sub = substitution_poly(w);
    return min_coeff_value(num.compose(sub), rank) - min_coeff_value(den.compose(sub), rank);
}

Value gauss_value(const XRatFunc& h, const GaussValuation& w) {
    return gauss_value_pair(h.num(), h.den(), w);
}

RatFunc<ResidueElement> gauss_residue(const XRatFunc& h, const GaussValuation& w) {
    const int rank = w.field()->rank();
    if (h.is_zero()) throw DomainError("gauss residue of zero");
    XPoly sub = substitution_poly(w);
    XPoly num_s = h.num().compose(sub);
    XPoly den_s = h.den().compose(sub);
    Value mn = min_coeff_value(num_s, rank);
    Value md = min_coeff_value(den_s, rank);
    if (!(mn == md)) throw DomainError("gauss residue requires value 0, got " + (mn - md).str());
    BaseElement scale = section(w.field(), mn).inverse();
    const std::string& var = w.generator.label;
    return RatFunc<ResidueElement>(residue_poly(num_s, scale, var), residue_poly(den_s, scale, var));
}

namespace {

// Square test of a residue square class under the field semantics: the
// polynomial part via squarefree data, the constant part per semantics.
bool residue_class_is_square(const RatFunc<ResidueElement>& r, Semantics sem) {
    if (r.is_zero()) return true;
    auto dec = squarefree_decompose(r.num() * r.den());
    for (const auto& [factor, mult] : dec.factors)
        if (mult % 2 != 0) return false;
    return residue_is_square(dec.scalar, sem);
}

} // namespace

Value quad_ext_value(const QuadExtElement& x, const GaussValuation& w) {
    Value wg = gauss_value(x.g, w);
    Value half = wg.half();
    if (in_index_subgroup(wg, 2)) {
        // inert or split: decided by the residue square class of g*phi^2
        BaseElement phi = section(w.field(), -half);
        RatFunc<ResidueElement> r = gauss_residue(x.g * XRatFunc::constant(phi * phi, x.g.var()), w);
        if (residue_class_is_square(r, w.field()->semantics()))
            throw SplitError("quadratic extension splits over this Gauss valuation; "
                             "element values are ambiguous");
    }
    Value wp = gauss_value(x.p, w);
    if (x.q.is_zero()) return wp;
    return Value::min(wp, gauss_value(x.q, w) + half);
}

ResidueAnalysis analyze_quadratic_gauss(const XRatFunc& g, const GaussValuation& w) {
    if (g.is_zero()) throw DomainError("analysis of zero radicand");
    const auto& field = w.field();
    ResidueAnalysis out;
    out.w_g = gauss_value(g, w);
    out.parity_in_2vE = in_index_subgroup(out.w_g, 2);
    if (!out.parity_in_2vE) {
        // ramified: the residue field of F is Ev(S-bar) itself
        out.kind = ResidueFieldShape::Rational;
        out.ruled = true;
        return out;
    }
    BaseElement phi = section(field, out.w_g.half());
    RatFunc<ResidueElement> r = gauss_residue(g / XRatFunc::constant(phi * phi, g.var()), w);

    // square class of n/d equals the class of n*d; odd-multiplicity
    // denominator factors move into the numerator this way
    auto dec = squarefree_decompose(r.num() * r.den());
    Poly<ResidueElement> core = Poly<ResidueElement>::constant(dec.scalar.one(), w.generator.label);
    for (const auto& [factor, mult] : dec.factors)
        if (mult % 2 != 0) core = core * factor;
    core.set_var(w.generator.label);
    out.core = ResidueCore{dec.scalar, core};

    const Semantics sem = field->semantics();
    const int deg = core.degree();
    if (deg == 0) {
        out.kind = ResidueFieldShape::SplitOrConstant;
        out.split = residue_is_square(dec.scalar, sem);
        out.ruled = true;
    } else if (deg == 1) {
        out.kind = ResidueFieldShape::Rational;
        out.ruled = true;
    } else if (deg == 2) {
        // u*(s^2 + b1*s + b0) ~ u*(s'^2 + (b0 - b1^2/4)); char != 2
        const ResidueElement& u = dec.scalar;
        ResidueElement b1 = core[1], b0 = core[0];
        ResidueElement four_inv = u.from_int(4).inverse();
        ResidueElement a_coef = u;
        ResidueElement b_coef = u * (b0 - b1 * b1 * four_inv);
        out.conic_ab = std::make_pair(a_coef, b_coef);
        out.conic_class = conic_normalize(a_coef, b_coef, sem);
        out.kind = ResidueFieldShape::Conic;
        out.ruled = conic_has_point(*out.conic_class);
    } else {
        out.kind = ResidueFieldShape::GenusAtLeastOne;
        out.genus = (deg - 1) / 2;
        out.ruled = false;
    }
    return out;
}

std::string shape_name(ResidueFieldShape k) {
    switch (k) {
    case ResidueFieldShape::Rational: return "rational";
    case ResidueFieldShape::SplitOrConstant: return "split_or_constant";
    case ResidueFieldShape::Conic: return "conic";
    case ResidueFieldShape::GenusAtLeastOne: return "genus_ge_1";
    }
    return "?";
}

} // namespace ellred
