#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ellred/base_field.hpp"
#include "ellred/conic.hpp"
#include "ellred/poly.hpp"
#include "ellred/ratfunc.hpp"
#include "ellred/residue.hpp"
#include "ellred/value.hpp"

namespace ellred {

/// Polynomials and rational functions in X with coefficients in E.
using XPoly = Poly<BaseElement>;
using XRatFunc = RatFunc<BaseElement>;

/// Affine generator S = e*X + f of E(X); E(S) = E(X) automatically.
struct AffineGenerator {
    BaseElement e;
    BaseElement f;
    std::string label = "S";

    AffineGenerator(BaseElement e_, BaseElement f_, std::string label_ = "S")
        : e(std::move(e_)), f(std::move(f_)), label(std::move(label_)) {
        if (e.is_zero()) throw DomainError("affine generator with zero X coefficient");
    }
    static AffineGenerator x(const BaseFieldPtr& field, std::string label = "X") {
        return AffineGenerator(field->one(), field->zero(), std::move(label));
    }
};

/// The Gauss extension of v to E(X) with respect to an affine generator:
/// the unique valuation extending v with w(S) = 0 and S-bar transcendental
/// over Ev. Residue field Ev(S-bar), value group vE.
struct GaussValuation {
    AffineGenerator generator;

    explicit GaussValuation(AffineGenerator gen) : generator(std::move(gen)) {}
    const BaseFieldPtr& field() const { return generator.e.field(); }
    static GaussValuation wrt_x(const BaseFieldPtr& f) { return GaussValuation(AffineGenerator::x(f)); }
};

/// Two affine generators define the same Gauss valuation iff rewriting one
/// in the other is a unit times it plus an integral constant.
bool same_gauss_valuation(const GaussValuation& w1, const GaussValuation& w2);

/// w(h) for h in E(X): rewrite in S, then min coefficient value of the
/// numerator minus min coefficient value of the denominator. h = 0 gives INF.
Value gauss_value(const XRatFunc& h, const GaussValuation& w);

/// Representative-independent form used internally and by tests: the same
/// computation on an arbitrary (not necessarily reduced) num/den pair.
Value gauss_value_pair(const XPoly& num, const XPoly& den, const GaussValuation& w);

/// Residue of h in Ev(S-bar); requires gauss_value(h) = 0.
RatFunc<ResidueElement> gauss_residue(const XRatFunc& h, const GaussValuation& w);

/// Element p + q*sqrt(g) of the quadratic extension F = E(X)[sqrt(g)].
struct QuadExtElement {
    XRatFunc p;
    XRatFunc q;
    XRatFunc g;

    QuadExtElement(XRatFunc p_, XRatFunc q_, XRatFunc g_)
        : p(std::move(p_)), q(std::move(q_)), g(std::move(g_)) {
        if (g.is_square())
            throw SplitError("radicand is a square in E(X): the quadratic extension is split");
    }
    static QuadExtElement sqrt_of(XRatFunc g) {
        XRatFunc zero = g.zero(), one = g.one();
        return QuadExtElement(std::move(zero), std::move(one), std::move(g));
    }
};

/// w(p + q*sqrt(g)) = min(w(p), w(q) + w(g)/2), exact in the ramified and
/// inert cases; the split case (residue of g*phi^2 a square) raises
/// SplitError because the extension of w to F is not unique there.
Value quad_ext_value(const QuadExtElement& x, const GaussValuation& w);

enum class ResidueFieldShape {
    Rational,        // residue field is Ev(S-bar), possibly after a constant extension of degree 1 data
    SplitOrConstant, // square-class of the residue is constant: split, or a constant quadratic extension
    Conic,           // function field of a smooth conic C_{A,B}
    GenusAtLeastOne, // hyperelliptic residue of genus >= 1
};

/// Squarefree core of the residue square class: residue ~ constant * core
/// modulo squares, with core monic squarefree.
struct ResidueCore {
    ResidueElement constant_class;
    Poly<ResidueElement> core_poly;
};

/// Outcome of analyzing E(X)[sqrt(g)] over a Gauss valuation.
struct ResidueAnalysis {
    Value w_g;
    bool parity_in_2vE = false;
    std::optional<ResidueCore> core;                                   // present iff parity_in_2vE
    ResidueFieldShape kind = ResidueFieldShape::Rational;
    std::optional<std::pair<ResidueElement, ResidueElement>> conic_ab; // completed-square data
    std::optional<ConicClass> conic_class;                             // normalized
    int genus = 0;                                                     // for GenusAtLeastOne
    bool split = false;       // SplitOrConstant with square constant class
    bool ruled = true;
};

/// Decide the residue function field of E(X)[sqrt(g)] over the Gauss
/// valuation w and whether it is ruled.
ResidueAnalysis analyze_quadratic_gauss(const XRatFunc& g, const GaussValuation& w);

std::string shape_name(ResidueFieldShape k);

} // namespace ellred
