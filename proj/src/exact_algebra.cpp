#include "ellred/poly.hpp"

#include <vector>

namespace ellred::detail {

namespace {

using IntPoly = std::vector<Int>; // lowest degree first, trailing nonzero

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Int content(const IntPoly& f) {
    Int g = 0;
    for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
    return g;
}

void divide_content(IntPoly& f) {
    Int g = content(f);
    if (g == 0 || g == 1) return;
    for (auto& c : f) c /= g;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed in place.
IntPoly pseudo_rem(IntPoly f, const IntPoly& g) {
    const Int lc = g.back();
    const std::size_t dg = g.size() - 1;
    while (f.size() >= g.size() && !f.empty()) {
        Int t = f.back();
        for (auto& c : f) c *= lc;
        std::size_t shift = f.size() - 1 - dg;
        for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] -= t * g[j];
        trim(f);
    }
    return f;
}

IntPoly clear_denominators(const Poly<Rational>& f) {
    Int lcm = 1;
    for (const auto& c : f.coeffs())
        lcm = lcm / boost::multiprecision::gcd(lcm, c.den()) * c.den();
    IntPoly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.num() * (lcm / c.den()));
    return out;
}

} // namespace

Poly<Rational> rational_poly_gcd(const Poly<Rational>& f, const Poly<Rational>& g) {
    IntPoly a = clear_denominators(f);
    IntPoly b = clear_denominators(g);
    divide_content(a);
    divide_content(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_rem(a, b);
        divide_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(a.size());
    for (const auto& c : a) coeffs.push_back(Rational(c));
    return Poly<Rational>(std::move(coeffs), f.is_zero() ? g.var() : f.var()).monic();
}

} // namespace ellred::detail
