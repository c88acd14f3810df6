#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <map>

#include "ellred/conic.hpp"
#include "ellred/prime_field.hpp"
#include "testutil.hpp"

using namespace ellred;
using ellred::testing::Rng;

namespace {

ResidueElement rq(int num, int den = 1) { return ResidueElement(Rational(num, den)); }

// projective point search on z^2 = A u^2 + B w^2; signs are absorbed by
// the squares, so scanning u, w >= 0 is enough. When a point exists for
// |A|,|B| <= 30 it is tiny (Holzer-style bounds), so the cap is generous.
bool brute_force_has_point(const Rational& a, const Rational& b, long height = 300) {
    Int an = a.num() * a.den();
    Int bn = b.num() * b.den(); // square-class representatives as integers
    for (long u = 0; u <= height; ++u)
        for (long w = 0; w <= height; ++w) {
            if (u == 0 && w == 0) continue;
            Int val = an * u * u + bn * w * w;
            if (val < 0) continue;
            Int r = boost::multiprecision::sqrt(val);
            if (r * r == val) return true;
        }
    return false;
}

// exhaustive local solvability tables: primitive solutions of
// z^2 = A x^2 + B y^2 modulo 2^6 and modulo p^2
bool primitive_solution_mod(const Int& a, const Int& b, const Int& m, const Int& p) {
    for (Int x = 0; x < m; ++x)
        for (Int y = 0; y < m; ++y)
            for (Int z = 0; z < m; ++z) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                Int v = (z * z - a * x * x - b * y * y) % m;
                if (v < 0) v += m;
                if (v == 0) return true;
            }
    return false;
}

} // namespace

TEST_CASE("hilbert symbol: worked values") {
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), PlaceQ::real()) == -1);
    // exhaustive search mod 8: z^2 + x^2 + y^2 = 0 has no primitive solution
    CHECK(!primitive_solution_mod(-1, -1, 8, 2));
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), PlaceQ::prime(2)) == -1);
    // Legendre (2|7) = 1 and brute force z^2 = 2 x^2 mod 7
    CHECK(legendre_symbol(2, 7) == 1);
    bool found = false;
    for (int z = 1; z < 7 && !found; ++z)
        for (int x = 1; x < 7 && !found; ++x)
            if ((z * z - 2 * x * x) % 7 == 0) found = true;
    CHECK(found);
    CHECK(hilbert_symbol(Rational(2), Rational(7), PlaceQ::prime(7)) == 1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), PlaceQ::real()), DomainError);
    CHECK_THROWS_AS(PlaceQ::prime(6), DomainError);
}

TEST_CASE("hilbert symbol: symmetry and bimultiplicativity") {
    Rng rng(21);
    std::vector<PlaceQ> places = {PlaceQ::real(), PlaceQ::prime(2), PlaceQ::prime(3),
                                  PlaceQ::prime(5), PlaceQ::prime(7), PlaceQ::prime(11)};
    for (int iter = 0; iter < 150; ++iter) {
        Rational a = rng.nonzero_rational(30, 10);
        Rational b = rng.nonzero_rational(30, 10);
        Rational c = rng.nonzero_rational(30, 10);
        for (const auto& pl : places) {
            CHECK(hilbert_symbol(a, b, pl) == hilbert_symbol(b, a, pl));
            CHECK(hilbert_symbol(a, b * c, pl) == hilbert_symbol(a, b, pl) * hilbert_symbol(a, c, pl));
            CHECK(hilbert_symbol(a, b * b, pl) == 1);
            CHECK(hilbert_symbol(a, -a, pl) == 1);
        }
    }
}

TEST_CASE("hilbert product formula over all relevant places") {
    Rng rng(22);
    for (int iter = 0; iter < 200; ++iter) {
        Rational a = rng.nonzero_rational(50, 20);
        Rational b = rng.nonzero_rational(50, 20);
        std::set<Int> primes = {2};
        for (Int n : {a.num() * a.den(), b.num() * b.den()}) {
            Int m = boost::multiprecision::abs(n);
            for (Int p = 2; p * p <= m; ++p)
                while (m % p == 0) { primes.insert(p); m /= p; }
            if (m > 1) primes.insert(m);
        }
        int prod = hilbert_symbol(a, b, PlaceQ::real());
        for (const Int& p : primes) prod *= hilbert_symbol(a, b, PlaceQ::prime(p));
        CHECK(prod == 1);
    }
}

TEST_CASE("2-adic tables agree with the closed unit formulas") {
    // for odd units: (u,v) = (-1)^(eps(u) eps(v)) and (2,v) = (-1)^(omega(v))
    auto eps = [](int u) { return ((u - 1) / 2) % 2 != 0; };
    auto omega = [](int u) { return ((u * u - 1) / 8) % 2 != 0; };
    for (int u = 1; u < 8; u += 2)
        for (int v = 1; v < 8; v += 2) {
            int closed = (eps(u) && eps(v)) ? -1 : 1;
            CHECK(hilbert_symbol(Rational(u), Rational(v), PlaceQ::prime(2)) == closed);
        }
    for (int v = 1; v < 8; v += 2) {
        int closed = omega(v) ? -1 : 1;
        CHECK(hilbert_symbol(Rational(2), Rational(v), PlaceQ::prime(2)) == closed);
    }
}

TEST_CASE("square class reduction") {
    CHECK(squarefree_part(8) == 2);
    CHECK(squarefree_part(-18) == -2);
    CHECK(squarefree_part(1) == 1);
    CHECK(rational_square_class(Rational(-4, 81)) == -1);
    CHECK(rational_square_class(Rational(-16, 81)) == -1);
    CHECK(rational_square_class(Rational(8)) == 2);
    CHECK(rational_square_class(Rational(18)) == 2);

    auto c = conic_normalize(rq(-4, 81), rq(-16, 81));
    CHECK(c.a == rq(-1));
    CHECK(c.b == rq(-1));
    auto c2 = conic_normalize(rq(8), rq(18));
    CHECK(c2.a == rq(2));
    CHECK(c2.b == rq(2));
    auto c3 = conic_normalize(ResidueElement(Fp(4, 5)), ResidueElement(Fp(3, 5)));
    CHECK(c3.a == ResidueElement(Fp(1, 5)));
    CHECK(c3.b == ResidueElement(Fp(3, 5)));
    CHECK_THROWS_AS(conic_normalize(rq(0), rq(1)), DomainError);
}

TEST_CASE("conic_has_point: worked values") {
    // F_7, A=3, B=5: brute force over the 49 pairs
    bool found = false;
    for (int x = 0; x < 7 && !found; ++x)
        for (int y = 0; y < 7 && !found; ++y)
            if ((y * y - 3 * x * x - 5) % 7 == 0) found = true;
    CHECK(found);
    CHECK(conic_has_point(conic_normalize(ResidueElement(Fp(3, 7)), ResidueElement(Fp(5, 7)))));

    CHECK(!conic_has_point(conic_normalize(rq(-1), rq(-1))));
    CHECK(conic_has_point(conic_normalize(rq(2), rq(7)))); // point (1, 3)
    ConicClass realsigns = conic_normalize(rq(-4, 81), rq(-16, 81), Semantics::RealSigns);
    CHECK(!conic_has_point(realsigns));
    ConicClass realsigns2 = conic_normalize(rq(2), rq(-3), Semantics::RealSigns);
    CHECK(conic_has_point(realsigns2));
}

TEST_CASE("conic point test is invariant under square scaling and swap") {
    Rng rng(23);
    for (int iter = 0; iter < 100; ++iter) {
        Rational a = rng.nonzero_rational(30, 10);
        Rational b = rng.nonzero_rational(30, 10);
        Rational e = rng.nonzero_rational(9, 5);
        Rational f = rng.nonzero_rational(9, 5);
        bool base = conic_has_point(conic_normalize(ResidueElement(a), ResidueElement(b)));
        CHECK(conic_has_point(conic_normalize(ResidueElement(a * e * e), ResidueElement(b * f * f))) ==
              base);
        CHECK(conic_has_point(conic_normalize(ResidueElement(b), ResidueElement(a))) == base);
        // normalization is canonical on square classes
        CHECK(conic_normalize(ResidueElement(a * e * e), ResidueElement(b * f * f)) ==
              conic_normalize(ResidueElement(a), ResidueElement(b)));
    }
}

TEST_CASE("conic_has_point agrees with search and local obstruction tables") {
    Rng rng(24);
    int found_points = 0, found_obstructions = 0;
    for (int iter = 0; iter < 100; ++iter) {
        Rational a(rng.int_in(-30, 30));
        Rational b(rng.int_in(-30, 30));
        if (a.is_zero() || b.is_zero()) continue;
        ConicClass c = conic_normalize(ResidueElement(a), ResidueElement(b));
        bool claim = conic_has_point(c);
        if (brute_force_has_point(c.a.rational(), c.b.rational(), 300)) {
            CHECK(claim);
            ++found_points;
        }
        if (!claim) {
            // some completion must refuse: the real place by signs, 2 by the
            // mod-64 table, an odd prime p by the mod-p^2 table
            Int an = c.a.rational().num();
            Int bn = c.b.rational().num();
            bool obstructed = (an < 0 && bn < 0);
            if (!obstructed && !primitive_solution_mod(an, bn, 64, 2)) obstructed = true;
            if (!obstructed) {
                std::set<Int> primes;
                for (Int n : {an, bn}) {
                    Int m = boost::multiprecision::abs(n);
                    while (m % 2 == 0) m /= 2;
                    for (Int p = 3; p * p <= m; p += 2)
                        while (m % p == 0) { primes.insert(p); m /= p; }
                    if (m > 1) primes.insert(m);
                }
                for (const Int& p : primes)
                    if (!primitive_solution_mod(an, bn, p * p, p)) { obstructed = true; break; }
            }
            CHECK(obstructed);
            ++found_obstructions;
        }
    }
    // the sample must exercise both outcomes
    CHECK(found_points > 10);
    CHECK(found_obstructions > 10);
}

TEST_CASE("finite field conics always have points (spot check by counting)") {
    Rng rng(25);
    for (const Int p : {Int(5), Int(7), Int(13)}) {
        for (int iter = 0; iter < 20; ++iter) {
            Fp a = rng.nonzero_fp(p);
            Fp b = rng.nonzero_fp(p);
            CHECK(conic_has_point(conic_normalize(ResidueElement(a), ResidueElement(b))));
            bool found = false;
            for (Int x = 0; x < p && !found; ++x)
                for (Int y = 0; y < p && !found; ++y) {
                    Fp lhs = Fp(y, p) * Fp(y, p);
                    Fp rhs = a * Fp(x, p) * Fp(x, p) + b;
                    if (lhs == rhs) found = true;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("canonical nonresidue is a nonresidue") {
    for (const Int p : {Int(5), Int(7), Int(11), Int(13), Int(101)}) {
        Int nr = canonical_nonresidue(p);
        CHECK(legendre_symbol(nr, p) == -1);
    }
    CHECK(canonical_nonresidue(5) == 3);
}
