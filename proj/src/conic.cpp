#include "ellred/conic.hpp"

#include <array>
#include <set>
#include <vector>

#include "ellred/prime_field.hpp"

namespace ellred {

namespace {

// 2-adic order and odd part of a nonzero rational.
struct TwoAdic {
    int ord;
    Rational unit; // odd numerator and denominator
};

TwoAdic two_adic_split(const Rational& q) {
    Int n = q.num(), d = q.den();
    int ord = 0;
    while (n % 2 == 0) { n /= 2; ++ord; }
    while (d % 2 == 0) { d /= 2; --ord; }
    return {ord, Rational(n, d)};
}

int mod8(const Rational& odd_unit) {
    // numerator * denominator^(-1) mod 8; the inverse of an odd residue
    // mod 8 is itself.
    Int n = odd_unit.num() % 8;
    if (n < 0) n += 8;
    Int d = odd_unit.den() % 8;
    Int v = (n * d) % 8;
    return static_cast<int>(v);
}

int to_index(int u_mod8) { return (u_mod8 - 1) / 2; } // 1,3,5,7 -> 0..3

// Tables over the odd unit classes mod 8, filled once by exhaustive search
// over primitive triples. mod 8 decides Z_2-solvability exactly for the
// shapes z^2 = u*x^2 + v*y^2 and z^2 = 2*x^2 + v*y^2 (a primitive zero
// forces a variable with odd coefficient to be odd, and that variable
// lifts 2-adically from a solution mod 8).
struct HilbertTables {
    std::array<std::array<int, 4>, 4> unit_unit; // (u, v)
    std::array<int, 4> two_unit;                 // (2, v)

    HilbertTables() {
        auto solvable_mod8 = [](int A, int B) {
            for (int x = 0; x < 8; ++x)
                for (int y = 0; y < 8; ++y)
                    for (int z = 0; z < 8; ++z) {
                        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
                        if ((z * z - A * x * x - B * y * y) % 8 == 0) return true;
                    }
            return false;
        };
        for (int u = 1; u < 8; u += 2)
            for (int v = 1; v < 8; v += 2)
                unit_unit[to_index(u)][to_index(v)] = solvable_mod8(u, v) ? 1 : -1;
        for (int v = 1; v < 8; v += 2) two_unit[to_index(v)] = solvable_mod8(2, v) ? 1 : -1;
    }
};

const HilbertTables& tables() {
    static const HilbertTables t;
    return t;
}

int hilbert_two(const Rational& a, const Rational& b) {
    const auto& t = tables();
    TwoAdic sa = two_adic_split(a);
    TwoAdic sb = two_adic_split(b);
    int u = mod8(sa.unit), v = mod8(sb.unit);
    int result = t.unit_unit[to_index(u)][to_index(v)];
    bool alpha = sa.ord % 2 != 0, beta = sb.ord % 2 != 0;
    if (alpha) result *= t.two_unit[to_index(v)];
    if (beta) result *= t.two_unit[to_index(u)];
    // (2,2) = (2,-1), by (a,a) = (a,-1)
    if (alpha && beta) result *= t.two_unit[to_index(7)];
    return result;
}

int hilbert_odd(const Rational& a, const Rational& b, const Int& p) {
    auto split = [&p](const Rational& q) {
        Int n = q.num(), d = q.den();
        int ord = 0;
        while (n % p == 0) { n /= p; ++ord; }
        while (d % p == 0) { d /= p; --ord; }
        return std::pair<int, Rational>(ord, Rational(n, d));
    };
    auto [alpha, u] = split(a);
    auto [beta, v] = split(b);
    auto leg = [&p](const Rational& unit) {
        return legendre_symbol(unit.num(), p) * legendre_symbol(unit.den(), p);
    };
    int result = 1;
    if (beta % 2 != 0) result *= leg(u);
    if (alpha % 2 != 0) result *= leg(v);
    if (alpha % 2 != 0 && beta % 2 != 0 && (p - 1) / 2 % 2 != 0) result *= -1;
    return result;
}

} // namespace

PlaceQ PlaceQ::prime(const Int& p) {
    if (!is_prime(p)) throw DomainError("place " + p.str() + " is not prime");
    return PlaceQ(false, p);
}

int hilbert_symbol(const Rational& a, const Rational& b, const PlaceQ& place) {
    if (a.is_zero() || b.is_zero()) throw DomainError("Hilbert symbol of zero");
    if (place.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    if (place.p() == 2) return hilbert_two(a, b);
    return hilbert_odd(a, b, place.p());
}

Int squarefree_part(const Int& n) {
    if (n == 0) throw DomainError("squarefree part of zero");
    Int m = boost::multiprecision::abs(n);
    Int core = n < 0 ? -1 : 1;
    // trial division; inputs here are desk scale
    for (Int p = 2; p * p <= m; p = (p == 2) ? Int(3) : Int(p + 2)) {
        if (m % p != 0) continue;
        int mult = 0;
        while (m % p == 0) { m /= p; ++mult; }
        if (mult % 2 != 0) core *= p;
    }
    return core * m; // leftover m is 1 or prime
}

Int rational_square_class(const Rational& q) {
    if (q.is_zero()) throw DomainError("square class of zero");
    return squarefree_part(q.num() * q.den());
}

Int canonical_nonresidue(const Int& p) {
    for (Int g = p - 1; g >= 2; --g)
        if (legendre_symbol(g, p) == -1) return g;
    throw DomainError("no nonresidue mod " + p.str());
}

ConicClass conic_normalize(const ResidueElement& a, const ResidueElement& b, Semantics sem) {
    if (a.is_zero() || b.is_zero()) throw DomainError("degenerate conic");
    if (a.kind() != b.kind()) throw DomainError("conic coefficients from different residue fields");
    if (a.kind() == ResidueKind::Q) {
        return ConicClass{ResidueElement(Rational(rational_square_class(a.rational()))),
                          ResidueElement(Rational(rational_square_class(b.rational()))), sem};
    }
    const Int& p = a.fp().modulus();
    auto rep = [&p](const Fp& x) {
        return x.is_square() ? Fp(1, p) : Fp(canonical_nonresidue(p), p);
    };
    return ConicClass{ResidueElement(rep(a.fp())), ResidueElement(rep(b.fp())), sem};
}

bool conic_has_point(const ConicClass& c) {
    if (c.a.is_zero() || c.b.is_zero()) throw DomainError("degenerate conic");
    if (c.a.kind() == ResidueKind::Fp) {
        // over F_p with p odd the sets {A*s^2} and {y^2 - B} intersect by
        // counting, so there is always a point
        return true;
    }
    const Rational& a = c.a.rational();
    const Rational& b = c.b.rational();
    if (c.semantics == Semantics::RealSigns) return a.sign() > 0 || b.sign() > 0;
    // Hasse: only the real place, 2, and odd primes dividing the squarefree
    // representatives can obstruct
    if (hilbert_symbol(a, b, PlaceQ::real()) == -1) return false;
    if (hilbert_symbol(a, b, PlaceQ::prime(2)) == -1) return false;
    std::set<Int> primes;
    for (Int n : {rational_square_class(a), rational_square_class(b)}) {
        Int m = boost::multiprecision::abs(n);
        while (m % 2 == 0) m /= 2;
        for (Int p = 3; p * p <= m; p += 2)
            if (m % p == 0) {
                primes.insert(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.insert(m);
    }
    for (const Int& p : primes)
        if (hilbert_symbol(a, b, PlaceQ::prime(p)) == -1) return false;
    return true;
}

} // namespace ellred
