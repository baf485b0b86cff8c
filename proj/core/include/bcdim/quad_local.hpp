#pragma once

#include <vector>

namespace bcdim {

// For odd p, Q_p has exactly three quadratic extensions up to isomorphism:
// the unramified one, Q_p(sqrt p), and Q_p(sqrt(u*p)) for a non-residue u.
enum class QuadExtKind { Unramified, RamifiedPi, RamifiedEpsPi };

// One of the three quadratic extensions of Q_p, p an odd prime.
struct QuadExtClass {
    QuadExtKind kind;
    long long p;

    QuadExtClass(QuadExtKind kind, long long p);

    bool ramified() const { return kind != QuadExtKind::Unramified; }

    friend bool operator==(const QuadExtClass&, const QuadExtClass&) = default;
};

// Ramification data (e, f, d) of a quadratic extension of p-adic fields with
// odd residue characteristic: e*f = 2 and the different exponent is d = e - 1
// (unramified or tame ramified; no wild case exists for odd p).
struct RelQuadExt {
    int e;
    int f;
    int d;

    RelQuadExt(int e, int f, int d);

    bool ramified() const { return e == 2; }

    friend bool operator==(const RelQuadExt&, const RelQuadExt&) = default;
};

// The imaginary quadratic field Q(sqrt(-D)) restricted to odd discriminant:
// D positive, squarefree, D = 3 mod 4, so disc = -D and 2 is unramified.
struct ImagQuadField {
    long long D;
    long long disc;                        // -D
    std::vector<long long> ramified_primes; // odd primes dividing disc, ascending

    explicit ImagQuadField(long long D);

    static ImagQuadField from_disc(long long disc);
};

enum class Splitting { Split, Inert, Ramified };

// Behaviour of the rational prime p in K, read off the Kronecker symbol
// (disc|p): 0 ramified, +1 split, -1 inert.
Splitting splitting_type(const ImagQuadField& K, long long p);

// Local completion of K at an odd ramified prime p.  With disc = p*m the
// completion is Q_p(sqrt(p*m)), which is Q_p(sqrt p) exactly when the
// cofactor m = disc/p is a square mod p.
QuadExtClass localize(const ImagQuadField& K, long long p);

RelQuadExt rel_data(const QuadExtClass& ext);

// Invariants of the compositum E1*E2 over each of its two quadratic factors,
// for distinct quadratic extensions E1 != E2 of the same Q_p.  The compositum
// is the biquadratic field containing all three quadratic extensions; it is
// unramified over a ramified factor and (tamely) ramified over the unramified
// factor.
struct CompositumRel {
    RelQuadExt over_first;
    RelQuadExt over_second;
};

CompositumRel compositum_over(const QuadExtClass& first, const QuadExtClass& second);

} // namespace bcdim
