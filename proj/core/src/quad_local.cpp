#include "bcdim/quad_local.hpp"

#include "bcdim/arith.hpp"
#include "bcdim/errors.hpp"

namespace bcdim {

QuadExtClass::QuadExtClass(QuadExtKind kind, long long p) : kind(kind), p(p) {
    if (p == 2)
        throw unsupported_input("QuadExtClass: p = 2 is wildly ramified territory");
    if (p < 3 || !is_prime(p)) throw invalid_input("QuadExtClass: p must be an odd prime");
}

RelQuadExt::RelQuadExt(int e, int f, int d) : e(e), f(f), d(d) {
    if (e * f != 2 || d != e - 1) throw invalid_input("RelQuadExt: not a tame quadratic datum");
}

ImagQuadField::ImagQuadField(long long D) : D(D), disc(-D) {
    if (D < 3) throw invalid_input("ImagQuadField: D must be >= 3");
    if (D % 4 != 3) throw invalid_input("ImagQuadField: D must be 3 mod 4");
    for (auto [p, e] : factorize(D)) {
        if (e > 1) throw invalid_input("ImagQuadField: D must be squarefree");
        ramified_primes.push_back(p);
    }
}

ImagQuadField ImagQuadField::from_disc(long long disc) {
    if (disc >= 0) throw invalid_input("ImagQuadField: discriminant must be negative");
    return ImagQuadField(-disc);
}

Splitting splitting_type(const ImagQuadField& K, long long p) {
    if (!is_prime(p)) throw invalid_input("splitting_type: p must be prime");
    const int s = kronecker(K.disc, p);
    if (s == 0) return Splitting::Ramified;
    return s == 1 ? Splitting::Split : Splitting::Inert;
}

QuadExtClass localize(const ImagQuadField& K, long long p) {
    if (p == 2 || splitting_type(K, p) != Splitting::Ramified)
        throw invalid_input("localize: p must be an odd ramified prime of K");
    const long long cofactor = K.disc / p;
    // K_p = Q_p(sqrt(p * cofactor)); scaling sqrt by a unit square is harmless,
    // so the class depends only on whether the cofactor is a residue mod p.
    return QuadExtClass(kronecker(cofactor, p) == 1 ? QuadExtKind::RamifiedPi
                                                    : QuadExtKind::RamifiedEpsPi,
                        p);
}

RelQuadExt rel_data(const QuadExtClass& ext) {
    return ext.ramified() ? RelQuadExt(2, 1, 1) : RelQuadExt(1, 2, 0);
}

CompositumRel compositum_over(const QuadExtClass& first, const QuadExtClass& second) {
    if (first.p != second.p)
        throw invalid_input("compositum_over: extensions of different base fields");
    if (first.kind == second.kind)
        throw invalid_input("compositum_over: extensions must be distinct");
    // The compositum of two distinct quadratic extensions of Q_p (p odd) is the
    // unique biquadratic extension.  Over a ramified factor it is unramified;
    // over the unramified factor it is tame ramified.
    auto over = [](const QuadExtClass& factor) {
        return factor.ramified() ? RelQuadExt(1, 2, 0) : RelQuadExt(2, 1, 1);
    };
    return CompositumRel{over(first), over(second)};
}

} // namespace bcdim
