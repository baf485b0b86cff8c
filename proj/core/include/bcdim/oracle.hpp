#pragma once

#include "bcdim/rep_mult.hpp"

namespace bcdim {

// A space S_k(Gamma0(level), chi) the dimension oracle can evaluate.  The
// nebentypus is either trivial (chi_conductor = 0, even k) or the odd
// quadratic character attached to the fundamental discriminant
// -chi_conductor (chi_conductor = 3 mod 4 squarefree dividing level, odd k).
struct OracleSpace {
    long long level;
    long long chi_conductor;
    long long k;

    OracleSpace(long long level, long long chi_conductor, long long k);
};

// dim S_k(Gamma0(level), chi), computed independently of the multiplicity
// engine: the Cohen-Oesterle formula for k >= 3, and the classical genus
// count of X0(level) for k = 2 with trivial character.
long long co_dim(const OracleSpace& space);

// Newspace dimension by Moebius inversion over the divisors of the level:
// sum of beta(level/M') * co_dim(M') over chi_conductor | M' | level, where
// beta is multiplicative with beta(p) = -2, beta(p^2) = 1, beta(p^e>=3) = 0.
long long newspace_inversion(long long level, long long chi_conductor, long long k);

enum class CharTableTarget { SteinbergMinusTrivial, PrincipalSeriesOmega };

// Recomputes a library RepData fingerprint from scratch for small p: builds
// the character values of the requested (virtual) representation from the
// classical GL2(F_p) character table, identifies conjugacy classes by
// characteristic polynomial, and evaluates the invariants by explicit sums
// over group elements.  Supported for odd p <= 13; the principal series
// target additionally needs p = 3 mod 4 for the character to be odd.
RepData char_table_repdata(long long p, CharTableTarget which);

} // namespace bcdim
