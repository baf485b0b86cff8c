#pragma once

#include "bcdim/rational.hpp"

namespace bcdim {

enum class Parity { Even, Odd };

// The statistics of a (virtual) representation sigma of SL2(Z/N) that the
// multiplicity formula consumes: its dimension, the dimension of the
// invariants under the upper unipotent subgroup U_N and under the full group,
// the traces at fixed elements of order 4 and 3, and the sign of sigma(-1).
// Tensor products multiply all six entries componentwise.
struct RepData {
    long long dim;
    long long dim_u;
    long long tr_s4;
    long long tr_s3;
    long long dim_g;
    Parity parity;

    friend bool operator==(const RepData&, const RepData&) = default;
};

// Weight-dependent coefficients of the multiplicity formula.
struct WeightCoeffs {
    Rational eps;  // (-1)^(k/2)/4 for even k, 0 for odd k
    Rational rho;  // 0 / -1/3 / 1/3 for k = 1 / 2 / 0 mod 3
    int delta;     // 1 exactly at k = 2
};

WeightCoeffs weight_coeffs(long long k);

// Multiplicity of sigma in the weight-k cusp forms of the principal
// congruence level carrying it:
//   (k-1)/12 * dim - 1/2 * dim_u + eps * tr_s4 + rho * tr_s3 + delta * dim_g.
// sigma(-1) must match (-1)^k.  The result is exact.
Rational multiplicity(const RepData& sigma, long long k);

RepData tensor(const RepData& a, const RepData& b);

RepData trivial_rep();

// [Steinberg] - [trivial] of GL2(F_p): the local factor cutting out forms
// that are new at p with unramified quadratic or trivial twist.
RepData steinberg_minus_trivial(long long p);

// Principal series Ind(1 x omega) of GL2(F_ell) for the quadratic residue
// character omega, which is odd exactly when ell = 3 mod 4.
RepData ps_omega(long long ell);

// Fingerprint of the level-ell^2 local factor whose base change matches the
// ramified-prime supercuspidals, for odd ell.
RepData cuspidal_corr(long long ell);

} // namespace bcdim
