#pragma once

#include <optional>

#include "bcdim/newspace_dims.hpp"
#include "bcdim/quad_local.hpp"
#include "bcdim/rational.hpp"

namespace bcdim {

// Input data for the base-change subspace of a Bianchi cusp form space: an
// imaginary quadratic field of odd prime discriminant -ell, a squarefree
// level N coprime to ell, and the elliptic weight k >= 2 (Bianchi weight
// k - 2).
struct BianchiSetup {
    ImagQuadField K;
    long long ell; // |disc K|, prime, = 3 mod 4
    LevelSpec N;
    long long k_elliptic;

    BianchiSetup(ImagQuadField K, LevelSpec N, long long k_elliptic);
};

struct BianchiDimReport {
    Rational value;
    // False signals a half-integral value: the count double-books forms with
    // complex multiplication by K, which both closed forms contain.
    bool integral;
    // dim S_k(Gamma0(N))^new, present for even weight only.
    std::optional<long long> new_part;
    // The halved summand: the correction dimension (even k) or the
    // omega-newspace dimension (odd k).
    long long corr_or_omega_part;
    Parity parity_used;
};

// Dimension of the base-change subspace: for even k it is
// dim S_k(Gamma0(N))^new + dim_corr/2, for odd k it is dim_new_omega/2.
BianchiDimReport bs_bc_dim(const BianchiSetup& setup);

// Bianchi weight k corresponds to holomorphic discrete series of weight k+2.
long long bianchi_weight_to_elliptic(long long k_bianchi);

} // namespace bcdim
