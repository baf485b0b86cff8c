#pragma once

#include <vector>

#include "bcdim/rep_mult.hpp"

namespace bcdim {

// A squarefree level N with its prime factors.
struct LevelSpec {
    long long N;
    std::vector<long long> primes; // ascending

    explicit LevelSpec(long long N);

    int div_n() const { return static_cast<int>(primes.size()); }
};

// dim S_k(Gamma0(N))^new for squarefree N and even k >= 2, computed through
// the multiplicity engine with one [St]-[1] factor per prime of N.  N = 1 is
// the full space dim S_k(SL2(Z)).
long long dim_new_trivial(const LevelSpec& level, long long k);

// New subspace of S_k(Gamma0(N*ell), omega) for the odd quadratic character
// omega attached to -ell (ell = 3 mod 4, coprime to N) and odd k >= 3.
long long dim_new_omega(const LevelSpec& level, long long ell, long long k);

// Dimension of the level-N*ell^2 correction space matching ramified-prime
// supercuspidals, for odd ell coprime to N and even k >= 2.
long long dim_corr(const LevelSpec& level, long long ell, long long k);

} // namespace bcdim
