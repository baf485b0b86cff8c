#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bcdim/quad_local.hpp"

namespace bcdim {

// All the data about a character of a local multiplicative group that the
// tame base-change rules consume: its conductor exponent and whether its
// restriction to the units has order dividing 2.
struct LocalCharData {
    long long cond;
    bool unit_order_le_2;

    // A character with conductor 0 is trivial on the units, so the order
    // flag is forced to true in that case.
    LocalCharData(long long cond, bool unit_order_le_2);
};

struct PrincipalSeries {
    LocalCharData chi1;
    LocalCharData chi2;
};

// Twist of the Steinberg representation by the character chi.
struct Special {
    LocalCharData chi;
};

// Supercuspidal attached to a regular character theta of a quadratic
// extension E of Q_p.  Regularity is rejected at construction in the one case
// decidable from this data: a tame theta of unit-order <= 2 on the unramified
// quadratic is fixed by the Galois involution.  Other regularity failures are
// the caller's responsibility.
struct Supercuspidal {
    QuadExtClass field;
    LocalCharData theta;

    Supercuspidal(QuadExtClass field, LocalCharData theta);
};

struct UnramifiedPrincipalSeries {};

using LocalRepType =
    std::variant<PrincipalSeries, Special, Supercuspidal, UnramifiedPrincipalSeries>;

// Conductor exponent of chi∘N for the norm N of a quadratic extension with
// invariants ext, given the conductor data of chi on the base.  Unramified
// quadratic base change preserves the conductor; in the tame ramified case
// the piecewise rule is 0 / 0 / 1 / e(m-1)+1 according to whether the
// conductor m is 0, 1 with unit-order <= 2, 1 otherwise, or m >= 2.
long long bc_char_conductor(const RelQuadExt& ext, const LocalCharData& chi);

long long bc_ps_conductor(const RelQuadExt& ext, const LocalCharData& chi1,
                          const LocalCharData& chi2);

// Special representations: base-change the twist first, then the conductor is
// 1 if the changed twist is unramified and twice its conductor otherwise.
long long bc_special_conductor(const RelQuadExt& ext, const LocalCharData& chi);

// Conductor exponent over Kp of the base change of the supercuspidal
// attached to (E, theta).  If E = Kp the base change is a principal series
// with exponent 2*cond(theta).  Otherwise the base change is the
// supercuspidal of Kp attached to theta∘N on the compositum E*Kp, and its
// exponent is f(EKp/Kp) * (d(EKp/Kp) + cond(theta∘N)).
long long bc_supercuspidal_conductor(const QuadExtClass& Kp, const QuadExtClass& E,
                                     const LocalCharData& theta);

// Conductor exponent of the induction to the base of a character with data
// theta on a quadratic extension with invariants ext: f * (d + cond(theta)).
long long ai_conductor(const RelQuadExt& ext, const LocalCharData& theta);

// Conductor exponent of rep over Q_p itself (no base change).
long long qp_conductor(const LocalRepType& rep);

// Conductor exponent of the base change of rep along the completion of an
// imaginary quadratic field at p.  At split and inert primes the exponent is
// preserved; at ramified primes Kp must be supplied and the tame rules above
// apply.
long long bc_local_conductor(Splitting splitting, const std::optional<QuadExtClass>& Kp,
                             const LocalRepType& rep);

struct BCLevelEntry {
    long long p;
    Splitting splitting;
    // One exponent per prime of K above p; two equal entries when p splits.
    std::vector<long long> exponents;
};

struct BCLevelReport {
    std::vector<BCLevelEntry> entries; // ascending in p
};

// Level exponents of the base change to K of a representation described by
// its local components at finitely many primes; unlisted primes are taken to
// be unramified principal series and contribute nothing.
BCLevelReport bc_level(const ImagQuadField& K,
                       const std::map<long long, LocalRepType>& local_data);

} // namespace bcdim
