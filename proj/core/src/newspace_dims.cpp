#include "bcdim/newspace_dims.hpp"

#include <stdexcept>

#include "bcdim/arith.hpp"
#include "bcdim/errors.hpp"

namespace bcdim {

LevelSpec::LevelSpec(long long N) : N(N) {
    if (N < 1) throw invalid_input("LevelSpec: level must be >= 1");
    for (auto [p, e] : factorize(N)) {
        if (e > 1) throw invalid_input("LevelSpec: level must be squarefree");
        primes.push_back(p);
    }
}

namespace {

RepData new_at_level(const LevelSpec& level) {
    RepData sigma = trivial_rep();
    for (long long p : level.primes) sigma = tensor(sigma, steinberg_minus_trivial(p));
    return sigma;
}

void require_coprime(const LevelSpec& level, long long ell, const char* where) {
    if (level.N % ell == 0)
        throw invalid_input(std::string(where) + ": ell must be coprime to the level");
}

// The multiplicity of a local fingerprint is a dimension, hence a
// non-negative integer; anything else means the fingerprint data is wrong,
// which is a bug rather than bad input.
long long as_dimension(const Rational& m) {
    if (!m.is_integer() || m < Rational(0))
        throw std::logic_error("multiplicity is not a dimension: " + m.str());
    return m.as_int64();
}

} // namespace

long long dim_new_trivial(const LevelSpec& level, long long k) {
    if (k < 2 || k % 2 != 0)
        throw invalid_input("dim_new_trivial: weight must be even and >= 2");
    return as_dimension(multiplicity(new_at_level(level), k));
}

long long dim_new_omega(const LevelSpec& level, long long ell, long long k) {
    if (k < 3 || k % 2 == 0)
        throw invalid_input("dim_new_omega: weight must be odd and >= 3");
    require_coprime(level, ell, "dim_new_omega");
    return as_dimension(multiplicity(tensor(new_at_level(level), ps_omega(ell)), k));
}

long long dim_corr(const LevelSpec& level, long long ell, long long k) {
    if (k < 2 || k % 2 != 0)
        throw invalid_input("dim_corr: weight must be even and >= 2");
    require_coprime(level, ell, "dim_corr");
    return as_dimension(multiplicity(tensor(new_at_level(level), cuspidal_corr(ell)), k));
}

} // namespace bcdim
