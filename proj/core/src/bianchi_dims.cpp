#include "bcdim/bianchi_dims.hpp"

#include "bcdim/errors.hpp"

namespace bcdim {

BianchiSetup::BianchiSetup(ImagQuadField K, LevelSpec N, long long k_elliptic)
    : K(K), ell(K.D), N(N), k_elliptic(k_elliptic) {
    if (K.ramified_primes.size() != 1)
        throw invalid_input("BianchiSetup: the field must have prime discriminant");
    if (k_elliptic < 2) throw invalid_input("BianchiSetup: elliptic weight must be >= 2");
    if (N.N % ell == 0)
        throw invalid_input("BianchiSetup: level must be coprime to the discriminant");
}

long long bianchi_weight_to_elliptic(long long k_bianchi) {
    if (k_bianchi < 0) throw invalid_input("bianchi_weight_to_elliptic: weight must be >= 0");
    return k_bianchi + 2;
}

BianchiDimReport bs_bc_dim(const BianchiSetup& setup) {
    const long long k = setup.k_elliptic;
    BianchiDimReport report{Rational(0), true, std::nullopt, 0, Parity::Even};
    if (k % 2 == 0) {
        report.parity_used = Parity::Even;
        report.new_part = dim_new_trivial(setup.N, k);
        report.corr_or_omega_part = dim_corr(setup.N, setup.ell, k);
        report.value = Rational(*report.new_part) + Rational(report.corr_or_omega_part, 2);
    } else {
        report.parity_used = Parity::Odd;
        report.corr_or_omega_part = dim_new_omega(setup.N, setup.ell, k);
        report.value = Rational(report.corr_or_omega_part, 2);
    }
    report.integral = report.value.is_integer();
    return report;
}

} // namespace bcdim
