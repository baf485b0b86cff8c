#include "bcdim/rep_mult.hpp"

#include <stdexcept>

#include "bcdim/arith.hpp"
#include "bcdim/errors.hpp"

namespace bcdim {

WeightCoeffs weight_coeffs(long long k) {
    if (k < 2) throw invalid_input("weight_coeffs: weight must be >= 2");
    WeightCoeffs c{Rational(0), Rational(0), k == 2 ? 1 : 0};
    if (k % 2 == 0) c.eps = Rational((k / 2) % 2 == 0 ? 1 : -1, 4);
    switch (k % 3) {
        case 0: c.rho = Rational(1, 3); break;
        case 2: c.rho = Rational(-1, 3); break;
        default: break; // k = 1 mod 3 contributes nothing at order 3
    }
    return c;
}

Rational multiplicity(const RepData& sigma, long long k) {
    const Parity weight_parity = (k % 2 == 0) ? Parity::Even : Parity::Odd;
    if (sigma.parity != weight_parity)
        throw invalid_input("multiplicity: central sign of sigma does not match (-1)^k");
    if (k < 2) throw invalid_input("multiplicity: weight must be >= 2");

    using I = __int128;
    auto mul = [](I a, I b) {
        I out;
        if (__builtin_mul_overflow(a, b, &out))
            throw std::overflow_error("multiplicity: statistics exceed the 128-bit range");
        return out;
    };
    auto add = [](I a, I b) {
        I out;
        if (__builtin_add_overflow(a, b, &out))
            throw std::overflow_error("multiplicity: statistics exceed the 128-bit range");
        return out;
    };
    // 12 * multiplicity in integers; the weight coefficients scale to
    // 12*eps = +-3, 12*rho = +-4 and the k = 2 term to 12.  One reduction at
    // the end keeps sweeps over millions of points cheap.
    I num = mul(k - 1, sigma.dim);
    num = add(num, mul(-6, sigma.dim_u));
    if (k % 2 == 0) num = add(num, mul((k / 2) % 2 == 0 ? 3 : -3, sigma.tr_s4));
    if (k % 3 == 0) num = add(num, mul(4, sigma.tr_s3));
    else if (k % 3 == 2) num = add(num, mul(-4, sigma.tr_s3));
    if (k == 2) num = add(num, mul(12, sigma.dim_g));
    return Rational::from128(num, 12);
}

RepData tensor(const RepData& a, const RepData& b) {
    auto mul = [](long long x, long long y) {
        long long out;
        if (__builtin_mul_overflow(x, y, &out))
            throw std::overflow_error("tensor: representation statistics exceed 64 bits");
        return out;
    };
    return RepData{mul(a.dim, b.dim),
                   mul(a.dim_u, b.dim_u),
                   mul(a.tr_s4, b.tr_s4),
                   mul(a.tr_s3, b.tr_s3),
                   mul(a.dim_g, b.dim_g),
                   (a.parity == b.parity) ? Parity::Even : Parity::Odd};
}

RepData trivial_rep() { return RepData{1, 1, 1, 1, 1, Parity::Even}; }

RepData steinberg_minus_trivial(long long p) {
    if (!is_prime(p)) throw invalid_input("steinberg_minus_trivial: p must be prime");
    return RepData{p - 1,
                   0,
                   kronecker(-4, p) - 1,
                   kronecker(-3, p) - 1,
                   -1,
                   Parity::Even};
}

RepData ps_omega(long long ell) {
    if (!is_prime(ell) || ell % 4 != 3)
        throw invalid_input("ps_omega: ell must be a prime = 3 mod 4");
    return RepData{ell + 1,
                   2,
                   kronecker(-4, ell) + 1,
                   kronecker(-3, ell) + 1,
                   0,
                   Parity::Odd};
}

RepData cuspidal_corr(long long ell) {
    if (!is_prime(ell) || ell == 2)
        throw invalid_input("cuspidal_corr: ell must be an odd prime");
    // Trace at the order-4 element vanishes unless -1 is a non-residue.
    long long t4 = 0;
    if (ell % 4 == 3) t4 = ((ell - 3) / 4) % 2 == 0 ? 2 : -2;
    return RepData{ell - 1, 0, t4, kronecker(-3, ell) - 1, 0, Parity::Even};
}

} // namespace bcdim
