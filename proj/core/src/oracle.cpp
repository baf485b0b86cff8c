#include "bcdim/oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "bcdim/arith.hpp"
#include "bcdim/errors.hpp"
#include "bcdim/rational.hpp"

namespace bcdim {

namespace {

bool is_squarefree(long long n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

// Index of Gamma0(M): M * prod_{p | M} (1 + 1/p).
long long gamma0_index(long long M) {
    long long mu = M;
    for (auto [p, e] : factorize(M)) mu = mu / p * (p + 1);
    return mu;
}

// chi(x) for the nebentypus: trivial, or the quadratic character attached to
// the fundamental discriminant -c.  Callers only evaluate it at x coprime to
// the modulus.
long long chi_value(long long chi_conductor, long long x) {
    return chi_conductor == 0 ? 1 : kronecker(-chi_conductor, x);
}

// Sum of chi over the roots of x^2 + 1 (quartic) or x^2 + x + 1 (cubic)
// modulo M, by direct enumeration.
long long elliptic_sum(long long M, long long chi_conductor, bool quartic) {
    long long sum = 0;
    for (long long x = 0; x < M; ++x) {
        const long long v = quartic ? (x * x + 1) % M : (x * x + x + 1) % M;
        if (v == 0) sum += chi_value(chi_conductor, x);
    }
    return sum;
}

// Local factor lambda(r, s, p) of the Cohen-Oesterle formula, where r is the
// level exponent and s the conductor exponent at p.
long long co_lambda(int r, int s, long long p) {
    if (2 * s > r) return 2 * ipow(p, r - s);
    if (r % 2 == 0) return ipow(p, r / 2) + ipow(p, r / 2 - 1);
    return 2 * ipow(p, r / 2);
}

Rational gamma4(long long k) {
    if (k % 2 != 0) return Rational(0);
    return k % 4 == 0 ? Rational(1, 4) : Rational(-1, 4);
}

Rational gamma3(long long k) {
    switch (k % 3) {
        case 0: return Rational(1, 3);
        case 2: return Rational(-1, 3);
        default: return Rational(0);
    }
}

// dim S_k(Gamma0(M), chi) for k >= 3 by the Cohen-Oesterle formula; the
// holomorphic correction term vanishes in this range, so the formula is the
// exact dimension.
long long cohen_oesterle_dim(long long M, long long chi_conductor, long long k) {
    Rational dim = Rational(k - 1, 12) * Rational(gamma0_index(M));
    long long lambda = 1;
    for (auto [p, r] : factorize(M)) {
        int s = 0;
        if (chi_conductor > 0 && chi_conductor % p == 0) s = 1; // conductor is squarefree
        lambda *= co_lambda(r, s, p);
    }
    dim -= Rational(lambda, 2);
    dim += gamma4(k) * Rational(elliptic_sum(M, chi_conductor, true));
    dim += gamma3(k) * Rational(elliptic_sum(M, chi_conductor, false));
    if (!dim.is_integer() || dim < Rational(0))
        throw std::logic_error("Cohen-Oesterle value is not a dimension: " + dim.str());
    return dim.as_int64();
}

// dim S_2(Gamma0(M)) = genus of X_0(M), from the standard index / elliptic
// point / cusp count.
long long genus_x0(long long M) {
    const long long mu = gamma0_index(M);
    const long long nu2 = elliptic_sum(M, 0, true);
    const long long nu3 = elliptic_sum(M, 0, false);
    long long nu_inf = 0;
    for (long long d : divisors(M)) nu_inf += euler_phi(std::gcd(d, M / d));
    Rational g = Rational(1) + Rational(mu, 12) - Rational(nu2, 4) - Rational(nu3, 3) -
                 Rational(nu_inf, 2);
    if (!g.is_integer() || g < Rational(0))
        throw std::logic_error("genus formula value is not a genus: " + g.str());
    return g.as_int64();
}

} // namespace

OracleSpace::OracleSpace(long long level, long long chi_conductor, long long k)
    : level(level), chi_conductor(chi_conductor), k(k) {
    if (level < 1) throw invalid_input("OracleSpace: level must be >= 1");
    if (k < 2) throw invalid_input("OracleSpace: weight must be >= 2");
    if (chi_conductor == 0) {
        if (k % 2 != 0)
            throw invalid_input("OracleSpace: trivial character needs even weight");
        return;
    }
    if (k % 2 == 0)
        throw invalid_input("OracleSpace: odd quadratic character needs odd weight");
    if (chi_conductor % 4 != 3 || !is_squarefree(chi_conductor))
        throw invalid_input("OracleSpace: character conductor must be squarefree, 3 mod 4");
    if (level % chi_conductor != 0)
        throw invalid_input("OracleSpace: character conductor must divide the level");
}

long long co_dim(const OracleSpace& space) {
    if (space.k == 2) return genus_x0(space.level);
    return cohen_oesterle_dim(space.level, space.chi_conductor, space.k);
}

long long newspace_inversion(long long level, long long chi_conductor, long long k) {
    const long long lower = chi_conductor == 0 ? 1 : chi_conductor;
    if (level % lower != 0)
        throw invalid_input("newspace_inversion: character conductor must divide the level");
    long long total = 0;
    for (long long m : divisors(level)) {
        if (m % lower != 0) continue;
        long long beta = 1;
        for (auto [p, e] : factorize(level / m)) {
            if (e == 1) beta *= -2;
            else if (e == 2) beta *= 1;
            else { beta = 0; break; }
        }
        if (beta == 0) continue;
        total += beta * co_dim(OracleSpace(m, chi_conductor, k));
    }
    return total;
}

namespace {

// One conjugacy-class handle in GL2(F_p): the class is determined by the
// characteristic polynomial together with semisimplicity.
struct ClassInfo {
    enum Kind { Central, NonSemisimple, Split, Anisotropic } kind;
    long long z;  // central / non-semisimple: the repeated eigenvalue
    long long e1; // split: the two eigenvalues
    long long e2;
};

ClassInfo classify(long long p, long long a, long long b, long long c, long long d) {
    const long long t = (a + d) % p;
    long long det = (a * d - b * c) % p;
    if (det < 0) det += p;
    long long disc = (t * t - 4 * det) % p;
    if (disc < 0) disc += p;
    const long long inv2 = (p + 1) / 2;
    if (disc == 0) {
        const long long z = t * inv2 % p;
        if (b == 0 && c == 0 && a % p == d % p) return {ClassInfo::Central, z, 0, 0};
        return {ClassInfo::NonSemisimple, z, 0, 0};
    }
    if (kronecker(disc, p) == 1) {
        long long s = 0;
        for (long long r = 1; r < p; ++r)
            if (r * r % p == disc) { s = r; break; }
        return {ClassInfo::Split, 0, (t + s) * inv2 % p, ((t - s) % p + p) * inv2 % p};
    }
    return {ClassInfo::Anisotropic, 0, 0, 0};
}

// Character value of the requested virtual representation on the class of g.
long long char_value(long long p, CharTableTarget which, const ClassInfo& cls) {
    if (which == CharTableTarget::SteinbergMinusTrivial) {
        switch (cls.kind) {
            case ClassInfo::Central: return p - 1;
            case ClassInfo::NonSemisimple: return -1;
            case ClassInfo::Split: return 0;
            case ClassInfo::Anisotropic: return -2;
        }
    }
    const auto omega = [p](long long x) { return kronecker(x, p); };
    switch (cls.kind) {
        case ClassInfo::Central: return (p + 1) * omega(cls.z);
        case ClassInfo::NonSemisimple: return omega(cls.z);
        case ClassInfo::Split: return omega(cls.e1) + omega(cls.e2);
        case ClassInfo::Anisotropic: return 0;
    }
    throw std::logic_error("char_value: unreachable class kind");
}

long long value_at(long long p, CharTableTarget which, long long a, long long b,
                   long long c, long long d) {
    return char_value(p, which, classify(p, a, b, c, d));
}

} // namespace

RepData char_table_repdata(long long p, CharTableTarget which) {
    if (!is_prime(p) || p == 2)
        throw invalid_input("char_table_repdata: p must be an odd prime");
    if (p > 13)
        throw unsupported_input("char_table_repdata: brute-force sums are capped at p = 13");
    if (which == CharTableTarget::PrincipalSeriesOmega && p % 4 != 3)
        throw invalid_input("char_table_repdata: quadratic character is odd only for p = 3 mod 4");

    RepData out{};
    out.dim = value_at(p, which, 1, 0, 0, 1);

    long long usum = 0;
    for (long long x = 0; x < p; ++x) usum += value_at(p, which, 1, x, 0, 1);
    if (usum % p != 0)
        throw std::logic_error("char_table_repdata: unipotent average is not integral");
    out.dim_u = usum / p;

    out.tr_s4 = value_at(p, which, 0, p - 1, 1, 0);
    out.tr_s3 = value_at(p, which, 0, p - 1, 1, p - 1);

    long long gsum = 0;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c)
                for (long long d = 0; d < p; ++d) {
                    long long det = (a * d - b * c) % p;
                    if (det < 0) det += p;
                    if (det == 1) gsum += value_at(p, which, a, b, c, d);
                }
    const long long sl2_order = p * p * p - p;
    if (gsum % sl2_order != 0)
        throw std::logic_error("char_table_repdata: group average is not integral");
    out.dim_g = gsum / sl2_order;

    const long long at_minus_one = value_at(p, which, p - 1, 0, 0, p - 1);
    if (at_minus_one == out.dim) out.parity = Parity::Even;
    else if (at_minus_one == -out.dim) out.parity = Parity::Odd;
    else throw std::logic_error("char_table_repdata: central sign is not a sign");
    return out;
}

} // namespace bcdim
