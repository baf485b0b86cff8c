#include "unit_filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "bcdim/arith.hpp"

namespace bcdim_test {

namespace {

// p-adic valuation of x as a residue mod p^n, with v(0) = n.
int vp_capped(long long x, long long p, int n) {
    if (x == 0) return n;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long long least_nonresidue(long long p) {
    for (long long u = 2; u < p; ++u)
        if (bcdim::kronecker(u, p) == -1) return u;
    throw std::logic_error("no quadratic non-residue found");
}

// Discrete-log table of (Z/m)^* for m = p^n: dlog[x] = j with g^j = x,
// and -1 on non-units.
std::vector<long long> build_dlog(long long m, long long phi) {
    for (long long g = 2; g < m; ++g) {
        std::vector<long long> dlog(m, -1);
        long long x = 1;
        long long j = 0;
        for (; j < phi; ++j) {
            if (dlog[x] != -1) break; // order of g is smaller than phi
            dlog[x] = j;
            x = x * g % m;
        }
        if (j == phi && x == 1) return dlog;
    }
    throw std::logic_error("no primitive root found");
}

long long smallest_untrivialized_level(const std::vector<std::vector<long long>>& by_level,
                                       long long t, long long phi) {
    // chi_t(g^d) = 1 iff t*d = 0 mod phi.  Scanning levels from the deepest
    // down, the conductor is one more than the deepest level carrying a norm
    // outside the kernel.
    for (long long L = static_cast<long long>(by_level.size()) - 1; L >= 0; --L)
        for (long long d : by_level[L])
            if (t * d % phi != 0) return L + 1;
    return 0;
}

} // namespace

BruteBaseChange BruteBaseChange::build(long long p, int n, bcdim::QuadExtKind kind) {
    BruteBaseChange model;
    model.p = p;
    model.n = n;
    model.kind = kind;
    model.modulus = bcdim::ipow(p, n);
    model.phi = bcdim::euler_phi(model.modulus);
    const bool ramified = kind != bcdim::QuadExtKind::Unramified;
    model.max_level = ramified ? 2 * n : n;

    const std::vector<long long> dlog = build_dlog(model.modulus, model.phi);
    const long long m = model.modulus;

    model.base_dlogs_by_level.assign(n + 1, {});
    for (long long x = 1; x < m; ++x) {
        if (dlog[x] == -1) continue;
        const int level = vp_capped((x - 1) % m, p, n);
        model.base_dlogs_by_level[level].push_back(dlog[x]);
    }

    model.dlogs_by_level.assign(model.max_level + 1, {});
    if (ramified) {
        // O_E = Z_p[pi] with pi^2 = c*p; elements a + b*pi with a, b mod p^n
        // exhaust O_E / pi^(2n), and N(a + b*pi) = a^2 - c*p*b^2 mod p^n.
        const long long c =
            kind == bcdim::QuadExtKind::RamifiedPi ? 1 : least_nonresidue(p);
        for (long long a = 0; a < m; ++a) {
            if (a % p == 0) continue; // not a unit
            const int la = 2 * vp_capped((a - 1 + m) % m, p, n);
            for (long long b = 0; b < m; ++b) {
                const int lb = 2 * vp_capped(b, p, n) + 1;
                const int level = std::min(model.max_level, std::min(la, lb));
                long long norm = (a * a - c * p % m * b % m * b) % m;
                norm = ((norm % m) + m) % m;
                model.dlogs_by_level[level].push_back(dlog[norm]);
            }
        }
    } else {
        // O_E = Z_p[w] with w^2 = u a non-residue; N(a + b*w) = a^2 - u*b^2.
        const long long u = least_nonresidue(p);
        for (long long a = 0; a < m; ++a)
            for (long long b = 0; b < m; ++b) {
                long long norm = (a * a - u * b % m * b) % m;
                norm = ((norm % m) + m) % m;
                if (norm % p == 0) continue; // not a unit of E
                const int level =
                    std::min(vp_capped((a - 1 + m) % m, p, n), vp_capped(b, p, n));
                model.dlogs_by_level[level].push_back(dlog[norm]);
            }
    }

    for (auto& level : model.dlogs_by_level) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    for (auto& level : model.base_dlogs_by_level) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return model;
}

long long BruteBaseChange::base_conductor(long long t) const {
    return smallest_untrivialized_level(base_dlogs_by_level, t % phi, phi);
}

bool BruteBaseChange::order_le_2(long long t) const { return 2 * t % phi == 0; }

long long BruteBaseChange::bc_conductor(long long t) const {
    return smallest_untrivialized_level(dlogs_by_level, t % phi, phi);
}

} // namespace bcdim_test
