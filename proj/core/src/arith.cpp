#include "bcdim/arith.hpp"

#include <algorithm>
#include <utility>

#include "bcdim/errors.hpp"

namespace bcdim {

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // Factor the even part out of n; each factor of 2 contributes (a|2),
    // which is 0 for even a and (-1)^((a^2-1)/8) for odd a.
    int twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos & 1) {
        long long r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol for odd positive n by quadratic reciprocity.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (long long d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw invalid_input("factorize requires a positive integer");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto [p, e] : factorize(n)) {
        const size_t count = out.size();
        long long q = 1;
        for (int i = 1; i <= e; ++i) {
            q *= p;
            for (size_t j = 0; j < count; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long euler_phi(long long n) {
    long long phi = 1;
    for (auto [p, e] : factorize(n)) phi *= ipow(p, e - 1) * (p - 1);
    return phi;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

long long powmod(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % mod);
        base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

} // namespace bcdim
