#pragma once

#include <utility>
#include <vector>

namespace bcdim {

// Kronecker symbol (a|n), extended to all integers n (including n <= 0) by
// complete multiplicativity and the usual conventions at 2, -1 and 0.
int kronecker(long long a, long long n);

bool is_prime(long long n);

// Prime factorization of n >= 1 as (prime, exponent) pairs in ascending order.
std::vector<std::pair<long long, int>> factorize(long long n);

// All positive divisors of n >= 1, ascending.
std::vector<long long> divisors(long long n);

long long euler_phi(long long n);

long long ipow(long long base, int exp);

long long powmod(long long base, long long exp, long long mod);

} // namespace bcdim
