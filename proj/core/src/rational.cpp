#include "bcdim/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace bcdim {

namespace {

__int128 uabs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = uabs128(a);
    b = uabs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

std::string int128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits off the absolute value; negate digit-wise to dodge
    // the INT128_MIN overflow on unary minus.
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

void Rational::assign(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    Int g = gcd128(n, d);
    num_ = n / g;
    den_ = d / g;
}

long long Rational::as_int64() const {
    if (den_ != 1) throw std::domain_error("Rational::as_int64 on non-integer " + str());
    if (num_ > static_cast<Int>(INT64_MAX) || num_ < static_cast<Int>(INT64_MIN))
        throw std::overflow_error("Rational::as_int64 out of range");
    return static_cast<long long>(num_);
}

std::string Rational::str() const {
    if (den_ == 1) return int128_str(num_);
    return int128_str(num_) + "/" + int128_str(den_);
}

} // namespace bcdim
