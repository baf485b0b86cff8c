#pragma once

#include <stdexcept>
#include <string>

namespace bcdim {

std::string int128_str(__int128 v);

// Exact rational number on 128-bit integers, always kept in lowest terms with
// a positive denominator.  Every operation is overflow-checked and throws
// std::overflow_error rather than wrapping; all quantities handled by this
// library stay far below the 2^127 limit.
class Rational {
public:
    using Int = __int128;

    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) { assign(n, d); }

    static Rational from128(Int n, Int d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Value as int64; throws if not an integer or out of range.
    long long as_int64() const;

    // "n" for integers, "n/d" otherwise.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int x, y, n, d;
        if (mul_over(a.num_, b.den_, x) || mul_over(b.num_, a.den_, y) ||
            add_over(x, y, n) || mul_over(a.den_, b.den_, d))
            throw std::overflow_error("rational addition overflow");
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a) { return from128(-a.num_, a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int n, d;
        if (mul_over(a.num_, b.num_, n) || mul_over(a.den_, b.den_, d))
            throw std::overflow_error("rational multiplication overflow");
        return from128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        Int n, d;
        if (mul_over(a.num_, b.den_, n) || mul_over(a.den_, b.num_, d))
            throw std::overflow_error("rational division overflow");
        return from128(n, d);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

private:
    static bool add_over(Int a, Int b, Int& out) { return __builtin_add_overflow(a, b, &out); }
    static bool mul_over(Int a, Int b, Int& out) { return __builtin_mul_overflow(a, b, &out); }

    static int cmp(const Rational& a, const Rational& b) {
        Int x, y;
        if (mul_over(a.num_, b.den_, x) || mul_over(b.num_, a.den_, y))
            throw std::overflow_error("rational comparison overflow");
        return x < y ? -1 : (x > y ? 1 : 0);
    }

    void assign(Int n, Int d);

    Int num_ = 0;
    Int den_ = 1;
};

} // namespace bcdim
