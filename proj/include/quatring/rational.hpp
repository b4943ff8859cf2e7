#pragma once

#include <compare>
#include <string>

#include "quatring/checked.hpp"

namespace quatring {

// Exact rational number over checked 64-bit integers.
// Invariants: den > 0, gcd(|num|, den) = 1.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(neg_ck(num_), den_, tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(add_ck(mul_ck(a.num_, b.den_), mul_ck(b.num_, a.den_)),
                        mul_ck(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mul_ck(a.num_, b.num_), mul_ck(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return Rational(mul_ck(a.num_, b.den_), mul_ck(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross-multiplication in 128 bits; operands are already reduced.
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct tag {};
    Rational(i64 n, i64 d, tag) : num_(n), den_(d) {}  // already normalized

    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = neg_ck(num_);
            den_ = neg_ck(den_);
        }
        i64 g = gcd_i64(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i64 num_;
    i64 den_;
};

}  // namespace quatring
