#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatring/rational.hpp"

namespace quatring {

// The two maximal orders we work in: L has integer coordinates, H additionally
// contains the points whose four coordinates are all half-odd integers.
enum class Ring { L, H };

inline const char* ring_name(Ring r) { return r == Ring::L ? "L" : "H"; }

// Exact rational quaternion c0 + c1*i + c2*j + c3*k.
//
// Representation: four int64 numerators over one positive denominator,
// normalized so gcd(n0, n1, n2, n3, d) = 1. Order elements always end up
// with d = 1 (integer coordinates) or d = 2 with all numerators odd
// (half-odd coordinates), so membership tests are a denominator check.
class Quat {
public:
    Quat() : n_{0, 0, 0, 0}, d_(1) {}
    Quat(i64 c0, i64 c1, i64 c2, i64 c3) : n_{c0, c1, c2, c3}, d_(1) {}
    Quat(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3);

    // Builds (t0 + t1*i + t2*j + t3*k)/2 from doubled coordinates.
    static Quat from_doubled(i64 t0, i64 t1, i64 t2, i64 t3) {
        return scaled_ints(t0, t1, t2, t3, 2);
    }
    // Builds (a0 + a1*i + a2*j + a3*k)/d.
    static Quat scaled_ints(i64 a0, i64 a1, i64 a2, i64 a3, i64 d);

    Rational coord(int idx) const { return Rational(n_[idx], d_); }
    Rational real() const { return Rational(n_[0], d_); }
    i64 raw_num(int idx) const { return n_[idx]; }
    i64 raw_den() const { return d_; }

    bool is_zero() const { return n_[0] == 0 && n_[1] == 0 && n_[2] == 0 && n_[3] == 0; }
    bool is_rational() const { return n_[1] == 0 && n_[2] == 0 && n_[3] == 0; }
    bool is_integer() const { return is_rational() && d_ == 1; }

    bool in(Ring r) const;

    // Integer coordinate accessor; requires d = 1.
    i64 int_coord(int idx) const;
    // Doubled coordinate 2*c_idx as an integer; requires d | 2.
    i64 doubled_coord(int idx) const;

    Quat operator-() const;
    Quat conj() const;
    friend Quat operator+(const Quat& a, const Quat& b);
    friend Quat operator-(const Quat& a, const Quat& b);
    friend Quat operator*(const Quat& a, const Quat& b);

    Quat& operator+=(const Quat& o) { return *this = *this + o; }
    Quat& operator-=(const Quat& o) { return *this = *this - o; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }

    Quat scaled(const Rational& r) const;
    Quat inverse() const;

    Rational norm() const;  // c0^2 + c1^2 + c2^2 + c3^2

    friend bool operator==(const Quat& a, const Quat& b) = default;

    std::string str() const;  // canonical text form, see text.hpp

    static const Quat& zero();
    static const Quat& one();
    static const Quat& i();
    static const Quat& j();
    static const Quat& k();
    static const Quat& h();  // (1+i+j+k)/2

private:
    void normalize();

    std::array<i64, 4> n_;
    i64 d_;
};

inline Quat operator*(const Rational& r, const Quat& q) { return q.scaled(r); }
inline Quat operator*(const Quat& q, const Rational& r) { return q.scaled(r); }

// Canonical coordinate order: coordinates are compared by absolute value
// first, then sign with positive preceding negative; quaternions compare
// lexicographically coordinate by coordinate (c0, c1, c2, c3). Sets, class
// enumerations and all tie-breaking scans use this order.
bool canonical_less(const Quat& a, const Quat& b);

struct CanonicalLess {
    bool operator()(const Quat& a, const Quat& b) const { return canonical_less(a, b); }
};

// Minimal polynomial over the rationals: x - root for rational points,
// x^2 - trace*x + norm otherwise (trace = 2*c0, norm = N; both integers for
// order elements). Quadratic forms satisfy trace^2 < 4*norm.
class MinPoly {
public:
    enum class Kind { Linear, Quadratic };

    static MinPoly linear(const Rational& root) { return MinPoly(root); }
    static MinPoly quadratic(i64 trace, i64 norm);

    Kind kind() const { return kind_; }
    bool is_linear() const { return kind_ == Kind::Linear; }
    const Rational& root() const;
    i64 trace() const;
    i64 norm() const;

    friend bool operator==(const MinPoly& a, const MinPoly& b) = default;
    // Linear classes sort before quadratic ones; linear by root, quadratic
    // by (trace, norm).
    friend bool operator<(const MinPoly& a, const MinPoly& b);

    std::string str() const;

private:
    explicit MinPoly(const Rational& root) : kind_(Kind::Linear), root_(root) {}

    Kind kind_;
    Rational root_;
    i64 trace_ = 0;
    i64 norm_ = 0;
};

MinPoly min_poly(const Quat& q);

// Unit groups: 8 elements for L, 24 for H.
const std::vector<Quat>& units(Ring ring);

// { u * q * u^-1 : u unit }, canonically sorted, duplicates removed.
// Requires q in `ring`.
std::vector<Quat> conjugacy_class(const Quat& q, Ring ring);

// All elements of `ring` with the given minimal polynomial, canonically
// sorted. Linear polynomials must have an integer root; quadratic ones must
// satisfy trace^2 < 4*norm. The result may be empty.
std::vector<Quat> enumerate_class(const MinPoly& m, Ring ring);

// Membership in the two-sided ideal (1+i)H: true iff (1-i)*q/2 lies in H,
// equivalently iff N(q) is even. Requires q in H.
bool in_ideal_1pi(const Quat& q);

}  // namespace quatring
