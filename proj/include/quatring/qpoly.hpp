#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quatring/quat.hpp"

namespace quatring {

// Polynomials are evaluated on the right: f(a) = sum f_d * a^d with the
// coefficients kept to the left of the powers. Under this convention
// (f*g)(a) and f(a)*g(a) differ in general, but they agree whenever g has
// central (rational) coefficients -- the identity the whole pipeline leans on.
class QPoly {
public:
    static constexpr int kDegreeCap = 64;

    QPoly() = default;
    explicit QPoly(std::vector<Quat> coeffs);  // ascending degree

    static QPoly constant(const Quat& c) { return QPoly({c}); }
    static QPoly x() { return QPoly({Quat::zero(), Quat::one()}); }
    // a1*x + a0
    static QPoly linear(const Quat& a1, const Quat& a0) { return QPoly({a0, a1}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Quat>& coeffs() const { return coeffs_; }
    Quat coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Quat::zero(); }

    // True when every coefficient is rational (lies in the center).
    bool central() const;

    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    std::string str() const;

private:
    void trim();

    std::vector<Quat> coeffs_;
};

Quat eval_right(const QPoly& f, const Quat& alpha);

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_scale_left(const Quat& c, const QPoly& f);   // c * f
QPoly poly_scale_right(const QPoly& f, const Quat& c);  // f * c
QPoly poly_scale(const QPoly& f, const Rational& r);

// Division by a monic divisor with integer (hence central) coefficients.
// Returns (q, r) with f = q*m + r and deg r < deg m.
std::pair<QPoly, QPoly> divmod_central(const QPoly& f, const QPoly& m);

// x - root (integer root required) or x^2 - trace*x + norm.
QPoly min_poly_to_qpoly(const MinPoly& m);

// Every right evaluation over S lands in the ring. Requires S within ring.
bool is_integer_valued(const QPoly& f, const std::vector<Quat>& S, Ring ring);

// Least n > 0 with n*f having all coefficients in the ring.
i64 least_ring_denominator(const QPoly& f, Ring ring);
i64 least_ring_denominator(const Quat& c, Ring ring);

// f((x - a)/n): affine substitution with a central argument. n != 0.
QPoly subst_affine(const QPoly& f, const Rational& a, const Rational& n);

}  // namespace quatring
