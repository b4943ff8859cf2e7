#pragma once

#include <variant>

#include "quatring/qpoly.hpp"

namespace quatring {

// Certificate that a set S is not multiplicatively closed at the integer-
// valued level: f and the partner are both integer-valued on S, yet their
// product evaluates outside the ring at fail_at. The partner is either a
// unit u (certifying an f*u failure) or a full polynomial g.
struct Witness {
    QPoly f;
    std::variant<Quat, QPoly> partner;
    Quat fail_at;
    Quat fail_value;
    // Least common denominator of f's coefficients times the partner's; the
    // modular re-verification works in R/(modulus R).
    i64 modulus = 1;
    bool verified = false;

    bool partner_is_unit() const { return std::holds_alternative<Quat>(partner); }
    const Quat& partner_unit() const { return std::get<Quat>(partner); }
    QPoly partner_poly() const {
        if (partner_is_unit()) return QPoly::constant(std::get<Quat>(partner));
        return std::get<QPoly>(partner);
    }
};

}  // namespace quatring
