#include "quatring/qpoly.hpp"

#include <algorithm>

namespace quatring {

namespace {

void check_degree(std::size_t deg) {
    if (deg > static_cast<std::size_t>(QPoly::kDegreeCap))
        throw CapError("polynomial degree exceeds cap " + std::to_string(QPoly::kDegreeCap));
}

}  // namespace

QPoly::QPoly(std::vector<Quat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
    if (!coeffs_.empty()) check_degree(coeffs_.size() - 1);
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool QPoly::central() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Quat& c) { return c.is_rational(); });
}

std::string QPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const Quat& c = coeffs_[d];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += "(" + c.str() + ")";
            continue;
        }
        if (c == Quat::one())
            out += "";
        else
            out += "(" + c.str() + ")";
        out += "x";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

Quat eval_right(const QPoly& f, const Quat& alpha) {
    Quat acc;
    Quat power = Quat::one();
    const auto& cs = f.coeffs();
    for (std::size_t d = 0; d < cs.size(); ++d) {
        if (d > 0) power *= alpha;
        acc += cs[d] * power;
    }
    return acc;
}

QPoly poly_add(const QPoly& a, const QPoly& b) {
    std::vector<Quat> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = a.coeff(d) + b.coeff(d);
    return QPoly(std::move(out));
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
    std::vector<Quat> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t d = 0; d < out.size(); ++d) out[d] = a.coeff(d) - b.coeff(d);
    return QPoly(std::move(out));
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    check_degree(static_cast<std::size_t>(a.degree() + b.degree()));
    std::vector<Quat> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t s = 0; s < a.coeffs().size(); ++s)
        for (std::size_t t = 0; t < b.coeffs().size(); ++t)
            out[s + t] += a.coeffs()[s] * b.coeffs()[t];
    return QPoly(std::move(out));
}

QPoly poly_scale_left(const Quat& c, const QPoly& f) {
    std::vector<Quat> out;
    out.reserve(f.coeffs().size());
    for (const Quat& a : f.coeffs()) out.push_back(c * a);
    return QPoly(std::move(out));
}

QPoly poly_scale_right(const QPoly& f, const Quat& c) {
    std::vector<Quat> out;
    out.reserve(f.coeffs().size());
    for (const Quat& a : f.coeffs()) out.push_back(a * c);
    return QPoly(std::move(out));
}

QPoly poly_scale(const QPoly& f, const Rational& r) {
    std::vector<Quat> out;
    out.reserve(f.coeffs().size());
    for (const Quat& a : f.coeffs()) out.push_back(a.scaled(r));
    return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod_central(const QPoly& f, const QPoly& m) {
    if (m.is_zero()) throw DomainError("division by the zero polynomial");
    if (!m.central()) throw DomainError("divisor must have central coefficients");
    for (const Quat& c : m.coeffs())
        if (!c.is_integer()) throw DomainError("divisor must have integer coefficients");
    if (m.coeffs().back() != Quat::one()) throw DomainError("divisor must be monic");

    std::vector<Quat> rem(f.coeffs().begin(), f.coeffs().end());
    int dm = m.degree();
    int dr = f.degree();
    if (dr < dm) return {QPoly(), f};
    std::vector<Quat> quot(static_cast<std::size_t>(dr - dm) + 1);
    for (int d = dr; d >= dm; --d) {
        Quat c = rem[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(d - dm)] = c;
        // Subtract c * x^(d-dm) * m; m is central so the coefficient order
        // is immaterial.
        for (int t = 0; t <= dm; ++t)
            rem[static_cast<std::size_t>(d - dm + t)] -= c * m.coeff(static_cast<std::size_t>(t));
    }
    rem.resize(static_cast<std::size_t>(dm));
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly min_poly_to_qpoly(const MinPoly& m) {
    if (m.is_linear()) {
        if (!m.root().is_integer())
            throw DomainError("linear minimal polynomial with non-integer root");
        return QPoly({Quat(neg_ck(m.root().num()), 0, 0, 0), Quat::one()});
    }
    return QPoly({Quat(m.norm(), 0, 0, 0), Quat(neg_ck(m.trace()), 0, 0, 0), Quat::one()});
}

bool is_integer_valued(const QPoly& f, const std::vector<Quat>& S, Ring ring) {
    for (const Quat& a : S)
        if (!a.in(ring)) throw DomainError("evaluation set is not contained in the ring");
    return std::all_of(S.begin(), S.end(),
                       [&](const Quat& a) { return eval_right(f, a).in(ring); });
}

i64 least_ring_denominator(const Quat& c, Ring ring) {
    i64 d = c.raw_den();
    if (ring == Ring::H && d % 2 == 0 && (c.raw_num(0) & 1) && (c.raw_num(1) & 1) &&
        (c.raw_num(2) & 1) && (c.raw_num(3) & 1))
        return d / 2;
    return d;
}

i64 least_ring_denominator(const QPoly& f, Ring ring) {
    i64 n = 1;
    for (const Quat& c : f.coeffs()) n = lcm_ck(n, least_ring_denominator(c, ring));
    return n == 0 ? 1 : n;
}

QPoly subst_affine(const QPoly& f, const Rational& a, const Rational& n) {
    if (n.is_zero()) throw DomainError("affine substitution with zero scale");
    // (x - a)/n has central coefficients, so its powers commute with the
    // original coefficients and plain resubstitution is exact.
    QPoly arg({Quat(-a / n, Rational(0), Rational(0), Rational(0)),
               Quat(Rational(1) / n, Rational(0), Rational(0), Rational(0))});
    QPoly result;
    QPoly power = QPoly::constant(Quat::one());
    const auto& cs = f.coeffs();
    for (std::size_t d = 0; d < cs.size(); ++d) {
        if (d > 0) power = poly_mul(power, arg);
        result = poly_add(result, poly_scale_left(cs[d], power));
    }
    return result;
}

}  // namespace quatring
