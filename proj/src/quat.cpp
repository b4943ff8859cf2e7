#include "quatring/quat.hpp"

#include <algorithm>
#include <cmath>

#include "quatring/text.hpp"

namespace quatring {

Quat::Quat(const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3) {
    i64 d = lcm_ck(lcm_ck(c0.den(), c1.den()), lcm_ck(c2.den(), c3.den()));
    n_[0] = mul_ck(c0.num(), d / c0.den());
    n_[1] = mul_ck(c1.num(), d / c1.den());
    n_[2] = mul_ck(c2.num(), d / c2.den());
    n_[3] = mul_ck(c3.num(), d / c3.den());
    d_ = d;
    normalize();
}

Quat Quat::scaled_ints(i64 a0, i64 a1, i64 a2, i64 a3, i64 d) {
    Quat q;
    q.n_ = {a0, a1, a2, a3};
    q.d_ = d;
    q.normalize();
    return q;
}

void Quat::normalize() {
    if (d_ == 0) throw DomainError("quaternion with zero denominator");
    if (d_ < 0) {
        d_ = neg_ck(d_);
        for (auto& n : n_) n = neg_ck(n);
    }
    i64 g = d_;
    for (i64 n : n_) g = gcd_i64(g, n);
    if (g > 1) {
        d_ /= g;
        for (auto& n : n_) n /= g;
    }
}

bool Quat::in(Ring r) const {
    if (d_ == 1) return true;
    if (r == Ring::H && d_ == 2)
        return (n_[0] & 1) && (n_[1] & 1) && (n_[2] & 1) && (n_[3] & 1);
    return false;
}

i64 Quat::int_coord(int idx) const {
    if (d_ != 1) throw DomainError("coordinate is not an integer");
    return n_[idx];
}

i64 Quat::doubled_coord(int idx) const {
    if (d_ == 1) return mul_ck(2, n_[idx]);
    if (d_ == 2) return n_[idx];
    throw DomainError("doubled coordinate is not an integer");
}

Quat Quat::operator-() const {
    Quat q = *this;
    for (auto& n : q.n_) n = neg_ck(n);
    return q;
}

Quat Quat::conj() const {
    Quat q = *this;
    q.n_[1] = neg_ck(q.n_[1]);
    q.n_[2] = neg_ck(q.n_[2]);
    q.n_[3] = neg_ck(q.n_[3]);
    return q;
}

Quat operator+(const Quat& a, const Quat& b) {
    Quat q;
    for (int t = 0; t < 4; ++t)
        q.n_[t] = add_ck(mul_ck(a.n_[t], b.d_), mul_ck(b.n_[t], a.d_));
    q.d_ = mul_ck(a.d_, b.d_);
    q.normalize();
    return q;
}

Quat operator-(const Quat& a, const Quat& b) { return a + (-b); }

Quat operator*(const Quat& a, const Quat& b) {
    const auto& x = a.n_;
    const auto& y = b.n_;
    Quat q;
    q.n_[0] = sub_ck(sub_ck(mul_ck(x[0], y[0]), mul_ck(x[1], y[1])),
                     add_ck(mul_ck(x[2], y[2]), mul_ck(x[3], y[3])));
    q.n_[1] = add_ck(add_ck(mul_ck(x[0], y[1]), mul_ck(x[1], y[0])),
                     sub_ck(mul_ck(x[2], y[3]), mul_ck(x[3], y[2])));
    q.n_[2] = add_ck(sub_ck(mul_ck(x[0], y[2]), mul_ck(x[1], y[3])),
                     add_ck(mul_ck(x[2], y[0]), mul_ck(x[3], y[1])));
    q.n_[3] = add_ck(add_ck(mul_ck(x[0], y[3]), mul_ck(x[1], y[2])),
                     sub_ck(mul_ck(x[3], y[0]), mul_ck(x[2], y[1])));
    q.d_ = mul_ck(a.d_, b.d_);
    q.normalize();
    return q;
}

Quat Quat::scaled(const Rational& r) const {
    Quat q;
    for (int t = 0; t < 4; ++t) q.n_[t] = mul_ck(n_[t], r.num());
    q.d_ = mul_ck(d_, r.den());
    q.normalize();
    return q;
}

Quat Quat::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero quaternion");
    i64 nn = 0;
    for (i64 n : n_) nn = add_ck(nn, mul_ck(n, n));
    Quat q;
    q.n_[0] = mul_ck(n_[0], d_);
    q.n_[1] = neg_ck(mul_ck(n_[1], d_));
    q.n_[2] = neg_ck(mul_ck(n_[2], d_));
    q.n_[3] = neg_ck(mul_ck(n_[3], d_));
    q.d_ = nn;
    q.normalize();
    return q;
}

Rational Quat::norm() const {
    i64 nn = 0;
    for (i64 n : n_) nn = add_ck(nn, mul_ck(n, n));
    return Rational(nn, mul_ck(d_, d_));
}

std::string Quat::str() const { return format_quat(*this); }

const Quat& Quat::zero() {
    static const Quat q;
    return q;
}
const Quat& Quat::one() {
    static const Quat q(1, 0, 0, 0);
    return q;
}
const Quat& Quat::i() {
    static const Quat q(0, 1, 0, 0);
    return q;
}
const Quat& Quat::j() {
    static const Quat q(0, 0, 1, 0);
    return q;
}
const Quat& Quat::k() {
    static const Quat q(0, 0, 0, 1);
    return q;
}
const Quat& Quat::h() {
    static const Quat q = Quat::from_doubled(1, 1, 1, 1);
    return q;
}

bool canonical_less(const Quat& a, const Quat& b) {
    for (int t = 0; t < 4; ++t) {
        // Compare |a_t| and |b_t| as fractions via 128-bit cross products.
        __int128 la = static_cast<__int128>(a.raw_num(t)) * b.raw_den();
        __int128 lb = static_cast<__int128>(b.raw_num(t)) * a.raw_den();
        __int128 aa = la < 0 ? -la : la;
        __int128 ab = lb < 0 ? -lb : lb;
        if (aa != ab) return aa < ab;
        if (la != lb) return la > lb;  // same magnitude: positive first
    }
    return false;
}

MinPoly MinPoly::quadratic(i64 trace, i64 norm) {
    // Discriminant must be negative: real points are linear, and no order
    // element has a real quadratic minimal polynomial.
    __int128 disc = static_cast<__int128>(trace) * trace - static_cast<__int128>(4) * norm;
    if (disc >= 0) throw DomainError("quadratic minimal polynomial needs trace^2 < 4*norm");
    MinPoly m{Rational(0)};
    m.kind_ = Kind::Quadratic;
    m.trace_ = trace;
    m.norm_ = norm;
    return m;
}

const Rational& MinPoly::root() const {
    if (kind_ != Kind::Linear) throw DomainError("min poly has no linear root");
    return root_;
}

i64 MinPoly::trace() const {
    if (kind_ != Kind::Quadratic) throw DomainError("min poly has no quadratic trace");
    return trace_;
}

i64 MinPoly::norm() const {
    if (kind_ != Kind::Quadratic) throw DomainError("min poly has no quadratic norm");
    return norm_;
}

bool operator<(const MinPoly& a, const MinPoly& b) {
    if (a.kind_ != b.kind_) return a.kind_ == MinPoly::Kind::Linear;
    if (a.kind_ == MinPoly::Kind::Linear) return a.root_ < b.root_;
    if (a.trace_ != b.trace_) return a.trace_ < b.trace_;
    return a.norm_ < b.norm_;
}

std::string MinPoly::str() const {
    if (kind_ == Kind::Linear) {
        if (root_.is_zero()) return "x";
        if (root_.sign() < 0) return "x+" + (-root_).str();
        return "x-" + root_.str();
    }
    std::string s = "x^2";
    if (trace_ > 0)
        s += "-" + std::to_string(trace_) + "x";
    else if (trace_ < 0)
        s += "+" + std::to_string(neg_ck(trace_)) + "x";
    if (norm_ > 0)
        s += "+" + std::to_string(norm_);
    else if (norm_ < 0)
        s += "-" + std::to_string(neg_ck(norm_));
    return s;
}

MinPoly min_poly(const Quat& q) {
    if (q.is_rational()) return MinPoly::linear(q.real());
    Rational t = q.real() * Rational(2);
    Rational n = q.norm();
    if (!t.is_integer() || !n.is_integer())
        throw DomainError("quadratic minimal polynomial has non-integral coefficients");
    return MinPoly::quadratic(t.num(), n.num());
}

const std::vector<Quat>& units(Ring ring) {
    static const std::vector<Quat> lipschitz = [] {
        std::vector<Quat> u = {Quat::one(), -Quat::one(), Quat::i(),  -Quat::i(),
                               Quat::j(),   -Quat::j(),   Quat::k(), -Quat::k()};
        std::sort(u.begin(), u.end(), CanonicalLess{});
        return u;
    }();
    static const std::vector<Quat> hurwitz = [] {
        std::vector<Quat> u = lipschitz;
        for (i64 s0 : {1, -1})
            for (i64 s1 : {1, -1})
                for (i64 s2 : {1, -1})
                    for (i64 s3 : {1, -1}) u.push_back(Quat::from_doubled(s0, s1, s2, s3));
        std::sort(u.begin(), u.end(), CanonicalLess{});
        return u;
    }();
    return ring == Ring::L ? lipschitz : hurwitz;
}

std::vector<Quat> conjugacy_class(const Quat& q, Ring ring) {
    if (!q.in(ring)) throw DomainError("conjugacy class of an element outside the ring");
    std::vector<Quat> out;
    for (const Quat& u : units(ring)) out.push_back(u * q * u.inverse());
    std::sort(out.begin(), out.end(), CanonicalLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

i64 isqrt_i64(i64 v) {
    if (v < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// All integer triples (b1, b2, b3) with b1^2 + b2^2 + b3^2 = v, optionally
// restricted to odd entries. Appended via `emit`.
template <typename F>
void three_squares(i64 v, bool odd_only, F&& emit) {
    i64 top = isqrt_i64(v);
    for (i64 b1 = -top; b1 <= top; ++b1) {
        if (odd_only && !(b1 & 1)) continue;
        i64 r1 = v - b1 * b1;
        i64 top2 = isqrt_i64(r1);
        for (i64 b2 = -top2; b2 <= top2; ++b2) {
            if (odd_only && !(b2 & 1)) continue;
            i64 r2 = r1 - b2 * b2;
            i64 b3 = isqrt_i64(r2);
            if (b3 < 0 || b3 * b3 != r2) continue;
            if (odd_only && !(b3 & 1)) continue;
            emit(b1, b2, b3);
            if (b3 != 0) emit(b1, b2, -b3);
        }
    }
}

}  // namespace

std::vector<Quat> enumerate_class(const MinPoly& m, Ring ring) {
    std::vector<Quat> out;
    if (m.is_linear()) {
        if (!m.root().is_integer())
            throw DomainError("linear class needs an integer root for ring membership");
        out.emplace_back(m.root().num(), 0, 0, 0);
        return out;
    }
    i64 t = m.trace();
    i64 n = m.norm();
    if (t % 2 == 0) {
        // Integer-coordinate solutions: c0 = t/2, imaginary norm n - c0^2.
        i64 c0 = t / 2;
        i64 v = sub_ck(n, mul_ck(c0, c0));
        if (v > 0)
            three_squares(v, false, [&](i64 b1, i64 b2, i64 b3) {
                out.emplace_back(c0, b1, b2, b3);
            });
    } else if (ring == Ring::H) {
        // Half-odd coordinates: doubled coordinates (t, b1, b2, b3), all odd,
        // with b1^2 + b2^2 + b3^2 = 4n - t^2.
        i64 v = sub_ck(mul_ck(4, n), mul_ck(t, t));
        if (v > 0)
            three_squares(v, true, [&](i64 b1, i64 b2, i64 b3) {
                out.push_back(Quat::from_doubled(t, b1, b2, b3));
            });
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool in_ideal_1pi(const Quat& q) {
    if (!q.in(Ring::H)) throw DomainError("ideal membership is defined on H");
    Quat half = ((Quat::one() - Quat::i()) * q).scaled(Rational(1, 2));
    return half.in(Ring::H);
}

}  // namespace quatring
