#include "quatring/oracle.hpp"

#include <algorithm>
#include <array>

#include "quatring/text.hpp"

namespace quatring {

namespace {

using Vec4 = std::array<i64, 4>;

// Integer quaternion product on raw coordinate vectors (overflow-checked).
Vec4 qmul(const Vec4& x, const Vec4& y) {
    auto term = [](i64 a, i64 b) { return mul_ck(a, b); };
    Vec4 c;
    c[0] = sub_ck(sub_ck(sub_ck(term(x[0], y[0]), term(x[1], y[1])), term(x[2], y[2])),
                  term(x[3], y[3]));
    c[1] = sub_ck(add_ck(add_ck(term(x[0], y[1]), term(x[1], y[0])), term(x[2], y[3])),
                  term(x[3], y[2]));
    c[2] = add_ck(add_ck(sub_ck(term(x[0], y[2]), term(x[1], y[3])), term(x[2], y[0])),
                  term(x[3], y[1]));
    c[3] = add_ck(sub_ck(add_ck(term(x[0], y[3]), term(x[1], y[2])), term(x[2], y[1])),
                  term(x[3], y[0]));
    return c;
}

Vec4 doubled(const Quat& q) {
    return {q.doubled_coord(0), q.doubled_coord(1), q.doubled_coord(2), q.doubled_coord(3)};
}

// Is (v/den) * (d/2) in the ring, where v and d are raw integer vectors?
// The product has denominator 2*den; membership reads off the residues.
bool product_in_ring(const Vec4& v, const Vec4& d, i64 den, Ring ring) {
    Vec4 p = qmul(v, d);
    i64 m = mul_ck(2, den);
    Vec4 r;
    for (int t = 0; t < 4; ++t) r[t] = mod_floor(p[t], m);
    if (r[0] == 0 && r[1] == 0 && r[2] == 0 && r[3] == 0) return true;
    if (ring == Ring::H) return r[0] == den && r[1] == den && r[2] == den && r[3] == den;
    return false;
}

const std::vector<Quat>& generator_units(Ring ring) {
    static const std::vector<Quat> gen_l{Quat::i(), Quat::j(), Quat::k()};
    static const std::vector<Quat> gen_h{Quat::i(), Quat::j(), Quat::k(), Quat::h()};
    return ring == Ring::L ? gen_l : gen_h;
}

Quat commutator(const Quat& u, const Quat& a) { return u * a - a * u; }

// Shared tail of the witness builders: fill in the product evaluation, the
// modulus, and the self-check flag.
Witness finish_witness(Witness w, const QuatSet& home) {
    w.fail_value = eval_right(poly_mul(w.f, w.partner_poly()), w.fail_at);
    w.modulus = mul_ck(least_ring_denominator(w.f, home.ring),
                       least_ring_denominator(w.partner_poly(), home.ring));
    w.verified = verify_witness(w, home);
    return w;
}

// Evaluates g (a polynomial over the ring) at alpha in R/(n R) and reports
// whether the value lies in n*ring. Doubled coordinates are tracked modulo
// 2n * 2^(remaining halvings): each product of doubled vectors carries one
// exact halving, so the modulus shrinks by a factor of two per Horner step
// and lands exactly on 2n for the membership readout.
bool modular_eval_in_nring(const QPoly& g, const Quat& alpha, i64 n, Ring ring) {
    if (g.is_zero()) return true;
    int deg = g.degree();
    i64 base = mul_ck(2, n);
    i64 m = base;
    for (int t = 0; t < deg; ++t) m = mul_ck(m, 2);

    Vec4 a = doubled(alpha);
    auto mulmod = [](const Vec4& x, const Vec4& y, i64 mod) {
        __int128 lim = static_cast<__int128>(mod);
        Vec4 xr, yr;
        for (int t = 0; t < 4; ++t) {
            xr[t] = mod_floor(x[t], mod);
            yr[t] = mod_floor(y[t], mod);
        }
        auto red = [&](__int128 v) {
            __int128 r = v % lim;
            if (r < 0) r += lim;
            return r;
        };
        std::array<__int128, 4> w;
        auto p = [&](int s, int t) { return static_cast<__int128>(xr[s]) * yr[t]; };
        w[0] = red(p(0, 0) - p(1, 1) - p(2, 2) - p(3, 3));
        w[1] = red(p(0, 1) + p(1, 0) + p(2, 3) - p(3, 2));
        w[2] = red(p(0, 2) - p(1, 3) + p(2, 0) + p(3, 1));
        w[3] = red(p(0, 3) + p(1, 2) - p(2, 1) + p(3, 0));
        Vec4 out;
        for (int t = 0; t < 4; ++t) out[t] = static_cast<i64>(w[t]);
        return out;
    };

    Vec4 acc = doubled(g.coeff(deg));
    for (int t = 0; t < 4; ++t) acc[t] = mod_floor(acc[t], m);
    for (int step = deg - 1; step >= 0; --step) {
        Vec4 prod = mulmod(acc, a, m);
        // The exact product of doubled vectors is even componentwise, and m
        // is even, so the residues are even too.
        m /= 2;
        for (int t = 0; t < 4; ++t) acc[t] = mod_floor(prod[t] / 2, m);
        Vec4 c = doubled(g.coeff(step));
        for (int t = 0; t < 4; ++t) acc[t] = mod_floor(add_ck(acc[t], mod_floor(c[t], m)), m);
    }
    // acc holds the doubled coordinates of g(alpha) modulo 2n.
    if (acc[0] == 0 && acc[1] == 0 && acc[2] == 0 && acc[3] == 0) return true;
    if (ring == Ring::H) return acc[0] == n && acc[1] == n && acc[2] == n && acc[3] == n;
    return false;
}

// n * f must have coefficients in the ring for the R/nR passage to exist.
bool scaled_into_ring(const QPoly& f, i64 n, Ring ring, QPoly& out) {
    out = poly_scale(f, Rational(n));
    for (const Quat& c : out.coeffs())
        if (!c.in(ring)) return false;
    return true;
}

}  // namespace

void for_each_coset(i64 g, Ring ring, const std::function<bool(const CosetRep&)>& fn) {
    if (g <= 0) throw DomainError("coset enumeration requires a positive modulus");
    for (i64 x3 = 0; x3 < g; ++x3)
        for (i64 x2 = 0; x2 < g; ++x2)
            for (i64 x1 = 0; x1 < g; ++x1)
                for (i64 x0 = 0; x0 < g; ++x0) {
                    CosetRep rep;
                    rep.digits = {x0, x1, x2, x3};
                    rep.value = ring == Ring::L
                                    ? Quat::scaled_ints(x0, x1, x2, x3, g)
                                    : Quat::scaled_ints(add_ck(mul_ck(2, x0), x3),
                                                        add_ck(mul_ck(2, x1), x3),
                                                        add_ck(mul_ck(2, x2), x3), x3,
                                                        mul_ck(2, g));
                    if (!fn(rep)) return;
                }
}

OracleResult brute_force_ringset_class(const QuatSet& s, i64 gamma_cap) {
    if (s.size() < 2)
        throw DomainError("brute force needs at least two elements; singletons have a direct witness");
    MinPoly m = min_poly(s.elems.front());
    for (const Quat& e : s.elems)
        if (!(min_poly(e) == m)) throw DomainError("brute force requires a single class");
    if (m.is_linear()) throw DomainError("brute force requires a quadratic class");

    DeltaStats stats = delta_and_gamma(s);
    i64 g = stats.gamma;
    if (g > gamma_cap)
        throw CapError("gamma = " + std::to_string(g) + " exceeds the coset cap " +
                       std::to_string(gamma_cap));

    // Everything in the scan is raw integer vectors: gamma candidates as
    // numerators over den, differences and commutators by doubled coordinates.
    i64 den = s.ring == Ring::L ? g : mul_ck(2, g);
    std::vector<Vec4> delta_vecs;
    for (const Quat& d : stats.deltas)
        if (!d.is_zero()) delta_vecs.push_back(doubled(d));

    const std::vector<Quat>& gens = generator_units(s.ring);
    std::vector<std::vector<Vec4>> comm_vecs(s.size());
    for (std::size_t b = 0; b < s.size(); ++b)
        for (const Quat& u : gens) comm_vecs[b].push_back(doubled(commutator(u, s.elems[b])));

    OracleResult res;
    res.is_ringset = true;
    struct Hit {
        Quat gamma;
        std::size_t beta, unit;
    };
    std::optional<Hit> hit;

    for_each_coset(g, s.ring, [&](const CosetRep& rep) {
        ++res.cosets_scanned;
        Vec4 v;
        if (s.ring == Ring::L) {
            v = rep.digits;
        } else {
            for (int t = 0; t < 3; ++t) v[t] = add_ck(mul_ck(2, rep.digits[t]), rep.digits[3]);
            v[3] = rep.digits[3];
        }
        for (const Vec4& d : delta_vecs)
            if (!product_in_ring(v, d, den, s.ring)) return true;  // inadmissible
        ++res.admissible;
        for (std::size_t b = 0; b < s.size(); ++b)
            for (std::size_t ui = 0; ui < gens.size(); ++ui)
                if (!product_in_ring(v, comm_vecs[b][ui], den, s.ring)) {
                    hit = Hit{rep.value, b, ui};
                    return false;
                }
        return true;
    });

    if (hit) {
        res.is_ringset = false;
        const Quat& beta = s.elems[hit->beta];
        Witness w;
        w.f = QPoly::linear(hit->gamma, -(hit->gamma * beta));
        w.partner = gens[hit->unit];
        w.fail_at = beta;
        res.witness = finish_witness(std::move(w), s);
    }
    return res;
}

OracleResult oracle_decide(const QuatSet& s, i64 gamma_cap) {
    OracleResult total;
    total.is_ringset = true;

    std::optional<Witness> failing;
    std::optional<MinPoly> failing_class;
    for (const auto& [m, elems] : partition_by_min_poly(s)) {
        if (m.is_linear()) continue;
        if (elems.size() == 1) {
            failing = witness_singleton(elems.front(), s.ring);
        } else {
            OracleResult one = brute_force_ringset_class(QuatSet(s.ring, elems), gamma_cap);
            total.cosets_scanned = add_ck(total.cosets_scanned, one.cosets_scanned);
            total.admissible = add_ck(total.admissible, one.admissible);
            if (!one.is_ringset) failing = std::move(one.witness);
        }
        if (failing) {
            failing_class = m;
            break;
        }
    }

    if (failing) {
        total.is_ringset = false;
        std::vector<Quat> cls, rest;
        for (const Quat& e : s.elems)
            (min_poly(e) == *failing_class ? cls : rest).push_back(e);
        if (rest.empty()) {
            total.witness = std::move(failing);
        } else {
            QPoly f_sep = separator(QuatSet(s.ring, rest), QuatSet(s.ring, cls));
            total.witness = lift_witness(*failing, f_sep, s);
        }
    }
    return total;
}

Witness witness_singleton(const Quat& alpha, Ring ring) {
    if (!alpha.in(ring)) throw DomainError("witness element must lie in the ring");
    if (alpha.is_rational()) throw DomainError("central elements admit no witness");

    // Prefer the unit with the largest commutator 2-content removed, i.e.
    // the smallest d with alpha*beta - beta*alpha outside d*ring.
    std::optional<Quat> best_beta;
    Quat best_comm;
    i64 best_d = 0;
    for (const Quat& beta : generator_units(ring)) {
        Quat c = alpha * beta - beta * alpha;
        if (c.is_zero()) continue;
        i64 d = 1;
        while (c.scaled(Rational(1, d)).in(ring)) d = mul_ck(d, 2);
        if (!best_beta || d < best_d) {
            best_beta = beta;
            best_comm = c;
            best_d = d;
        }
    }
    if (!best_beta) throw DomainError("no non-commuting unit found");

    Witness w;
    w.f = poly_scale(QPoly::linear(Quat::one(), -alpha), Rational(1, best_d));
    w.partner = QPoly::linear(Quat::one(), -*best_beta);
    w.fail_at = alpha;
    return finish_witness(std::move(w), QuatSet(ring, {alpha}));
}

Witness witness_odd_prime(const QuatSet& s, i64 p) {
    if (p < 3 || p % 2 == 0) throw DomainError("witness prime must be odd");
    for (i64 q = 3; mul_ck(q, q) <= p; q += 2)
        if (p % q == 0) throw DomainError(std::to_string(p) + " is not prime");
    if (s.size() < 2) throw DomainError("odd prime witness needs at least two elements");
    DeltaStats stats = delta_and_gamma(s);
    if (stats.gamma % p != 0)
        throw DomainError(std::to_string(p) + " does not divide gamma = " +
                          std::to_string(stats.gamma));

    // beta: first element with an imaginary coordinate not divisible by p
    // (doubled coordinates; p is odd, so doubling is harmless).
    const Quat* beta = nullptr;
    for (const Quat& e : s.elems) {
        for (int idx = 1; idx < 4; ++idx)
            if (e.doubled_coord(idx) % p != 0) {
                beta = &e;
                break;
            }
        if (beta) break;
    }
    if (!beta) throw DomainError("no admissible base point; is the set reduced?");

    std::vector<Quat> deltas_beta;
    for (const Quat& e : s.elems)
        if (!(e == *beta)) deltas_beta.push_back(e - *beta);

    auto zero_mod_p = [&](const Quat& q) {
        for (int idx = 0; idx < 4; ++idx)
            if (q.doubled_coord(idx) % p != 0) return false;
        return true;
    };
    Quat gamma = Quat::one();
    for (const Quat& d : deltas_beta)
        if (!zero_mod_p(d)) {
            gamma = d;
            break;
        }
    for (const Quat& d : deltas_beta)
        if (!(gamma * d).scaled(Rational(1, p)).in(s.ring))
            throw DomainError("leading coefficient is not integer-valued; is the set reduced?");

    Witness w;
    w.f = poly_scale(QPoly::linear(gamma, -(gamma * *beta)), Rational(1, p));
    w.fail_at = *beta;
    for (const Quat& u : generator_units(s.ring)) {
        if (u == Quat::h()) break;  // the proof locates the failure among i, j, k
        if (!(gamma * commutator(u, *beta)).scaled(Rational(1, p)).in(s.ring)) {
            w.partner = u;
            return finish_witness(std::move(w), s);
        }
    }
    throw DomainError("no failing unit found; is the set reduced?");
}

Witness witness_power_two(const QuatSet& s) {
    if (s.size() < 2) throw DomainError("power-of-two witness needs at least two elements");
    MinPoly m = min_poly(s.elems.front());
    for (const Quat& e : s.elems)
        if (!(min_poly(e) == m)) throw DomainError("power-of-two witness requires a single class");

    DeltaStats stats = delta_and_gamma(s);
    const Quat& beta = s.elems.front();

    Witness w;
    w.fail_at = beta;
    if (s.ring == Ring::H) {
        if (stats.gamma % 4 != 0) throw DomainError("Hurwitz power-of-two witness needs 4 | gamma");
        w.f = poly_scale(QPoly::linear(Quat::one(), -beta), Rational(1, 2));
    } else if (stats.gamma % 16 == 0) {
        w.f = poly_scale(QPoly::linear(Quat::one(), -beta), Rational(1, 4));
    } else if (stats.gamma == 8) {
        std::vector<Quat> residues = delta_residues_mod4(stats.deltas);
        if (residues.size() != 1)
            throw DomainError("gamma = 8 witness requires a single difference residue mod 4");
        Quat unit;
        if (residues.front() == Quat(0, 2, 2, 0))
            unit = Quat::k();
        else if (residues.front() == Quat(0, 2, 0, 2))
            unit = Quat::j();
        else if (residues.front() == Quat(0, 0, 2, 2))
            unit = Quat::i();
        else
            throw DomainError("unexpected difference residue " + residues.front().str());
        w.f = poly_scale(poly_scale_left(Quat::one() + unit, QPoly::linear(Quat::one(), -beta)),
                         Rational(1, 4));
    } else {
        throw DomainError("gamma = " + std::to_string(stats.gamma) +
                          " is outside the power-of-two witness range");
    }

    for (const Quat& u : generator_units(s.ring)) {
        if (!eval_right(poly_mul(w.f, QPoly::constant(u)), beta).in(s.ring)) {
            w.partner = u;
            return finish_witness(std::move(w), s);
        }
    }
    throw DomainError("no failing unit found; is the set reduced?");
}

bool verify_witness(const Witness& w, const QuatSet& s) {
    try {
        if (w.modulus < 1) return false;
        if (std::find(s.elems.begin(), s.elems.end(), w.fail_at) == s.elems.end()) return false;

        QPoly partner = w.partner_poly();
        QPoly nf, np, nprod;
        if (!scaled_into_ring(w.f, w.modulus, s.ring, nf)) return false;
        if (!scaled_into_ring(partner, w.modulus, s.ring, np)) return false;

        // Integer-valuedness through the null ideal of the image set in R/nR.
        for (const Quat& a : s.elems) {
            if (!modular_eval_in_nring(nf, a, w.modulus, s.ring)) return false;
            if (!modular_eval_in_nring(np, a, w.modulus, s.ring)) return false;
        }

        // The product must evaluate to the claimed value outside the ring...
        QPoly prod = poly_mul(w.f, partner);
        if (!(eval_right(prod, w.fail_at) == w.fail_value)) return false;
        if (w.fail_value.in(s.ring)) return false;
        // ...and its numerator must not vanish at fail_at modulo n.
        if (!scaled_into_ring(prod, w.modulus, s.ring, nprod)) return false;
        if (modular_eval_in_nring(nprod, w.fail_at, w.modulus, s.ring)) return false;
        return true;
    } catch (const Error&) {
        return false;
    }
}

Witness lift_witness(const Witness& w, const QPoly& f_sep, const QuatSet& u) {
    if (!f_sep.central()) throw DomainError("separator must have central coefficients");

    MinPoly m = min_poly(w.fail_at);
    std::vector<Quat> cls;
    for (const Quat& e : u.elems) {
        Quat val = eval_right(f_sep, e);
        bool in_class = min_poly(e) == m;
        if (in_class) cls.push_back(e);
        if (!(val == (in_class ? Quat::one() : Quat::zero())))
            throw DomainError("not a separator for the union set: F(" + e.str() + ") = " +
                              val.str());
    }
    if (cls.empty()) throw DomainError("failure point does not belong to the union set");
    if (!verify_witness(w, QuatSet(u.ring, cls)))
        throw DomainError("witness does not verify on its own class");

    Witness out;
    out.f = poly_mul(w.f, f_sep);
    out.partner = poly_mul(w.partner_poly(), f_sep);
    out.fail_at = w.fail_at;
    out.fail_value = w.fail_value;
    out.modulus = mul_ck(least_ring_denominator(out.f, u.ring),
                         least_ring_denominator(out.partner_poly(), u.ring));
    out.verified = verify_witness(out, u);
    return out;
}

std::vector<Quat> tn_example(i64 n) {
    if (n < 1) throw DomainError("the strip family needs n >= 1");
    std::vector<Quat> out;
    i64 n2 = mul_ck(n, n);
    for (i64 a = sub_ck(n2, n); a < n2; ++a) out.emplace_back(a, 1, 0, 0);
    for (i64 a = n2; a < add_ck(n2, n); ++a) out.emplace_back(a, 0, 1, 0);
    return out;
}

bool check_prop56_hypothesis(const QuatSet& s, i64 n_max) {
    if (n_max < 2) throw DomainError("the hypothesis check needs n_max >= 2");
    Quat imj = Quat::i() - Quat::j();
    for (i64 n = 2; n <= n_max; ++n) {
        for (const Quat& a : s.elems) {
            MinPoly ma = min_poly(a);
            bool found = false;
            for (const Quat& b : s.elems) {
                MinPoly mb = min_poly(b);
                if (ma.kind() != mb.kind()) continue;
                if (ma.is_linear()) {
                    i64 ra = ma.root().num(), rb = mb.root().num();
                    if (mod_floor(sub_ck(ra, rb), n) != 0) continue;
                } else {
                    if (mod_floor(sub_ck(ma.trace(), mb.trace()), n) != 0) continue;
                    if (mod_floor(sub_ck(ma.norm(), mb.norm()), n) != 0) continue;
                }
                Quat d = a - b;
                if ((d - imj).scaled(Rational(1, n)).in(s.ring) ||
                    (d + imj).scaled(Rational(1, n)).in(s.ring)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace quatring
