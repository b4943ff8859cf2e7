#include "quatring/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quatring/oracle.hpp"
#include "quatring/text.hpp"

namespace quatring {

namespace {

// Imaginary-coefficient gcd at the doubled-coordinate level. Doubling keeps
// a single code path for half-odd elements; for odd moduli it changes nothing.
i64 doubled_imag_gcd(const std::vector<Quat>& elems) {
    i64 g = 0;
    for (const Quat& e : elems)
        for (int idx = 1; idx < 4; ++idx) g = gcd_i64(g, e.doubled_coord(idx));
    return g;
}

bool all_in_l(const std::vector<Quat>& elems) {
    return std::all_of(elems.begin(), elems.end(),
                       [](const Quat& e) { return e.raw_den() == 1; });
}

MinPoly common_min_poly(const QuatSet& s) {
    if (s.empty()) throw DomainError("empty set");
    MinPoly m = min_poly(s.elems.front());
    for (const Quat& e : s.elems)
        if (!(min_poly(e) == m)) throw DomainError("set spans several minimal polynomial classes");
    return m;
}

std::string detail_gamma_in(i64 gamma, Ring ring) {
    return "gamma = " + std::to_string(gamma) + " is in " +
           (ring == Ring::L ? std::string("{2, 4}") : std::string("{1, 2}"));
}

}  // namespace

QuatSet::QuatSet(Ring r, std::vector<Quat> elements) : ring(r), elems(std::move(elements)) {
    for (const Quat& e : elems)
        if (!e.in(ring))
            throw DomainError(e.str() + " is not an element of " + ring_name(ring));
    std::sort(elems.begin(), elems.end(), CanonicalLess{});
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::IntegerClass: return "IntegerClass";
        case Rule::SingletonNonCentral: return "SingletonNonCentral";
        case Rule::GammaRule: return "GammaRule";
        case Rule::Gamma8Residues: return "Gamma8Residues";
        case Rule::OddPrime: return "OddPrime";
        case Rule::PowerOfTwo: return "PowerOfTwo";
    }
    return "?";
}

std::vector<std::pair<MinPoly, std::vector<Quat>>> partition_by_min_poly(const QuatSet& s) {
    if (s.empty()) throw DomainError("empty set");
    std::map<MinPoly, std::vector<Quat>> groups;
    for (const Quat& e : s.elems) groups[min_poly(e)].push_back(e);
    return {groups.begin(), groups.end()};
}

DeltaStats delta_and_gamma(const QuatSet& s) {
    if (s.empty()) throw DomainError("empty set");
    DeltaStats out;
    for (const Quat& a : s.elems)
        for (const Quat& b : s.elems) out.deltas.push_back(a - b);
    std::sort(out.deltas.begin(), out.deltas.end(), CanonicalLess{});
    out.deltas.erase(std::unique(out.deltas.begin(), out.deltas.end()), out.deltas.end());
    for (const Quat& d : out.deltas) {
        if (d.is_zero()) continue;
        Rational n = d.norm();
        // Differences of order elements are order elements, so norms are integers.
        out.gamma = gcd_i64(out.gamma, n.num());
    }
    return out;
}

std::vector<std::pair<i64, Quat>> gamma_combination(const DeltaStats& stats) {
    if (stats.gamma <= 0) throw DomainError("gamma combination requires gamma > 0");

    // First difference (in canonical order) per distinct norm, norms ascending.
    std::map<i64, Quat> by_norm;
    for (const Quat& d : stats.deltas) {
        if (d.is_zero()) continue;
        by_norm.emplace(d.norm().num(), d);
    }

    i64 g = 0;
    std::vector<i64> coefs;
    std::vector<Quat> reps;
    for (const auto& [norm, delta] : by_norm) {
        reps.push_back(delta);
        if (coefs.empty()) {
            g = norm;
            coefs.push_back(1);
            continue;
        }
        ExtGcd e = ext_gcd(g, norm);
        for (i64& c : coefs) c = mul_ck(c, e.x);
        coefs.push_back(e.y);
        g = e.g;
    }
    if (g != stats.gamma) throw DomainError("gamma combination does not reach gamma");

    std::vector<std::pair<i64, Quat>> out;
    i64 check = 0;
    for (std::size_t t = 0; t < coefs.size(); ++t) {
        if (coefs[t] == 0) continue;
        out.emplace_back(coefs[t], reps[t]);
        check = add_ck(check, mul_ck(coefs[t], reps[t].norm().num()));
    }
    if (check != stats.gamma) throw DomainError("gamma combination certificate failed");
    return out;
}

bool is_reduced(const QuatSet& s) {
    MinPoly m = common_min_poly(s);
    if (m.is_linear()) throw DomainError("reduced sets avoid the rational integers");

    if (s.ring == Ring::L) {
        i64 g = 0;
        for (const Quat& e : s.elems)
            for (int idx = 1; idx < 4; ++idx) g = gcd_i64(g, e.int_coord(idx));
        return g == 1;
    }

    // Ring H. A single class lies entirely in L or entirely in H \ L.
    if (!all_in_l(s.elems)) {
        // Doubled imaginary coordinates are odd, so the gcd is odd; reduced
        // means no odd prime divides all of them.
        return doubled_imag_gcd(s.elems) == 1;
    }
    i64 g = 0;
    bool some_even_imag = false;
    for (const Quat& e : s.elems)
        for (int idx = 1; idx < 4; ++idx) {
            i64 c = e.int_coord(idx);
            g = gcd_i64(g, c);
            if (c % 2 == 0) some_even_imag = true;
        }
    return g == 1 && some_even_imag;
}

ReducedForm reduce_set(const QuatSet& s) {
    MinPoly m = common_min_poly(s);
    if (m.is_linear()) throw DomainError("cannot reduce a set of rational integers");

    ReducedForm out;
    out.t_ring = s.ring;
    out.t_elems = s.elems;

    auto apply = [&](const Rational& shift, i64 scale) {
        // current = -shift + scale * next, so composing with s = a + n*current
        // gives s = (a - n*shift) + (n*scale) * next.
        for (Quat& e : out.t_elems) e = (e + Quat(shift, 0, 0, 0)).scaled(Rational(1, scale));
        i64 sh = shift.num();  // shifts are integers in every branch
        out.a = sub_ck(out.a, mul_ck(out.n, sh));
        out.n = mul_ck(out.n, scale);
    };

    for (int guard = 0; !is_reduced(QuatSet(out.t_ring, out.t_elems)); ++guard) {
        if (guard > 64) throw DomainError("reduction did not terminate");
        if (all_in_l(out.t_elems)) {
            i64 g = 0;
            for (const Quat& e : out.t_elems)
                for (int idx = 1; idx < 4; ++idx) g = gcd_i64(g, e.int_coord(idx));
            if (g > 1) {
                // Shared real part r: T = (S - r)/g.
                i64 r = out.t_elems.front().int_coord(0);
                apply(Rational(neg_ck(r)), g);
            } else {
                // Ring H, every imaginary coefficient odd: absorb a half.
                // Pick c so the real part of S + c is odd, then halve.
                i64 c = out.t_elems.front().int_coord(0) % 2 == 0 ? 1 : 0;
                apply(Rational(c), 2);
            }
        } else {
            // S in H \ L: divide by the odd gcd g of the doubled imaginary
            // coordinates after the shift a with 2a + a0 = g.
            i64 g = doubled_imag_gcd(out.t_elems);
            i64 d0 = out.t_elems.front().doubled_coord(0);
            i64 a_sh = sub_ck(g, d0) / 2;
            apply(Rational(a_sh), g);
        }
    }
    return out;
}

std::vector<Quat> delta_residues_mod4(const std::vector<Quat>& deltas) {
    std::vector<Quat> out;
    for (const Quat& d : deltas) {
        if (d.is_zero()) continue;
        Quat r(mod_floor(d.int_coord(0), 4), mod_floor(d.int_coord(1), 4),
               mod_floor(d.int_coord(2), 4), mod_floor(d.int_coord(3), 4));
        if (!r.is_zero()) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Verdict classify_reduced(const QuatSet& t) {
    if (!is_reduced(t)) throw DomainError("classify_reduced requires a reduced set");

    Verdict v;
    v.ring = t.ring;
    ClassReport rep{min_poly(t.elems.front()), t.elems};

    if (t.size() == 1) {
        rep.is_ringset = false;
        rep.rule = Rule::SingletonNonCentral;
        rep.gamma = 0;
        rep.detail = "singleton " + t.elems.front().str() + " is not central";
        v.witness = witness_singleton(t.elems.front(), t.ring);
    } else {
        DeltaStats stats = delta_and_gamma(t);
        i64 gamma = stats.gamma;
        rep.gamma = gamma;
        i64 odd = gamma;
        while (odd % 2 == 0) odd /= 2;

        bool ringset;
        if (t.ring == Ring::L ? (gamma == 2 || gamma == 4) : (gamma == 1 || gamma == 2)) {
            ringset = true;
            rep.rule = Rule::GammaRule;
            rep.detail = detail_gamma_in(gamma, t.ring);
        } else if (t.ring == Ring::L && gamma == 8) {
            std::vector<Quat> residues = delta_residues_mod4(stats.deltas);
            ringset = residues.size() >= 2;
            rep.rule = Rule::Gamma8Residues;
            rep.detail = "gamma = 8 with residues mod 4: " + format_quat_list(residues);
            if (!ringset) v.witness = witness_power_two(t);
        } else if (odd > 1) {
            ringset = false;
            rep.rule = Rule::OddPrime;
            i64 p = 3;
            while (odd % p != 0) p += 2;
            rep.detail = "gamma = " + std::to_string(gamma) + " has odd prime factor " +
                         std::to_string(p);
            v.witness = witness_odd_prime(t, p);
        } else {
            ringset = false;
            rep.rule = Rule::PowerOfTwo;
            rep.detail = "gamma = " + std::to_string(gamma) + " is divisible by " +
                         (t.ring == Ring::L ? "16" : "4");
            v.witness = witness_power_two(t);
        }
        rep.is_ringset = ringset;
    }

    v.is_ringset = rep.is_ringset;
    v.classes.push_back(std::move(rep));
    return v;
}

Verdict decide_ringset(const QuatSet& s) {
    Verdict v;
    v.ring = s.ring;
    v.is_ringset = true;
    std::optional<MinPoly> failing_class;

    for (const auto& [m, elems] : partition_by_min_poly(s)) {
        ClassReport rep{m, elems};
        std::optional<Witness> class_witness;
        if (m.is_linear()) {
            rep.is_ringset = true;
            rep.rule = Rule::IntegerClass;
            rep.detail = "integers are central";
        } else if (elems.size() == 1) {
            rep.is_ringset = false;
            rep.rule = Rule::SingletonNonCentral;
            rep.detail = "singleton " + elems.front().str() + " is not central";
            class_witness = witness_singleton(elems.front(), s.ring);
        } else {
            QuatSet cls(s.ring, elems);
            ReducedForm rf = reduce_set(cls);
            Verdict sub = classify_reduced(QuatSet(rf.t_ring, rf.t_elems));
            rep.is_ringset = sub.is_ringset;
            rep.rule = sub.classes.front().rule;
            rep.gamma = sub.classes.front().gamma;
            rep.detail = sub.classes.front().detail;
            if (rf.a != 0 || rf.n != 1)
                rep.detail += "; reduced via S = " + std::to_string(rf.a) + " + " +
                              std::to_string(rf.n) + "T";
            rep.reduced = rf;
            if (!sub.is_ringset) {
                // Pull the witness back through t -> a + n*t. The substituted
                // argument is central, so right evaluations are preserved.
                const Witness& wt = *sub.witness;
                Witness w;
                Rational a(rf.a), n(rf.n);
                w.f = subst_affine(wt.f, a, n);
                if (wt.partner_is_unit())
                    w.partner = wt.partner_unit();
                else
                    w.partner = subst_affine(std::get<QPoly>(wt.partner), a, n);
                w.fail_at = Quat(rf.a, 0, 0, 0) + wt.fail_at.scaled(n);
                w.fail_value = wt.fail_value;
                w.modulus = mul_ck(least_ring_denominator(w.f, s.ring),
                                   least_ring_denominator(w.partner_poly(), s.ring));
                w.verified = verify_witness(w, cls);
                class_witness = std::move(w);
            }
        }

        if (!rep.is_ringset && v.is_ringset) {
            v.is_ringset = false;
            v.witness = std::move(class_witness);
            failing_class = rep.mpoly;
        }
        v.classes.push_back(std::move(rep));
    }

    if (!v.is_ringset && v.classes.size() > 1) {
        // Certificate for the full set: multiply by a separator that is 1 on
        // the failing class and 0 elsewhere.
        std::vector<Quat> failing, rest;
        for (const Quat& e : s.elems)
            (min_poly(e) == *failing_class ? failing : rest).push_back(e);
        if (!rest.empty()) {
            QPoly f_sep = separator(QuatSet(s.ring, rest), QuatSet(s.ring, failing));
            v.witness = lift_witness(*v.witness, f_sep, s);
        }
    }
    return v;
}

QPoly separator(const QuatSet& s, const QuatSet& t) {
    if (s.empty() || t.empty()) throw DomainError("separator requires nonempty sets");
    MinPoly m = common_min_poly(t);
    for (const Quat& e : s.elems)
        if (min_poly(e) == m) throw DomainError("separator classes overlap");

    std::set<MinPoly> distinct;
    for (const Quat& e : s.elems) distinct.insert(min_poly(e));
    QPoly big = QPoly::constant(Quat::one());
    for (const MinPoly& mp : distinct) big = poly_mul(big, min_poly_to_qpoly(mp));

    if (m.is_linear()) {
        Quat val = eval_right(big, t.elems.front());
        return poly_scale(big, Rational(1) / val.coord(0));
    }

    // big = q*m + r with r = c1*x + c0; conjugating r over the class of m
    // gives s(x) with r(alpha)*s(alpha) = d = N(r(alpha)), a positive integer.
    auto [q, r] = divmod_central(big, min_poly_to_qpoly(m));
    i64 c0 = r.coeff(0).coord(0).num();
    i64 c1 = r.coeff(1).coord(0).num();
    i64 tr = m.trace(), nm = m.norm();
    i64 d = add_ck(add_ck(mul_ck(c0, c0), mul_ck(mul_ck(c0, c1), tr)),
                   mul_ck(mul_ck(c1, c1), nm));
    if (d <= 0) throw DomainError("separator norm form degenerated");
    QPoly conj = QPoly::linear(Quat(neg_ck(c1), 0, 0, 0),
                               Quat(add_ck(mul_ck(c1, tr), c0), 0, 0, 0));
    return poly_scale(poly_mul(big, conj), Rational(1, d));
}

}  // namespace quatring
