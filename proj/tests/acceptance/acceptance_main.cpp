// Acceptance gate: one line per criterion, PASS/FAIL, exact expectations
// pinned in code. Exit status 0 only when every criterion passes.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "quatring/classify.hpp"
#include "quatring/errors.hpp"
#include "quatring/oracle.hpp"
#include "quatring/text.hpp"

using namespace quatring;
using Clock = std::chrono::steady_clock;

namespace {

const Quat I = Quat::i(), J = Quat::j(), K = Quat::k();

struct Checker {
    int failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (notes.size() < 8) notes.push_back(what);
    }
};

// Negative verdicts produced anywhere in criteria 1-6 are stashed here and
// re-verified wholesale by criterion 7.
struct EmittedWitness {
    Witness w;
    QuatSet s;
};
std::vector<EmittedWitness> g_emitted;

Verdict decide_tracked(const QuatSet& s) {
    Verdict v = decide_ringset(s);
    if (!v.is_ringset && v.witness) g_emitted.push_back({*v.witness, s});
    return v;
}

OracleResult brute_tracked(const QuatSet& s, i64 cap) {
    OracleResult r = brute_force_ringset_class(s, cap);
    if (!r.is_ringset && r.witness) g_emitted.push_back({*r.witness, s});
    return r;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int n, bool ok, const std::string& what, double ms, const Checker& c) {
    std::printf("criterion %d: %s - %s (%.0f ms)\n", n, ok ? "PASS" : "FAIL", what.c_str(), ms);
    for (const std::string& note : c.notes) std::printf("  failed: %s\n", note.c_str());
}

QuatSet set_of(Ring ring, std::vector<Quat> v) { return QuatSet(ring, std::move(v)); }

std::vector<MinPoly> small_classes(Ring ring) {
    std::vector<MinPoly> out;
    for (i64 trace = -2; trace <= 2; ++trace) {
        if (ring == Ring::L && trace % 2 != 0) continue;
        for (i64 norm = 1; norm <= 30; ++norm) {
            if (trace * trace >= 4 * norm) continue;
            MinPoly m = MinPoly::quadratic(trace, norm);
            if (!enumerate_class(m, ring).empty()) out.push_back(m);
        }
    }
    return out;
}

// Random subset of a random small class, sizes within [lo, hi].
QuatSet random_subset(std::mt19937_64& rng, Ring ring, const std::vector<MinPoly>& classes,
                      std::size_t lo, std::size_t hi) {
    for (;;) {
        const MinPoly& m = classes[std::uniform_int_distribution<std::size_t>(
            0, classes.size() - 1)(rng)];
        std::vector<Quat> cls = enumerate_class(m, ring);
        if (cls.size() < lo) continue;
        std::shuffle(cls.begin(), cls.end(), rng);
        std::size_t want = std::uniform_int_distribution<std::size_t>(
            lo, std::min(hi, cls.size()))(rng);
        cls.resize(want);
        return QuatSet(ring, cls);
    }
}

bool criterion1() {
    auto t0 = Clock::now();
    Checker c;

    auto timed_decide = [&](const QuatSet& s, const char* label) {
        auto start = Clock::now();
        Verdict v = decide_tracked(s);
        c.expect(ms_since(start) < 1000.0, std::string(label) + " under one second");
        return v;
    };

    Verdict a = timed_decide(set_of(Ring::L, {I, -I}), "{+-i} in L");
    c.expect(a.is_ringset, "{+-i} is a ringset in L");

    Verdict b = timed_decide(set_of(Ring::H, {I, -I}), "{+-i} in H");
    c.expect(!b.is_ringset, "{+-i} is not a ringset in H");
    c.expect(b.witness && b.witness->verified, "H witness verified");
    c.expect(b.witness && b.witness->fail_value == Quat::from_doubled(0, 0, 1, -1),
             "H witness value is (j-k)/2");

    Verdict s1 = timed_decide(set_of(Ring::L, {I}), "{i} in L");
    c.expect(!s1.is_ringset, "{i} is not a ringset");
    Verdict s2 = timed_decide(set_of(Ring::H, {I}), "{i} in H");
    c.expect(!s2.is_ringset, "{i} is not a ringset in H");

    Verdict d = timed_decide(set_of(Ring::L, {Quat(4, 5, 0, 0), Quat(4, 0, 5, 0)}), "{4+5i,4+5j}");
    c.expect(d.is_ringset, "{4+5i, 4+5j} is a ringset");

    Verdict e = timed_decide(set_of(Ring::L, conjugacy_class(Quat(0, 1, 1, 1), Ring::L)),
                             "class of i+j+k");
    c.expect(e.is_ringset, "conjugacy class of i+j+k is a ringset in L");

    Verdict f = timed_decide(
        set_of(Ring::L, {Quat(0, 2, 3, 4), Quat(0, -2, 3, 4), Quat(0, 0, -5, -2)}), "Gamma=8 set");
    c.expect(!f.is_ringset, "T = {2i+3j+4k, -2i+3j+4k, -5j-2k} is not a ringset");
    c.expect(f.witness && f.witness->verified, "Gamma=8 witness verified");
    c.expect(f.witness && f.witness->fail_value == Quat::scaled_ints(-4, -10, 4, -10, 4),
             "Gamma=8 witness value is (-4-10i+4j-10k)/4");

    Verdict g = timed_decide(set_of(Ring::L, {Quat(0, 1, 1, 1), Quat(0, 1, -1, -1)}),
                             "{i+j+k, i-j-k} in L");
    c.expect(!g.is_ringset, "{i+j+k, i-j-k} is not a ringset in L");
    Verdict h = timed_decide(set_of(Ring::H, {Quat(0, 1, 1, 1), Quat(0, 1, -1, -1)}),
                             "{i+j+k, i-j-k} in H");
    c.expect(h.is_ringset, "{i+j+k, i-j-k} is a ringset in H");

    bool ok = c.failures == 0;
    report(1, ok, "paper golden verdicts, exact match", ms_since(t0), c);
    return ok;
}

bool criterion2() {
    auto t0 = Clock::now();
    Checker c;

    // bullet 1: 4+5i example
    c.expect(!is_reduced(set_of(Ring::L, {Quat(4, 5, 0, 0), Quat(4, 0, 5, 0)})),
             "{4+5i, 4+5j} is not reduced");
    c.expect(is_reduced(set_of(Ring::L, {I, J})), "{i, j} is reduced");

    // bullet 2: 3R multiples
    for (Ring ring : {Ring::L, Ring::H}) {
        c.expect(!is_reduced(set_of(ring, {Quat(0, 3, 0, 0), Quat(0, 0, 3, 0), Quat(0, 0, 0, 3)})),
                 "{3i, 3j, 3k} is not reduced");
        c.expect(is_reduced(set_of(ring, {Quat(0, 3, 0, 0), Quat(0, 0, 3, 0), Quat(0, 1, 2, 2)})),
                 "{3i, 3j, i+2j+2k} is reduced");
    }

    // bullet 3: S+2 = 5T in H
    QuatSet s5 = set_of(Ring::H, {Quat::from_doubled(1, 5, 15, 25), Quat::from_doubled(1, -5, -15, -25)});
    QuatSet t5 = set_of(Ring::H, {Quat::from_doubled(1, 1, 3, 5), Quat::from_doubled(1, -1, -3, -5)});
    c.expect(!is_reduced(s5), "the (1+5i+15j+25k)/2 pair is not reduced");
    c.expect(is_reduced(t5), "the (1+i+3j+5k)/2 pair is reduced");
    ReducedForm rf = reduce_set(s5);
    c.expect(rf.a == -2 && rf.n == 5, "reduce_set finds S = -2 + 5T");
    c.expect(rf.t_elems == t5.elems, "reduce_set recovers T exactly");
    for (std::size_t idx = 0; idx < s5.elems.size(); ++idx) {
        Quat lhs = s5.elems[idx] + Quat(2, 0, 0, 0);
        Quat rhs = rf.t_elems[idx].scaled(Rational(5));
        c.expect(lhs == rhs, "S+2 = 5T holds elementwise");
    }

    // bullet 4: ring-dependence of reducedness
    QuatSet odd_l = set_of(Ring::L, {Quat(0, 1, 1, 1), Quat(0, 1, -1, -1)});
    QuatSet odd_h = set_of(Ring::H, {Quat(0, 1, 1, 1), Quat(0, 1, -1, -1)});
    c.expect(is_reduced(odd_l), "{i+j+k, i-j-k} is reduced in L");
    c.expect(!is_reduced(odd_h), "{i+j+k, i-j-k} is not reduced in H");

    // bullet 5: all-odd imaginary coefficients are never reduced in H
    c.expect(!is_reduced(set_of(Ring::H, {Quat(1, 1, 1, 1), Quat(1, 1, -1, -1)})),
             "odd real part: S itself lies in 2H");
    c.expect(!is_reduced(set_of(Ring::H, {Quat(2, 1, 1, 1), Quat(2, 1, -1, -1)})),
             "even real part: S+1 lies in 2H");

    bool ok = c.failures == 0;
    report(2, ok, "reduced-set golden values", ms_since(t0), c);
    return ok;
}

bool criterion3() {
    auto t0 = Clock::now();
    Checker c;

    int compared = 0;
    for (Ring ring : {Ring::L, Ring::H}) {
        for (const MinPoly& m : small_classes(ring)) {
            QuatSet s(ring, enumerate_class(m, ring));
            bool brute;
            try {
                brute = brute_tracked(s, 128).is_ringset;
            } catch (const CapError&) {
                c.expect(false, "full class exceeded the generous cap at norm " +
                                    std::to_string(m.norm()));
                continue;
            }
            c.expect(decide_tracked(s).is_ringset == brute,
                     "full-class disagreement at trace " + std::to_string(m.trace()) +
                         " norm " + std::to_string(m.norm()));
            ++compared;
        }
    }

    for (Ring ring : {Ring::L, Ring::H}) {
        std::mt19937_64 rng(ring == Ring::L ? 20240811u : 20240812u);
        std::vector<MinPoly> classes = small_classes(ring);
        int done = 0;
        while (done < 500) {
            QuatSet s = random_subset(rng, ring, classes, 2, 5);
            bool brute;
            try {
                brute = brute_tracked(s, 32).is_ringset;
            } catch (const CapError&) {
                continue;  // cap policy: oversized gamma is flagged, not decided
            }
            c.expect(decide_tracked(s).is_ringset == brute,
                     "random-subset disagreement on " + format_quat_list(s.elems));
            ++done;
            ++compared;
        }
    }

    double ms = ms_since(t0);
    c.expect(ms < 300000.0, "runtime below five minutes");
    bool ok = c.failures == 0;
    report(3, ok,
           "oracle and classifier agree on " + std::to_string(compared) + " cases", ms, c);
    return ok;
}

bool criterion4() {
    auto t0 = Clock::now();
    Checker c;

    std::mt19937_64 rng(20240813u);
    std::vector<MinPoly> l_classes = small_classes(Ring::L);
    std::vector<MinPoly> h_classes = small_classes(Ring::H);
    int pairs = 0;
    int lifts = 0;
    while (pairs < 100) {
        Ring ring = (pairs & 1) ? Ring::H : Ring::L;
        const std::vector<MinPoly>& classes = ring == Ring::L ? l_classes : h_classes;
        QuatSet s = random_subset(rng, ring, classes, 1, 3);
        QuatSet t = random_subset(rng, ring, classes, 1, 3);
        if (min_poly(s.elems.front()) == min_poly(t.elems.front())) continue;
        QPoly f = separator(s, t);
        bool exact = f.central();
        for (const Quat& a : s.elems) exact = exact && eval_right(f, a).is_zero();
        for (const Quat& b : t.elems) exact = exact && eval_right(f, b) == Quat::one();
        c.expect(exact, "separator not exactly 0/1 on pair " + format_quat_list(s.elems) +
                            " | " + format_quat_list(t.elems));
        ++pairs;

        Verdict v = decide_tracked(t);
        if (!v.is_ringset && v.witness) {
            std::vector<Quat> both = s.elems;
            both.insert(both.end(), t.elems.begin(), t.elems.end());
            QuatSet u(ring, both);
            try {
                Witness lifted = lift_witness(*v.witness, f, u);
                c.expect(lifted.verified && verify_witness(lifted, u),
                         "lifted witness fails verification");
                g_emitted.push_back({lifted, u});
                ++lifts;
            } catch (const Error& e) {
                c.expect(false, std::string("lift_witness raised: ") + e.what());
            }
        }
    }
    c.expect(lifts >= 20, "enough negative verdicts to exercise lifting");

    bool ok = c.failures == 0;
    report(4, ok,
           "separator exact on 100 pairs, " + std::to_string(lifts) + " witnesses lifted",
           ms_since(t0), c);
    return ok;
}

bool criterion5() {
    auto t0 = Clock::now();
    Checker c;

    std::mt19937_64 rng(20240814u);
    std::vector<MinPoly> l_classes = small_classes(Ring::L);
    std::vector<MinPoly> h_classes = small_classes(Ring::H);

    for (int t = 0; t < 200; ++t) {
        Ring ring = (t & 1) ? Ring::H : Ring::L;
        QuatSet s = random_subset(rng, ring, ring == Ring::L ? l_classes : h_classes, 1, 4);
        i64 a = std::uniform_int_distribution<i64>(-5, 5)(rng);
        i64 n = std::uniform_int_distribution<i64>(1, 5)(rng);
        std::vector<Quat> moved;
        for (const Quat& q : s.elems) moved.push_back(Quat(a, 0, 0, 0) + q.scaled(Rational(n)));
        QuatSet sm(ring, moved);
        c.expect(decide_tracked(s).is_ringset == decide_tracked(sm).is_ringset,
                 "translation/scaling changed the verdict of " + format_quat_list(s.elems));
        i64 g0 = delta_and_gamma(s).gamma;
        i64 g1 = delta_and_gamma(sm).gamma;
        c.expect(g1 == n * n * g0, "gamma(a + nT) != n^2 gamma(T)");
        if (ring == Ring::L && s.size() >= 2) {
            ReducedForm rf = reduce_set(s);
            QuatSet reduced(rf.t_ring, rf.t_elems);
            if (reduced.size() >= 2)
                c.expect(delta_and_gamma(reduced).gamma % 2 == 0,
                         "odd gamma on a reduced L-set");
        }
    }

    // difference of unit conjugates: alpha - u alpha u^-1 in 2L resp. (1+i)H
    std::uniform_int_distribution<i64> coord(-50, 50);
    for (int t = 0; t < 1000; ++t) {
        Quat a(coord(rng), coord(rng), coord(rng), coord(rng));
        for (const Quat& u : units(Ring::L))
            c.expect((a - u * a * u.inverse()).scaled(Rational(1, 2)).in(Ring::L),
                     "L conjugate difference not in 2L");
        Quat b = (t & 1) ? Quat::from_doubled(2 * coord(rng) + 1, 2 * coord(rng) + 1,
                                              2 * coord(rng) + 1, 2 * coord(rng) + 1)
                         : a;
        for (const Quat& u : units(Ring::H))
            c.expect(in_ideal_1pi(b - u * b * u.inverse()),
                     "H conjugate difference not in (1+i)H");
    }

    // commutator closed forms against plain multiplication
    for (int t = 0; t < 1000; ++t) {
        Quat a = (t & 1) ? Quat::from_doubled(2 * coord(rng) + 1, 2 * coord(rng) + 1,
                                              2 * coord(rng) + 1, 2 * coord(rng) + 1)
                         : Quat(coord(rng), coord(rng), coord(rng), coord(rng));
        Rational a1 = a.coord(1), a2 = a.coord(2), a3 = a.coord(3);
        c.expect(I * a - a * I == Quat(Rational(0), Rational(0), -a3 * Rational(2), a2 * Rational(2)),
                 "i commutator closed form");
        c.expect(J * a - a * J == Quat(Rational(0), a3 * Rational(2), Rational(0), -a1 * Rational(2)),
                 "j commutator closed form");
        c.expect(K * a - a * K == Quat(Rational(0), -a2 * Rational(2), a1 * Rational(2), Rational(0)),
                 "k commutator closed form");
        c.expect(Quat::h() * a - a * Quat::h() == Quat(Rational(0), a3 - a2, a1 - a3, a2 - a1),
                 "h commutator closed form");
    }

    bool ok = c.failures == 0;
    report(5, ok, "invariance suites", ms_since(t0), c);
    return ok;
}

bool criterion6() {
    auto t0 = Clock::now();
    Checker c;

    std::mt19937_64 rng(20240815u);
    std::vector<MinPoly> classes = small_classes(Ring::L);
    const std::vector<Quat> allowed{Quat(0, 2, 2, 0), Quat(0, 2, 0, 2), Quat(0, 0, 2, 2)};
    int seen = 0;
    int guard = 0;
    while (seen < 30 && ++guard < 200000) {
        QuatSet s = random_subset(rng, Ring::L, classes, 2, 5);
        ReducedForm rf = reduce_set(s);
        QuatSet t(rf.t_ring, rf.t_elems);
        if (t.size() < 2) continue;
        DeltaStats st = delta_and_gamma(t);
        if (st.gamma != 8) continue;
        ++seen;
        std::vector<Quat> residues = delta_residues_mod4(st.deltas);
        for (const Quat& r : residues)
            c.expect(std::count(allowed.begin(), allowed.end(), r) == 1,
                     "residue outside {2i+2j, 2i+2k, 2j+2k}: " + format_quat(r));
        bool predicted = residues.size() >= 2;
        c.expect(classify_reduced(t).is_ringset == predicted, "two-residue rule vs classifier");
        OracleResult oracle = brute_tracked(t, 32);
        c.expect(oracle.is_ringset == predicted,
                 "two-residue rule vs oracle on " + format_quat_list(t.elems));
        if (!predicted) {
            Verdict v = decide_tracked(t);
            c.expect(!v.is_ringset && v.witness && v.witness->verified,
                     "negative Gamma=8 verdict carries a verified witness");
        }
    }
    c.expect(seen >= 30, "sampled enough Gamma=8 reduced sets");

    bool ok = c.failures == 0;
    report(6, ok, "Gamma=8 residue structure on " + std::to_string(seen) + " sets",
           ms_since(t0), c);
    return ok;
}

bool criterion7() {
    auto t0 = Clock::now();
    Checker c;

    c.expect(!g_emitted.empty(), "criteria 1-6 produced witnesses to re-check");
    int rechecked = 0;
    for (const EmittedWitness& e : g_emitted) {
        c.expect(e.w.verified, "witness emitted without verified flag");
        c.expect(verify_witness(e.w, e.s),
                 "re-verification failed on " + format_quat_list(e.s.elems));
        ++rechecked;
    }

    bool ok = c.failures == 0;
    report(7, ok, "all " + std::to_string(rechecked) + " emitted witnesses re-verified",
           ms_since(t0), c);
    return ok;
}

bool criterion8() {
    auto t0 = Clock::now();
    Checker c;

    std::vector<Quat> all;
    for (i64 n = 2; n <= 10; ++n) {
        std::vector<Quat> t = tn_example(n);
        all.insert(all.end(), t.begin(), t.end());
    }
    auto start = Clock::now();
    bool holds = check_prop56_hypothesis(QuatSet(Ring::L, all), 10);
    double ms = ms_since(start);
    c.expect(holds, "hypothesis holds on the n <= 10 truncation");
    c.expect(ms < 1000.0, "hypothesis check under one second");

    bool ok = c.failures == 0;
    report(8, ok, "matching hypothesis on the two-strip family", ms_since(t0), c);
    return ok;
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion1();
    all &= criterion2();
    all &= criterion3();
    all &= criterion4();
    all &= criterion5();
    all &= criterion6();
    all &= criterion7();
    all &= criterion8();
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
