#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatring/quat.hpp"
#include "quatring/qpoly.hpp"
#include "quatring/witness.hpp"

namespace quatring {

// A finite subset of the chosen order, kept sorted in canonical order with
// duplicates removed. Construction rejects elements outside the ring.
struct QuatSet {
    QuatSet(Ring r, std::vector<Quat> elements);

    Ring ring;
    std::vector<Quat> elems;

    std::size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }
};

// All pairwise differences of S (zero included) plus the difference gcd
// gamma = gcd of norms N(delta) over the nonzero differences. A singleton
// has no nonzero difference; gamma is reported as 0 in that case.
struct DeltaStats {
    std::vector<Quat> deltas;
    i64 gamma = 0;
};

// Writes S as a + n*T with T reduced: S = { a + n*t : t in T }.
struct ReducedForm {
    i64 a = 0;
    i64 n = 1;
    std::vector<Quat> t_elems;
    Ring t_ring;  // same tag as the source; elements may leave L within H
};

enum class Rule {
    IntegerClass,
    SingletonNonCentral,
    GammaRule,
    Gamma8Residues,
    OddPrime,
    PowerOfTwo,
};

const char* rule_name(Rule r);

// Per conjugacy class outcome. gamma and reduced refer to the class after
// splitting; detail is a short human-readable justification.
struct ClassReport {
    MinPoly mpoly;
    std::vector<Quat> elems;
    bool is_ringset = false;
    Rule rule = Rule::IntegerClass;
    i64 gamma = 0;  // gamma of the reduced set (0 when not applicable)
    std::optional<ReducedForm> reduced;
    std::string detail;
};

struct Verdict {
    Ring ring = Ring::L;
    bool is_ringset = false;
    std::vector<ClassReport> classes;
    std::optional<Witness> witness;  // present exactly when !is_ringset
};

// Groups S by minimal polynomial, keys sorted (linear first, then by root;
// quadratics by trace then norm), members in canonical order.
std::vector<std::pair<MinPoly, std::vector<Quat>>> partition_by_min_poly(const QuatSet& s);

DeltaStats delta_and_gamma(const QuatSet& s);

// Expresses gamma as an integer combination of norms of differences:
// gamma = sum n_i * N(delta_i). Deterministic: distinct norms ascending,
// folded with the extended gcd; zero coefficients are dropped.
// Requires gamma > 0.
std::vector<std::pair<i64, Quat>> gamma_combination(const DeltaStats& stats);

// Requires a single-class set not contained in the rationals.
bool is_reduced(const QuatSet& s);

// Requires a single quadratic class. Peels translations and dilations until
// the set is reduced; the result satisfies s = a + n * T elementwise.
ReducedForm reduce_set(const QuatSet& s);

// Decides a reduced single-class set (|T| >= 1, T reduced in its ring).
// Returns a single-class verdict; negative verdicts carry a witness.
Verdict classify_reduced(const QuatSet& t);

// Full decision procedure: partitions by class, reduces, classifies, and on
// the first failing class builds a witness (translated back through the
// reduction and lifted through a separator when S has several classes).
Verdict decide_ringset(const QuatSet& s);

// Central polynomial with F(alpha) = 0 for alpha in S and F(beta) = 1 for
// beta in T. Requires T to lie in a single minimal polynomial class that no
// element of S belongs to.
QPoly separator(const QuatSet& s, const QuatSet& t);

// Nonzero residues of the differences modulo 4, each coordinate reduced to
// [0,4); sorted and deduplicated. Drives the gamma = 8 residue rule.
std::vector<Quat> delta_residues_mod4(const std::vector<Quat>& deltas);

}  // namespace quatring
