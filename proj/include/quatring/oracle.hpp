#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "quatring/classify.hpp"

namespace quatring {

inline constexpr i64 kDefaultGammaCap = 16;

// Outcome of the coset brute force. On a negative answer the witness records
// the first failing (coset, element, unit) triple in scan order.
struct OracleResult {
    bool is_ringset = false;
    std::optional<Witness> witness;
    i64 cosets_scanned = 0;
    i64 admissible = 0;  // cosets whose representative clears gamma * delta
};

// Representative gamma = (x0*b0 + x1*b1 + x2*b2 + x3*b3) / g over the lattice
// basis (1,i,j,k) for L and (1,i,j,h) for H, digits in [0,g).
struct CosetRep {
    std::array<i64, 4> digits{0, 0, 0, 0};
    Quat value;  // the representative as an exact quaternion
};

// Visits the g^4 coset representatives of (1/g)R / R in a fixed order:
// index n = x0 + g*x1 + g^2*x2 + g^3*x3 ascending. Stops early when the
// callback returns false.
void for_each_coset(i64 g, Ring ring, const std::function<bool(const CosetRep&)>& fn);

// Exhaustive decision for a single-class set with |S| >= 2: scans every
// admissible leading coset and every (element, unit) pair. Throws CapError
// when gamma exceeds gamma_cap (the scan is gamma^4 cosets). gamma == 0
// (singleton after dedup) is rejected with DomainError.
OracleResult brute_force_ringset_class(const QuatSet& s, i64 gamma_cap = kDefaultGammaCap);

// Multi-class wrapper: splits S by minimal polynomial, brute-forces each
// class (delegating singleton classes to the direct construction), and lifts
// the first failing witness through a separator.
OracleResult oracle_decide(const QuatSet& s, i64 gamma_cap = kDefaultGammaCap);

// Witness constructions for the negative branches of the classification.
Witness witness_singleton(const Quat& alpha, Ring ring);
Witness witness_odd_prime(const QuatSet& s, i64 p);
Witness witness_power_two(const QuatSet& s);

// Re-checks a witness from scratch: f and partner integer-valued on S
// (verified modularly in R/(modulus R)), fail_at in S, product evaluation
// at fail_at equals fail_value, and fail_value lies outside the ring.
bool verify_witness(const Witness& w, const QuatSet& s);

// Multiplies f and partner by the central separator F (which is 1 on the
// witness's class and 0 on the rest of U), preserving the failure value.
Witness lift_witness(const Witness& w, const QPoly& f_sep, const QuatSet& u);

// The two-strip example family: {a+i : n^2-n <= a <= n^2-1} together with
// {a+j : n^2 <= a <= n^2+n-1}.
std::vector<Quat> tn_example(i64 n);

// Checks the local pairing hypothesis on S for every modulus 2..n_max:
// each alpha has a beta with the same minimal polynomial mod n and
// alpha - beta == +-(i - j) mod n.
bool check_prop56_hypothesis(const QuatSet& s, i64 n_max);

}  // namespace quatring
