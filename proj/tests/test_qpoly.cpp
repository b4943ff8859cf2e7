#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "quatring/errors.hpp"
#include "quatring/qpoly.hpp"
#include "quatring/quat.hpp"

using namespace quatring;

namespace {

Quat rq(std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> c(-9, 9);
    return Quat(c(rng), c(rng), c(rng), c(rng));
}

QPoly random_poly(std::mt19937_64& rng, int deg) {
    std::vector<Quat> cs;
    for (int t = 0; t <= deg; ++t) cs.push_back(rq(rng));
    return QPoly(std::move(cs));
}

QPoly random_central(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<i64> c(-9, 9);
    std::vector<Quat> cs;
    for (int t = 0; t <= deg; ++t) cs.push_back(Quat(c(rng), 0, 0, 0));
    return QPoly(std::move(cs));
}

}  // namespace

TEST_CASE("right evaluation keeps coefficients on the left") {
    const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    QPoly f = QPoly::linear(i, Quat::zero());  // f(x) = i*x
    CHECK(eval_right(f, j) == k);
    QPoly g({Quat::zero(), Quat::zero(), Quat::one()});  // x^2
    CHECK(eval_right(g, Quat(1, 1, 0, 0)) == Quat(1, 1, 0, 0) * Quat(1, 1, 0, 0));
    // f(x) = x - i vanishes at i but (x-i)*x at i evaluates via powers, not roots
    QPoly xm = QPoly::linear(Quat::one(), -i);
    CHECK(eval_right(xm, i).is_zero());
    CHECK(eval_right(xm, j) == j - i);
}

TEST_CASE("product evaluation agrees iff the right factor is central") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 200; ++t) {
        QPoly f = random_poly(rng, 3);
        QPoly g = random_central(rng, 2);
        Quat a = rq(rng);
        CHECK(eval_right(poly_mul(f, g), a) == eval_right(f, a) * eval_right(g, a));
        // central factors commute in the polynomial ring, so the same value falls out
        CHECK(poly_mul(g, f) == poly_mul(f, g));
    }
    // explicit counterexample with a non-central right factor
    QPoly f = QPoly::linear(Quat::one(), -Quat::i());
    QPoly g = QPoly::constant(Quat::j());
    Quat at = Quat::k();
    CHECK(eval_right(poly_mul(f, g), at) != eval_right(f, at) * eval_right(g, at));
}

TEST_CASE("poly products do not commute") {
    QPoly a = QPoly::linear(Quat::one(), -Quat::i());
    QPoly b = QPoly::linear(Quat::one(), -Quat::j());
    CHECK(poly_mul(a, b) != poly_mul(b, a));
    CHECK(poly_mul(a, b).degree() == 2);
}

TEST_CASE("divmod by a central monic divisor") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 200; ++t) {
        QPoly f = random_poly(rng, 5);
        QPoly m({Quat(3, 0, 0, 0), Quat(-1, 0, 0, 0), Quat::one()});  // x^2 - x + 3
        auto [q, r] = divmod_central(f, m);
        CHECK(r.degree() < m.degree());
        CHECK(poly_add(poly_mul(q, m), r) == f);
    }
    QPoly lin({Quat(-2, 0, 0, 0), Quat::one()});  // x - 2
    auto [q, r] = divmod_central(QPoly({Quat::i(), Quat::j(), Quat::one()}), lin);
    CHECK(r.degree() == 0);
    CHECK(eval_right(poly_add(poly_mul(q, lin), r), Quat(2, 0, 0, 0)) ==
          eval_right(QPoly({Quat::i(), Quat::j(), Quat::one()}), Quat(2, 0, 0, 0)));
}

TEST_CASE("min_poly_to_qpoly annihilates the class") {
    Quat a(2, 1, -1, 1);
    QPoly m = min_poly_to_qpoly(min_poly(a));
    CHECK(m.central());
    CHECK(eval_right(m, a).is_zero());
    for (const Quat& b : conjugacy_class(a, Ring::H)) CHECK(eval_right(m, b).is_zero());
    CHECK(min_poly_to_qpoly(MinPoly::linear(Rational(4))) ==
          QPoly::linear(Quat::one(), Quat(-4, 0, 0, 0)));
}

TEST_CASE("integer valuedness and least denominators") {
    const Quat i = Quat::i();
    QPoly f = poly_scale(QPoly::linear(Quat::one(), -i), Rational(1, 2));  // (x-i)/2
    CHECK(is_integer_valued(f, {i, -i}, Ring::H));
    CHECK_FALSE(is_integer_valued(f, {i, Quat::j()}, Ring::H));
    CHECK(least_ring_denominator(f, Ring::L) == 2);
    CHECK(least_ring_denominator(Quat::h(), Ring::L) == 2);
    CHECK(least_ring_denominator(Quat::h(), Ring::H) == 1);
    CHECK(least_ring_denominator(QPoly::constant(Quat::scaled_ints(1, 1, 0, 0, 6)), Ring::L) == 6);
}

TEST_CASE("affine substitution composes with evaluation") {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 200; ++t) {
        QPoly f = random_poly(rng, 4);
        std::uniform_int_distribution<i64> c(-5, 5);
        i64 a = c(rng);
        i64 n = 1 + std::abs(c(rng));
        QPoly g = subst_affine(f, Rational(a), Rational(n));  // g(x) = f((x-a)/n)
        Quat tpt = rq(rng);
        Quat spt = Quat(a, 0, 0, 0) + tpt.scaled(Rational(n));
        CHECK(eval_right(g, spt) == eval_right(f, tpt));
    }
}

TEST_CASE("degree cap blocks runaway products") {
    QPoly x = QPoly::x();
    QPoly f = QPoly::constant(Quat::one());
    for (int t = 0; t < QPoly::kDegreeCap; ++t) f = poly_mul(f, x);
    CHECK(f.degree() == QPoly::kDegreeCap);
    CHECK_THROWS_AS(poly_mul(f, x), CapError);
}

TEST_CASE("central flag") {
    CHECK(QPoly({Quat(1, 0, 0, 0), Quat(-3, 0, 0, 0)}).central());
    CHECK_FALSE(QPoly({Quat::i()}).central());
    CHECK(QPoly().central());  // zero polynomial
}
