#include "heiscusp/ring.hpp"

#include "generators.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <stdexcept>

using namespace heiscusp;

namespace {

ImagQuad iq(long d, const Rat& a, const Rat& b) {
  return {SquarefreeD(d), a, b};
}

}  // namespace

TEST_CASE("squarefree guard accepts squarefree d and rejects the rest") {
  for (long d : {1L, 2L, 3L, 5L, 6L, 7L, 10L, 11L, 13L, 163L}) {
    CHECK(SquarefreeD(d).value() == d);
    CHECK(is_squarefree(d));
  }
  for (long d : {0L, -1L, -3L, 4L, 8L, 9L, 12L, 18L, 25L, 50L}) {
    CHECK_THROWS_AS(SquarefreeD{d}, std::invalid_argument);
  }
  CHECK(SquarefreeD(7).mod4() == 3);
  CHECK(SquarefreeD(5).mod4() == 1);
  CHECK(SquarefreeD(2).mod4() == 2);
}

TEST_CASE("rationals are canonical and integer detection uses the denominator") {
  CHECK(Rat(4, 2) == Rat(2));
  CHECK(is_integer(Rat(6, 3)));
  CHECK(!is_integer(Rat(1, 2)));
  CHECK(is_integer(Rat(0)));
  CHECK(is_integer(Rat(-9, 3)));
}

TEST_CASE("E_d arithmetic satisfies the field axioms on random samples") {
  testgen::Rng rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const SquarefreeD d = testgen::random_d(rng);
    const ImagQuad x = testgen::random_imag(rng, d);
    const ImagQuad y = testgen::random_imag(rng, d);
    const ImagQuad z = testgen::random_imag(rng, d);

    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + ImagQuad::zero(d) == x);
    CHECK(x * ImagQuad::one(d) == x);
    CHECK(x + (-x) == ImagQuad::zero(d));
    if (!y.is_zero()) {
      CHECK((x / y) * y == x);
      CHECK(y / y == ImagQuad::one(d));
    }
  }
}

TEST_CASE("conjugation and norm are multiplicative") {
  testgen::Rng rng(20240812);
  for (int trial = 0; trial < 200; ++trial) {
    const SquarefreeD d = testgen::random_d(rng);
    const ImagQuad x = testgen::random_imag(rng, d);
    const ImagQuad y = testgen::random_imag(rng, d);

    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(conj(conj(x)) == x);
    CHECK(norm(x * y) == norm(x) * norm(y));
    // x * conj(x) lands on the rational norm.
    CHECK(x * conj(x) == ImagQuad(d, norm(x)));
    CHECK(norm(x) >= 0);
  }
}

TEST_CASE("division by zero and mixed fields are rejected") {
  const ImagQuad x = iq(3, 1, 2);
  CHECK_THROWS_AS(x / ImagQuad::zero(SquarefreeD(3)), std::domain_error);
  CHECK_THROWS_AS(x + iq(5, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(x * iq(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(require_same_d(SquarefreeD(1), SquarefreeD(7)),
                  std::invalid_argument);
}

TEST_CASE("ring-of-integers membership follows d mod 4") {
  // d = 1, 2 (mod 4): Z[i*sqrt(d)], both coordinates integral.
  CHECK(in_ring_of_integers(iq(1, 3, -2)));
  CHECK(!in_ring_of_integers(iq(1, Rat(1, 2), 0)));
  CHECK(!in_ring_of_integers(iq(1, Rat(1, 2), Rat(1, 2))));
  CHECK(in_ring_of_integers(iq(2, 0, 5)));
  CHECK(!in_ring_of_integers(iq(2, 0, Rat(5, 2))));
  CHECK(!in_ring_of_integers(iq(5, Rat(1, 2), Rat(1, 2))));

  // d = 3 (mod 4): Z[(1 + i*sqrt(d))/2], half-integers must pair up.
  CHECK(in_ring_of_integers(iq(3, Rat(1, 2), Rat(1, 2))));
  CHECK(in_ring_of_integers(iq(3, Rat(-3, 2), Rat(5, 2))));
  CHECK(in_ring_of_integers(iq(3, 2, 1)));
  CHECK(!in_ring_of_integers(iq(3, Rat(1, 2), 0)));
  CHECK(!in_ring_of_integers(iq(3, 0, Rat(1, 2))));
  CHECK(!in_ring_of_integers(iq(3, Rat(1, 3), 0)));
  CHECK(in_ring_of_integers(iq(7, Rat(1, 2), Rat(-1, 2))));
  CHECK(!in_ring_of_integers(iq(7, Rat(1, 2), Rat(1, 4))));

  // tau itself and its conjugate are integral; tau/2 is not.
  for (long d : {3L, 7L, 11L, 15L, 19L}) {
    const ImagQuad tau = iq(d, Rat(1, 2), Rat(1, 2));
    CHECK(in_ring_of_integers(tau));
    CHECK(in_ring_of_integers(conj(tau)));
    CHECK(in_ring_of_integers(tau * tau));
    CHECK(!in_ring_of_integers(Rat(1, 2) * tau));
  }
}

TEST_CASE("multiplicative order finds the finite orders and nothing else") {
  CHECK(multiplicative_order(iq(1, 1, 0), 12) == 1);
  CHECK(multiplicative_order(iq(1, -1, 0), 12) == 2);
  CHECK(multiplicative_order(iq(1, 0, 1), 12) == 4);   // i
  CHECK(multiplicative_order(iq(1, 0, -1), 12) == 4);  // -i
  CHECK(multiplicative_order(iq(3, Rat(-1, 2), Rat(1, 2)), 12) == 3);
  CHECK(multiplicative_order(iq(3, Rat(1, 2), Rat(1, 2)), 12) == 6);
  CHECK(multiplicative_order(iq(3, Rat(1, 2), Rat(-1, 2)), 12) == 6);

  // Norm-one element of infinite order: (3 + 4i)/5.
  CHECK(multiplicative_order(iq(1, Rat(3, 5), Rat(4, 5)), 50) == std::nullopt);
  // Not a unit at all.
  CHECK(multiplicative_order(iq(1, 2, 0), 50) == std::nullopt);
  CHECK(multiplicative_order(iq(7, 0, 0), 50) == std::nullopt);
  // Order above the bound stays undetected by contract.
  CHECK(multiplicative_order(iq(1, 0, 1), 3) == std::nullopt);
}

TEST_CASE("real quadratic values fold sqrt(1) and keep exact components") {
  const SquarefreeD d1(1);
  CHECK(RealQuad(d1, Rat(2), Rat(3)) == RealQuad(d1, Rat(5)));
  CHECK(RealQuad(d1, Rat(0), Rat(3)).q() == 0);
  CHECK(RealQuad(d1, Rat(0), Rat(3)).p() == 3);

  const SquarefreeD d3(3);
  const RealQuad s = RealQuad::sqrt_d_times(d3, Rat(2));
  CHECK(s.p() == 0);
  CHECK(s.q() == 2);
  CHECK(s + s == RealQuad::sqrt_d_times(d3, Rat(4)));
  CHECK(s - s == RealQuad::zero(d3));
  CHECK(Rat(-3) * s == RealQuad::sqrt_d_times(d3, Rat(-6)));
  CHECK((-s).q() == -2);
  CHECK(RealQuad(d3, Rat(1), Rat(2)) + RealQuad(d3, Rat(-1), Rat(1)) ==
        RealQuad(d3, Rat(0), Rat(3)));
}

TEST_CASE("multiplying a real coordinate by i stays in E_d only when it can") {
  // d = 1: i*(p + q) is always representable.
  CHECK(try_times_i(RealQuad(SquarefreeD(1), Rat(5))) == iq(1, 0, 5));
  CHECK(try_times_i(RealQuad(SquarefreeD(1), Rat(-7, 2))) ==
        iq(1, 0, Rat(-7, 2)));

  // d > 1: i*(q*sqrt(d)) = q * (i*sqrt(d)); a rational part blocks it.
  const SquarefreeD d3(3);
  CHECK(try_times_i(RealQuad::sqrt_d_times(d3, Rat(4))) == iq(3, 0, 4));
  CHECK(try_times_i(RealQuad(d3, Rat(1), Rat(4))) == std::nullopt);
  CHECK(try_times_i(RealQuad(d3, Rat(1))) == std::nullopt);
  CHECK(try_times_i(RealQuad::zero(d3)) == iq(3, 0, 0));
}

TEST_CASE("imaginary parts track the i*sqrt(d) coordinate") {
  testgen::Rng rng(20240813);
  for (int trial = 0; trial < 100; ++trial) {
    const SquarefreeD d = testgen::random_d(rng);
    const ImagQuad x = testgen::random_imag(rng, d);
    CHECK(im_part(x) == RealQuad::sqrt_d_times(d, x.b()));
    // Im(x * conj(x)) = 0.
    CHECK(im_part(x * conj(x)).is_zero());
    // Im(x + conj(x)) = 0.
    CHECK(im_part(x + conj(x)).is_zero());
  }
}

TEST_CASE("the rational unit parametrization lands on the unit circle") {
  testgen::Rng rng(20240814);
  for (int trial = 0; trial < 200; ++trial) {
    const SquarefreeD d = testgen::random_d(rng);
    const ImagQuad u = testgen::random_unit(rng, d);
    CHECK(norm(u) == 1);
    CHECK(u * conj(u) == ImagQuad::one(d));
  }
}
