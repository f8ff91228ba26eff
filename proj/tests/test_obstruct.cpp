#include "heiscusp/obstruct.hpp"

#include "heiscusp/heis.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

using namespace heiscusp;

namespace {

ImagQuad iq(long d, const Rat& a, const Rat& b = Rat(0)) {
  return {SquarefreeD(d), a, b};
}

// Exhaustive search for elements of multiplicative order exactly n in E_d.
// Roots of unity are algebraic integers of norm 1, so both coordinates lie
// in {0, +-1/2, +-1}; scanning that grid finds every finite order.
std::set<int> orders_present(SquarefreeD d, int bound) {
  std::set<int> found;
  const Rat grid[] = {Rat(0), Rat(1, 2), Rat(-1, 2), Rat(1), Rat(-1)};
  for (const Rat& a : grid) {
    for (const Rat& b : grid) {
      const ImagQuad x(d, a, b);
      if (norm(x) != 1) continue;
      if (const auto n = multiplicative_order(x, bound)) found.insert(*n);
    }
  }
  return found;
}

}  // namespace

TEST_CASE("primitive roots of unity exist exactly where the field allows") {
  // Orders 1 and 2 are rational and live everywhere.
  for (long d : {1L, 2L, 3L, 5L, 7L}) {
    const RootOfUnity r1 = primitive_root_in_Ed(1, SquarefreeD(d));
    REQUIRE(r1.value.has_value());
    CHECK(r1.value->is_one());
    const RootOfUnity r2 = primitive_root_in_Ed(2, SquarefreeD(d));
    REQUIRE(r2.value.has_value());
    CHECK(*r2.value == iq(d, -1));
  }

  // Order 4 needs i: only d = 1.
  const RootOfUnity i4 = primitive_root_in_Ed(4, SquarefreeD(1));
  REQUIRE(i4.value.has_value());
  CHECK(multiplicative_order(*i4.value, 4) == 4);
  CHECK(!primitive_root_in_Ed(4, SquarefreeD(2)).value.has_value());
  CHECK(!primitive_root_in_Ed(4, SquarefreeD(3)).value.has_value());

  // Orders 3 and 6 need sqrt(-3): only d = 3.
  const RootOfUnity z3 = primitive_root_in_Ed(3, SquarefreeD(3));
  REQUIRE(z3.value.has_value());
  CHECK(*z3.value == iq(3, Rat(-1, 2), Rat(1, 2)));
  const RootOfUnity z6 = primitive_root_in_Ed(6, SquarefreeD(3));
  REQUIRE(z6.value.has_value());
  CHECK(*z6.value == iq(3, Rat(1, 2), Rat(1, 2)));
  CHECK(!primitive_root_in_Ed(3, SquarefreeD(1)).value.has_value());
  CHECK(!primitive_root_in_Ed(6, SquarefreeD(7)).value.has_value());

  // A found root really has the claimed order.
  for (int n : {1, 2, 3, 4, 6}) {
    for (long d : {1L, 2L, 3L, 5L, 7L, 11L}) {
      const RootOfUnity r = primitive_root_in_Ed(n, SquarefreeD(d));
      CHECK(r.order == n);
      if (r.value) CHECK(multiplicative_order(*r.value, 6) == n);
    }
  }

  CHECK_THROWS_AS(primitive_root_in_Ed(5, SquarefreeD(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(primitive_root_in_Ed(12, SquarefreeD(3)),
                  std::invalid_argument);
}

TEST_CASE("root-of-unity membership matches an exhaustive unit search") {
  for (long d = 1; d <= 60; ++d) {
    if (!is_squarefree(d)) continue;
    const SquarefreeD sd(d);
    const std::set<int> present = orders_present(sd, 12);
    for (int n : {1, 2, 3, 4, 6}) {
      CHECK(zeta_in_Ed(n, sd) == (present.count(n) > 0));
    }
    // No imaginary quadratic field holds any other finite order.
    for (int n : present) CHECK((n == 1 || n == 2 || n == 3 || n == 4 || n == 6));
  }
}

TEST_CASE("the degree argument rules out exactly the absent rotation orders") {
  // Eigenvalues {1, 1, u} of a matrix over E_d keep u inside E_d, so a
  // missing root of unity obstructs the twist.
  CHECK(!cubic_extension_obstruction(2, SquarefreeD(5)));
  CHECK(!cubic_extension_obstruction(1, SquarefreeD(5)));
  CHECK(cubic_extension_obstruction(3, SquarefreeD(1)));
  CHECK(!cubic_extension_obstruction(3, SquarefreeD(3)));
  CHECK(cubic_extension_obstruction(4, SquarefreeD(3)));
  CHECK(!cubic_extension_obstruction(4, SquarefreeD(1)));
  CHECK(cubic_extension_obstruction(6, SquarefreeD(1)));
  CHECK(cubic_extension_obstruction(6, SquarefreeD(2)));
  CHECK(!cubic_extension_obstruction(6, SquarefreeD(3)));
}

TEST_CASE("rotation orders and allowed fields per family") {
  CHECK(holomorphic_rotation_order(FamilyId::NilTorus) == 1);
  CHECK(holomorphic_rotation_order(FamilyId::VerticalHalfTwist) == 2);
  CHECK(holomorphic_rotation_order(FamilyId::HorizontalHalfTwist) == 2);
  CHECK(holomorphic_rotation_order(FamilyId::DoubleHalfTwist) == 2);
  CHECK(holomorphic_rotation_order(FamilyId::QuarterTwist) == 4);
  CHECK(holomorphic_rotation_order(FamilyId::ThirdTwist) == 3);
  CHECK(holomorphic_rotation_order(FamilyId::SixthTwist) == 6);

  for (FamilyId f : {FamilyId::NilTorus, FamilyId::VerticalHalfTwist,
                     FamilyId::HorizontalHalfTwist, FamilyId::DoubleHalfTwist}) {
    const AllowedD a = allowed_d(f);
    CHECK(a.all);
    CHECK(a.contains(1));
    CHECK(a.contains(163));
    CHECK(!a.contains(4));  // not squarefree
  }

  const AllowedD a5 = allowed_d(FamilyId::QuarterTwist);
  CHECK(!a5.all);
  CHECK(a5.only == std::vector<long>{1});
  CHECK(a5.contains(1));
  CHECK(!a5.contains(3));
  CHECK(a5.to_text() == "{1}");

  const AllowedD a6 = allowed_d(FamilyId::ThirdTwist);
  CHECK(a6.only == std::vector<long>{3});
  const AllowedD a7 = allowed_d(FamilyId::SixthTwist);
  CHECK(a7.only == std::vector<long>{3});
  CHECK(a7.to_text() == "{3}");

  CHECK(allowed_d(FamilyId::NilTorus).to_text() == "all squarefree d >= 1");
}

TEST_CASE("allowed fields agree with root-of-unity membership on a long scan") {
  for (long d = 1; d <= 60; ++d) {
    if (!is_squarefree(d)) continue;
    const SquarefreeD sd(d);
    for (FamilyId f : {FamilyId::NilTorus, FamilyId::VerticalHalfTwist,
                       FamilyId::HorizontalHalfTwist, FamilyId::DoubleHalfTwist,
                       FamilyId::QuarterTwist, FamilyId::ThirdTwist,
                       FamilyId::SixthTwist}) {
      const int n = holomorphic_rotation_order(f);
      CHECK(allowed_d(f).contains(d) == zeta_in_Ed(n, sd));
    }
  }
}

TEST_CASE("antiholomorphic necessity is witnessed and machine-checked") {
  const AntiholWitness w3 = antihol_required(FamilyId::HorizontalHalfTwist);
  CHECK(w3.required);
  CHECK(w3.all_checked());
  CHECK(w3.steps.size() >= 2);
  for (const WitnessStep& s : w3.steps) {
    CHECK(s.checked);
    CHECK(!s.statement.empty());
  }

  const AntiholWitness w4 = antihol_required(FamilyId::DoubleHalfTwist);
  CHECK(w4.required);
  CHECK(w4.all_checked());

  for (FamilyId f : {FamilyId::NilTorus, FamilyId::VerticalHalfTwist,
                     FamilyId::QuarterTwist, FamilyId::ThirdTwist,
                     FamilyId::SixthTwist}) {
    const AntiholWitness w = antihol_required(f);
    CHECK(!w.required);
    CHECK(w.all_checked());
    CHECK(!w.steps.empty());
  }
}
