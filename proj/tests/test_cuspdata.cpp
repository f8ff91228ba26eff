#include "heiscusp/cuspdata.hpp"

#include "heiscusp/textio.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

using namespace heiscusp;

TEST_CASE("the horizontal tag is decided by d = 1, d = 3, then d mod 4") {
  CHECK(picard_cusp_descriptor(SquarefreeD(3)).horizontal_tag ==
        HorizontalTag::Delta236);
  CHECK(picard_cusp_descriptor(SquarefreeD(1)).horizontal_tag ==
        HorizontalTag::IndexTwoInDelta244);
  for (long d : {7L, 11L, 19L, 23L, 163L}) {
    CHECK(picard_cusp_descriptor(SquarefreeD(d)).horizontal_tag ==
          HorizontalTag::IsomPlusOd);
  }
  for (long d : {2L, 5L, 6L, 10L, 13L, 17L}) {
    CHECK(picard_cusp_descriptor(SquarefreeD(d)).horizontal_tag ==
          HorizontalTag::IndexTwoInIsomPlusOd);
  }

  CHECK(std::string(to_cstring(HorizontalTag::Delta236)) == "Delta(2,3,6)");
  CHECK(std::string(to_cstring(HorizontalTag::IndexTwoInDelta244)) ==
        "index 2 in Delta(2,4,4)");
  CHECK(std::string(to_cstring(HorizontalTag::IsomPlusOd)) == "Isom+(O_d)");
  CHECK(std::string(to_cstring(HorizontalTag::IndexTwoInIsomPlusOd)) ==
        "index 2 in Isom+(O_d)");
}

TEST_CASE("tags partition every squarefree d up to 1000") {
  std::map<HorizontalTag, long> counts;
  long squarefree_total = 0;
  for (long d = 1; d <= 1000; ++d) {
    if (!is_squarefree(d)) continue;
    ++squarefree_total;
    const HorizontalTag tag =
        picard_cusp_descriptor(SquarefreeD(d)).horizontal_tag;
    ++counts[tag];
    if (d == 1) {
      CHECK(tag == HorizontalTag::IndexTwoInDelta244);
    } else if (d == 3) {
      CHECK(tag == HorizontalTag::Delta236);
    } else if (d % 4 == 3) {
      CHECK(tag == HorizontalTag::IsomPlusOd);
    } else {
      CHECK(tag == HorizontalTag::IndexTwoInIsomPlusOd);
    }
  }
  CHECK(counts[HorizontalTag::IndexTwoInDelta244] == 1);
  CHECK(counts[HorizontalTag::Delta236] == 1);
  CHECK(counts[HorizontalTag::IsomPlusOd] +
            counts[HorizontalTag::IndexTwoInIsomPlusOd] + 2 ==
        squarefree_total);
}

TEST_CASE("the vertical generator is the documented translation") {
  for (long d : {1L, 2L, 3L, 7L, 15L}) {
    const CuspDescriptor desc = picard_cusp_descriptor(SquarefreeD(d));
    CHECK(desc.d == SquarefreeD(d));
    CHECK(desc.vertical_generator ==
          HeisIsom::translation(
              ImagQuad::zero(SquarefreeD(d)),
              RealQuad::sqrt_d_times(SquarefreeD(d), Rat(2))));
    CHECK(classify(desc.vertical_generator) ==
          IsomClass::VerticalTranslation);
  }
  CHECK(to_text(picard_cusp_descriptor(SquarefreeD(3)).vertical_generator) ==
        "(0; 2*sqrt(3); 1)");
}

TEST_CASE("minimality of the vertical generator holds across fields") {
  for (long d = 1; d <= 100; ++d) {
    if (!is_squarefree(d)) continue;
    const VerticalGeneratorCheck check =
        verify_vertical_generator(SquarefreeD(d));
    CHECK(check.generator_integral);
    CHECK(!check.half_step_integral);
    CHECK(check.half_turn_integral);
    CHECK(check.as_expected());

    // The obstructing entry of the half-step lift is i*sqrt(d)/2, which
    // misses Z[tau] for every d: even when half-integer coordinates exist
    // (d = 3 mod 4) they must come in matched pairs.
    CHECK(check.half_top_right == ImagQuad(SquarefreeD(d), Rat(0), Rat(1, 2)));
    CHECK(!check.half_top_right_in_Od);
    CHECK(!in_ring_of_integers(check.half_top_right));
  }

  // The d = 3 case that makes the pairing rule bite.
  CHECK(!in_ring_of_integers(ImagQuad(SquarefreeD(3), Rat(0), Rat(1, 2))));
  CHECK(in_ring_of_integers(ImagQuad(SquarefreeD(3), Rat(1, 2), Rat(1, 2))));

  const VerticalGeneratorCheck c7 = verify_vertical_generator(SquarefreeD(7));
  CHECK(c7.generator ==
        HeisIsom::translation(ImagQuad::zero(SquarefreeD(7)),
                              RealQuad::sqrt_d_times(SquarefreeD(7), Rat(2))));
  CHECK(c7.half_step ==
        HeisIsom::translation(ImagQuad::zero(SquarefreeD(7)),
                              RealQuad::sqrt_d_times(SquarefreeD(7), Rat(1))));
  CHECK(c7.half_turn ==
        HeisIsom::rotation(-ImagQuad::one(SquarefreeD(7))));
}

TEST_CASE("the non-arithmetic cusp table carries three reflection orders") {
  const std::vector<NonArithCuspRow>& table = nonarith_cusp_table();
  REQUIRE(table.size() == 3);

  const NonArithCuspRow& p3 = table[0];
  CHECK(p3.p == 3);
  CHECK(p3.horizontal == TriangleTag::Delta333);
  CHECK(p3.vertical_ab_power == 3);
  CHECK(!p3.matching_picard.has_value());
  CHECK(p3.lattices.empty());

  const NonArithCuspRow& p4 = table[1];
  CHECK(p4.p == 4);
  CHECK(p4.horizontal == TriangleTag::Delta244);
  CHECK(p4.vertical_ab_power == 2);
  REQUIRE(p4.matching_picard.has_value());
  CHECK(p4.matching_picard->d == 1);
  CHECK(p4.matching_picard->relation == PicardRelation::ContainsIndexTwoPicard);
  CHECK(p4.lattices ==
        std::vector<std::string>{"S~(4,sigma1)", "S~(4,sigma5)",
                                 "S~(4,sigma4bar)"});

  const NonArithCuspRow& p6 = table[2];
  CHECK(p6.p == 6);
  CHECK(p6.horizontal == TriangleTag::Delta236);
  CHECK(p6.vertical_ab_power == 3);
  REQUIRE(p6.matching_picard.has_value());
  CHECK(p6.matching_picard->d == 3);
  CHECK(p6.matching_picard->relation == PicardRelation::Isomorphic);
  CHECK(p6.lattices ==
        std::vector<std::string>{"Gamma~(6,1/6)", "S~(6,sigma1)",
                                 "S~(6,sigma4bar)"});

  CHECK(std::string(to_cstring(TriangleTag::Delta333)) == "Delta(3,3,3)");
  CHECK(std::string(to_cstring(TriangleTag::Delta244)) == "Delta(2,4,4)");
  CHECK(std::string(to_cstring(TriangleTag::Delta236)) == "Delta(2,3,6)");
}

TEST_CASE("the isomorphic match reuses the d = 3 Picard horizontal part") {
  // p = 6 row: its Delta(2,3,6) equals the full d = 3 Picard tag; p = 4 row:
  // the d = 1 Picard group sits inside Delta(2,4,4) with index two.
  const std::vector<NonArithCuspRow>& table = nonarith_cusp_table();
  CHECK(std::string(to_cstring(table[2].horizontal)) ==
        to_cstring(picard_cusp_descriptor(SquarefreeD(3)).horizontal_tag));
  CHECK(picard_cusp_descriptor(SquarefreeD(1)).horizontal_tag ==
        HorizontalTag::IndexTwoInDelta244);
}

TEST_CASE("single-cusp fields are the nine class-number-one discriminants") {
  const std::vector<long>& ds = class_number_one_list();
  CHECK(ds == std::vector<long>{1, 2, 3, 7, 11, 19, 43, 67, 163});
  for (long d : ds) CHECK(is_squarefree(d));
}
