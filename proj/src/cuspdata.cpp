#include "heiscusp/cuspdata.hpp"

#include <stdexcept>

namespace heiscusp {

const char* to_cstring(HorizontalTag tag) {
  switch (tag) {
    case HorizontalTag::Delta236: return "Delta(2,3,6)";
    case HorizontalTag::IndexTwoInDelta244: return "index 2 in Delta(2,4,4)";
    case HorizontalTag::IsomPlusOd: return "Isom+(O_d)";
    case HorizontalTag::IndexTwoInIsomPlusOd: return "index 2 in Isom+(O_d)";
  }
  throw std::logic_error("unreachable horizontal tag");
}

const char* to_cstring(TriangleTag tag) {
  switch (tag) {
    case TriangleTag::Delta333: return "Delta(3,3,3)";
    case TriangleTag::Delta244: return "Delta(2,4,4)";
    case TriangleTag::Delta236: return "Delta(2,3,6)";
  }
  throw std::logic_error("unreachable triangle tag");
}

CuspDescriptor picard_cusp_descriptor(SquarefreeD d) {
  HorizontalTag tag;
  if (d.value() == 3) {
    tag = HorizontalTag::Delta236;
  } else if (d.value() == 1) {
    tag = HorizontalTag::IndexTwoInDelta244;
  } else if (d.mod4() == 3) {
    tag = HorizontalTag::IsomPlusOd;
  } else {
    tag = HorizontalTag::IndexTwoInIsomPlusOd;
  }
  return {d,
          HeisIsom::translation(ImagQuad::zero(d),
                                RealQuad::sqrt_d_times(d, Rat(2))),
          tag};
}

VerticalGeneratorCheck verify_vertical_generator(SquarefreeD d) {
  const ImagQuad zero = ImagQuad::zero(d);
  const HeisIsom generator =
      HeisIsom::translation(zero, RealQuad::sqrt_d_times(d, Rat(2)));
  const HeisIsom half_step =
      HeisIsom::translation(zero, RealQuad::sqrt_d_times(d, Rat(1)));
  const HeisIsom half_turn(zero, RealQuad::zero(d), -ImagQuad::one(d));

  // The half-step lift exists (its t is a pure sqrt(d) multiple), and its
  // top-right entry i*t/2 = i*sqrt(d)/2 is the only non-integer entry.
  const auto lift = matrix_lift(half_step);
  if (!lift) throw std::logic_error("vertical half-step lift must exist");
  const ImagQuad entry = lift->mat.entry(0, 2);

  return {d,
          generator,
          is_integral(generator),
          half_step,
          is_integral(half_step),
          entry,
          in_ring_of_integers(entry),
          half_turn,
          is_integral(half_turn)};
}

const std::vector<NonArithCuspRow>& nonarith_cusp_table() {
  static const std::vector<NonArithCuspRow> rows = {
      {3, TriangleTag::Delta333, 3, std::nullopt, {}},
      {4,
       TriangleTag::Delta244,
       2,
       PicardMatch{1, PicardRelation::ContainsIndexTwoPicard},
       {"S~(4,sigma1)", "S~(4,sigma5)", "S~(4,sigma4bar)"}},
      {6,
       TriangleTag::Delta236,
       3,
       PicardMatch{3, PicardRelation::Isomorphic},
       {"Gamma~(6,1/6)", "S~(6,sigma1)", "S~(6,sigma4bar)"}},
  };
  return rows;
}

const std::vector<long>& class_number_one_list() {
  static const std::vector<long> ds = {1, 2, 3, 7, 11, 19, 43, 67, 163};
  return ds;
}

}  // namespace heiscusp
