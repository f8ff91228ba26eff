#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heiscusp/heis.hpp"

namespace heiscusp {

/// Horizontal part of the cusp stabilizer of the standard cusp of
/// H^2_C / PU(2,1,O_d), as a named group.  Triangle groups and Isom+(O_d)
/// enter only as labels naming the quotients; there is nothing further to
/// compute from them here.
enum class HorizontalTag {
  Delta236,              // d = 3: the (2,3,6) triangle group
  IndexTwoInDelta244,    // d = 1: index two in the (2,4,4) triangle group
  IsomPlusOd,            // d = 3 (mod 4), d != 3: all of Isom+(O_d)
  IndexTwoInIsomPlusOd,  // d = 1, 2 (mod 4), d != 1: index two in Isom+(O_d)
};

const char* to_cstring(HorizontalTag tag);

struct CuspDescriptor {
  SquarefreeD d;
  /// Generator of the vertical part: the translation (0, 2*sqrt(d), 1).
  HeisIsom vertical_generator;
  HorizontalTag horizontal_tag;
};

/// Descriptor of the standard cusp group of the Picard modular group for d;
/// the tag is a function of d alone (d = 1, 3 special, then d mod 4).
CuspDescriptor picard_cusp_descriptor(SquarefreeD d);

/// Minimality evidence for the vertical generator: (0, 2*sqrt(d), 1) has an
/// integral lift while the half-step (0, sqrt(d), 1) does not, its lift
/// carrying the non-integer entry i*sqrt(d)/2.  The half-turn (0, 0, -1)
/// is integral for every d, so it never obstructs.
struct VerticalGeneratorCheck {
  SquarefreeD d;
  HeisIsom generator;       // (0, 2*sqrt(d), 1)
  bool generator_integral;  // expected true
  HeisIsom half_step;       // (0, sqrt(d), 1)
  bool half_step_integral;  // expected false
  ImagQuad half_top_right;  // i*sqrt(d)/2, the offending matrix entry
  bool half_top_right_in_Od;
  HeisIsom half_turn;       // (0, 0, -1)
  bool half_turn_integral;  // expected true

  bool as_expected() const {
    return generator_integral && !half_step_integral &&
           !half_top_right_in_Od && half_turn_integral;
  }
};

VerticalGeneratorCheck verify_vertical_generator(SquarefreeD d);

enum class TriangleTag { Delta333, Delta244, Delta236 };

const char* to_cstring(TriangleTag tag);

/// How a non-arithmetic cusp group relates to a Picard cusp group.
enum class PicardRelation {
  Isomorphic,              // the full cusp group is Gamma_inf(d)
  ContainsIndexTwoPicard,  // it contains Gamma_inf(d) with index 2
};

struct PicardMatch {
  long d;
  PicardRelation relation;
};

/// One row of the cusp-group table of the non-arithmetic complex triangle
/// lattices: cusp group generated by two complex reflections A, B of order
/// p, with triangle-group horizontal part and vertical part generated by
/// T = (AB)^vertical_ab_power.  The p = 3 row records explicitly that the
/// source draws no Picard comparison for it.
struct NonArithCuspRow {
  int p;  // common order of the reflections A, B: 3, 4 or 6
  TriangleTag horizontal;
  int vertical_ab_power;
  std::optional<PicardMatch> matching_picard;
  /// Reflection-extended lattices whose full cusp group matches the
  /// antiholomorphic extension of the same Picard cusp; empty for p = 3.
  std::vector<std::string> lattices;
};

/// The three rows (p = 3, 4, 6), in that order.
const std::vector<NonArithCuspRow>& nonarith_cusp_table();

/// Squarefree d for which Q(i*sqrt(d)) has ideal class number one; these are
/// exactly the d whose Picard orbifold has a single cusp.
const std::vector<long>& class_number_one_list();

}  // namespace heiscusp
