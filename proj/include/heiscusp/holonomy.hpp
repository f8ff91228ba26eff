#pragma once

#include <map>
#include <string>
#include <vector>

#include "heiscusp/family.hpp"
#include "heiscusp/heis.hpp"

namespace heiscusp {

/// A generator assignment for one family at one field parameter d.
struct RepAssignment {
  FamilyId family;
  FamilyParams params;
  SquarefreeD d;
  std::map<Gen, HeisIsom> images;
};

/// The standard holonomy of the family with integral matrix entries.
/// Families 1-4 accept every squarefree d; the quarter-twist requires
/// d = 1 and the third- and sixth-twist require d = 3.  Throws
/// std::invalid_argument on bad parameters and std::domain_error (citing
/// the root-of-unity obstruction) on a disallowed d.
RepAssignment standard_rep(FamilyId f, const FamilyParams& P, SquarefreeD d);

/// Certificate that an assignment is a holonomy with integral entries:
///  - relations_ok:  every defining relator evaluates to the identity;
///  - integral_ok:   every generator image has matrix entries in Z[tau];
///  - lattice_ok:    the a, b images project to R-linearly independent
///                   horizontal translations and c is a nontrivial vertical
///                   translation;
///  - rotational_ok: the rotation-and-reflection parts generate the group
///                   the family's twist demands.
struct HolonomyCert {
  FamilyId family;
  FamilyParams params;
  SquarefreeD d;
  bool relations_ok;
  bool integral_ok;
  bool lattice_ok;
  bool rotational_ok;
  long rotation_group_order;
  std::vector<RelatorResidual> residuals;
  std::vector<std::string> failures;

  bool all_ok() const {
    return relations_ok && integral_ok && lattice_ok && rotational_ok;
  }

  friend bool operator==(const HolonomyCert&, const HolonomyCert&) = default;
};

HolonomyCert verify_holonomy(const RepAssignment& rep);

struct ErratumReport {
  long k;
  // The earlier publication's appendix pair, in its own normalization.
  HeisIsom published_alpha;   // (2k(1+i), 0, -1)
  HeisIsom published_c;       // (0, 32k, 1)
  HeisIsom published_square;
  bool published_square_is_identity;
  bool published_relation_holds;
  // The corrected pair (double half-twist standard holonomy at d = 1).
  HeisIsom corrected_alpha;   // (-k(1+i), 4k, -1)
  HeisIsom corrected_c;       // (0, 8k, 1)
  HeisIsom corrected_square;
  bool corrected_relation_holds;
};

/// The double half-twist holonomy at d = 1 was once published with
/// alpha = (2k(1+i), 0, -1) against c = (0, 32k, 1); that alpha squares to
/// the identity and so cannot satisfy x^2 = c.  This report contrasts it
/// with the corrected alpha = (-k(1+i), 4k, -1), which squares to its
/// c = (0, 8k, 1).  Any positive k is accepted; only the single relator is
/// at stake.
ErratumReport erratum_family4(long k);

}  // namespace heiscusp
