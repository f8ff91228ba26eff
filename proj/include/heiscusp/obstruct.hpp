#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heiscusp/family.hpp"
#include "heiscusp/ring.hpp"

namespace heiscusp {

/// The set of squarefree d >= 1 for which a family admits integral holonomy.
struct AllowedD {
  bool all = false;
  std::vector<long> only;  // sorted; used when !all

  bool contains(long d) const;
  std::string to_text() const;
};

struct RootOfUnity {
  int order;
  std::optional<ImagQuad> value;  // a primitive root, when one exists in E_d
};

/// Solves the cyclotomic polynomial of order n over E_d exactly.
/// Supported orders: 1, 2, 3, 4, 6 (the rotation orders of the seven
/// families); anything else throws std::invalid_argument.
RootOfUnity primitive_root_in_Ed(int n, SquarefreeD d);

bool zeta_in_Ed(int n, SquarefreeD d);

/// A matrix over E_d with eigenvalues {1, 1, u} confines u to E_d itself:
/// its eigenvalues lie in extensions of degree dividing 3, while a
/// primitive root of unity of order 3, 4 or 6 generates a degree-2
/// extension when absent from E_d.  True when that rules the order out.
bool cubic_extension_obstruction(int n, SquarefreeD d);

/// Multiplicative order of the holomorphic rotational parts in the standard
/// holonomy of the family: 1, 2, 2, 2, 4, 3, 6.
int holomorphic_rotation_order(FamilyId f);

/// d for which the family admits a holonomy with integral matrix entries:
/// unrestricted when the rotation order is 1 or 2, otherwise exactly the d
/// whose E_d contains the needed root of unity.
AllowedD allowed_d(FamilyId f);

struct WitnessStep {
  std::string statement;
  bool checked;
};

/// Whether every holonomy of the family must contain antiholomorphic
/// elements, with a machine-checked witness chain: for the horizontal and
/// double half-twist families the chain rules holomorphic candidates out;
/// for the others it exhibits an all-holomorphic representation.
struct AntiholWitness {
  FamilyId family;
  bool required;
  std::vector<WitnessStep> steps;

  bool all_checked() const;
};

AntiholWitness antihol_required(FamilyId f);

}  // namespace heiscusp
