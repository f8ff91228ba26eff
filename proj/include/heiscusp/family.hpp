#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heiscusp/heis.hpp"

namespace heiscusp {

/// The seven families of orientable Nil 3-manifold groups, indexed in the
/// conventional order.
enum class FamilyId : int {
  NilTorus = 1,
  VerticalHalfTwist = 2,
  HorizontalHalfTwist = 3,
  DoubleHalfTwist = 4,
  QuarterTwist = 5,
  ThirdTwist = 6,
  SixthTwist = 7,
};

const char* family_name(FamilyId f);
FamilyId family_from_int(int n);

/// Presentation parameters.  Every family uses k; the quarter-twist also
/// uses p, the third-twist k1 and k2, the sixth-twist k1.  Unused fields
/// stay 0.
struct FamilyParams {
  long k = 0;
  long p = 0;
  long k1 = 0;
  long k2 = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

std::string params_text(FamilyId f, const FamilyParams& P);

/// First violated parameter constraint, or empty if the parameters are
/// admissible for the family.
std::optional<std::string> params_violation(FamilyId f, const FamilyParams& P);

enum class Gen : std::uint8_t { A, B, C, Alpha, Beta };

/// Serialization letter: a, b, c, x (alpha), y (beta).  Uppercase denotes
/// the inverse.
char gen_letter(Gen g);

struct WordTerm {
  Gen gen;
  long exp;

  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Reduced word in the generators: adjacent terms use distinct generators
/// and every exponent is nonzero.
using Word = std::vector<WordTerm>;

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
/// [x, y] = x y x^-1 y^-1.
Word commutator(Gen x, Gen y);

/// Relators of a group presentation; each defining relation L = R is stored
/// as the relator L * R^-1.
struct Presentation {
  FamilyId family;
  FamilyParams params;
  std::vector<Gen> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_names;
};

/// Builds the defining presentation of the family; every listed relation is
/// transcribed, including the redundant commutators.  Throws
/// std::invalid_argument naming the violated constraint on bad parameters.
Presentation build_presentation(FamilyId f, const FamilyParams& P);

/// Image of a word under a generator assignment.  Throws
/// std::invalid_argument on a generator without an image or an empty
/// assignment.
HeisIsom evaluate_word(const Word& w, const std::map<Gen, HeisIsom>& images);

struct RelatorResidual {
  std::string name;
  HeisIsom residual;

  friend bool operator==(const RelatorResidual&,
                         const RelatorResidual&) = default;
};

/// Evaluates every relator; a residual equal to the identity means the
/// relation holds.
std::vector<RelatorResidual> check_relations(
    const Presentation& pres, const std::map<Gen, HeisIsom>& images);

/// One relator per line, letters space-separated with case denoting
/// inversion, exponents expanded by repetition: "b a B A C C C".
std::string relators_to_text(const std::vector<Word>& relators);
std::vector<Word> relators_from_text(const std::string& text);

}  // namespace heiscusp
