#include "heiscusp/family.hpp"

#include <cctype>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

namespace heiscusp {

const char* family_name(FamilyId f) {
  switch (f) {
    case FamilyId::NilTorus: return "nil-torus";
    case FamilyId::VerticalHalfTwist: return "vertical-half-twist";
    case FamilyId::HorizontalHalfTwist: return "horizontal-half-twist";
    case FamilyId::DoubleHalfTwist: return "double-half-twist";
    case FamilyId::QuarterTwist: return "quarter-twist";
    case FamilyId::ThirdTwist: return "third-twist";
    case FamilyId::SixthTwist: return "sixth-twist";
  }
  return "?";
}

FamilyId family_from_int(int n) {
  if (n < 1 || n > 7) {
    throw std::invalid_argument("family index must be 1..7, got " +
                                std::to_string(n));
  }
  return static_cast<FamilyId>(n);
}

std::string params_text(FamilyId f, const FamilyParams& P) {
  std::ostringstream os;
  os << "k = " << P.k;
  if (f == FamilyId::QuarterTwist) os << ", p = " << P.p;
  if (f == FamilyId::ThirdTwist) os << ", k1 = " << P.k1 << ", k2 = " << P.k2;
  if (f == FamilyId::SixthTwist) os << ", k1 = " << P.k1;
  return os.str();
}

std::optional<std::string> params_violation(FamilyId f,
                                            const FamilyParams& P) {
  if (P.k < 1) return "k must be a positive integer";
  const bool uses_p = f == FamilyId::QuarterTwist;
  const bool uses_k1 = f == FamilyId::ThirdTwist || f == FamilyId::SixthTwist;
  const bool uses_k2 = f == FamilyId::ThirdTwist;
  if (!uses_p && P.p != 0) return "p is not a parameter of this family";
  if (!uses_k1 && P.k1 != 0) return "k1 is not a parameter of this family";
  if (!uses_k2 && P.k2 != 0) return "k2 is not a parameter of this family";

  switch (f) {
    case FamilyId::NilTorus:
    case FamilyId::HorizontalHalfTwist:
      return std::nullopt;
    case FamilyId::VerticalHalfTwist:
    case FamilyId::DoubleHalfTwist:
      if (P.k % 2 != 0) return "k must be even";
      return std::nullopt;
    case FamilyId::QuarterTwist:
      if (P.k % 2 != 0) return "k must be even";
      if (P.p != 1 && P.p != 3) return "p must be 1 or 3";
      if (P.p == 3 && P.k % 4 != 0) return "p = 3 requires k divisible by 4";
      return std::nullopt;
    case FamilyId::ThirdTwist:
      if (P.k % 3 == 0) {
        if (P.k1 != 0) return "k divisible by 3 requires k1 = 0";
        if (P.k2 != 1 && P.k2 != 2)
          return "k divisible by 3 requires k2 = 1 or 2";
      } else {
        if (P.k1 != 1 || P.k2 != 1)
          return "k not divisible by 3 requires k1 = 1 and k2 = 1";
      }
      return std::nullopt;
    case FamilyId::SixthTwist:
      switch (P.k % 6) {
        case 0:
          if (P.k1 != 1 && P.k1 != 5)
            return "k divisible by 6 requires k1 = 1 or 5";
          return std::nullopt;
        case 2:
          if (P.k1 != 5) return "k = 2 (mod 6) requires k1 = 5";
          return std::nullopt;
        case 4:
          if (P.k1 != 1) return "k = 4 (mod 6) requires k1 = 1";
          return std::nullopt;
        default:
          return "k must be 0, 2 or 4 (mod 6)";
      }
  }
  return "unknown family";
}

char gen_letter(Gen g) {
  switch (g) {
    case Gen::A: return 'a';
    case Gen::B: return 'b';
    case Gen::C: return 'c';
    case Gen::Alpha: return 'x';
    case Gen::Beta: return 'y';
  }
  return '?';
}

namespace {

// Merge adjacent same-generator terms and drop zero exponents.
Word reduce(const Word& w) {
  Word out;
  for (const WordTerm& t : w) {
    if (t.exp == 0) continue;
    if (!out.empty() && out.back().gen == t.gen) {
      out.back().exp += t.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return out;
}

Word w1(Gen g, long e) {
  if (e == 0) return {};
  return {{g, e}};
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce(out);
}

std::string pow_text(char letter, long e) {
  std::string s(1, letter);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return out;
}

Word word_concat(const Word& a, const Word& b) { return cat({a, b}); }

Word commutator(Gen x, Gen y) {
  return {{x, 1}, {y, 1}, {x, -1}, {y, -1}};
}

Presentation build_presentation(FamilyId f, const FamilyParams& P) {
  if (const auto why = params_violation(f, P)) {
    throw std::invalid_argument("invalid parameters for family " +
                                std::string(family_name(f)) + " (" +
                                params_text(f, P) + "): " + *why);
  }

  const Gen a = Gen::A, b = Gen::B, c = Gen::C, x = Gen::Alpha, y = Gen::Beta;
  const long k = P.k;

  Presentation pres;
  pres.family = f;
  pres.params = P;

  // L = R becomes the relator L R^-1.
  auto rel = [&pres](const Word& lhs, const Word& rhs, std::string name) {
    pres.relators.push_back(cat({lhs, word_inverse(rhs)}));
    pres.relator_names.push_back(std::move(name));
  };
  auto comm_rel = [&](Gen g, Gen h, long c_exp) {
    const std::string rhs =
        c_exp == 0 ? "1" : pow_text(gen_letter(Gen::C), c_exp);
    rel(commutator(g, h), w1(Gen::C, c_exp),
        std::string("[") + gen_letter(g) + "," + gen_letter(h) + "] = " + rhs);
  };

  switch (f) {
    case FamilyId::NilTorus:
      pres.generators = {a, b, c};
      comm_rel(b, a, k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      break;

    case FamilyId::VerticalHalfTwist:
      pres.generators = {a, b, c, x};
      comm_rel(b, a, k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      comm_rel(c, x, 0);
      rel(cat({w1(x, 1), w1(a, 1)}), cat({w1(a, -1), w1(x, 1)}),
          "x a = a^-1 x");
      rel(cat({w1(x, 1), w1(b, 1)}), cat({w1(b, -1), w1(x, 1)}),
          "x b = b^-1 x");
      rel(w1(x, 2), w1(c, 1), "x^2 = c");
      break;

    case FamilyId::HorizontalHalfTwist:
      pres.generators = {a, b, c, x};
      comm_rel(b, a, 2 * k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      comm_rel(a, x, 0);
      rel(cat({w1(x, 1), w1(b, 1)}), cat({w1(b, -1), w1(x, 1), w1(c, -k)}),
          "x b = b^-1 x " + pow_text('c', -k));
      rel(cat({w1(x, 1), w1(c, 1)}), cat({w1(c, -1), w1(x, 1)}),
          "x c = c^-1 x");
      rel(w1(x, 2), w1(a, 1), "x^2 = a");
      break;

    case FamilyId::DoubleHalfTwist:
      pres.generators = {a, b, c, x, y};
      comm_rel(b, a, 2 * k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      comm_rel(c, x, 0);
      comm_rel(a, y, 0);
      rel(cat({w1(x, 1), w1(a, 1)}), cat({w1(a, -1), w1(x, 1), w1(c, k)}),
          "x a = a^-1 x " + pow_text('c', k));
      rel(cat({w1(x, 1), w1(b, 1)}), cat({w1(b, -1), w1(x, 1), w1(c, -k)}),
          "x b = b^-1 x " + pow_text('c', -k));
      rel(cat({w1(y, 1), w1(b, 1)}), cat({w1(b, -1), w1(y, 1), w1(c, -k)}),
          "y b = b^-1 y " + pow_text('c', -k));
      rel(cat({w1(y, 1), w1(c, 1)}), cat({w1(c, -1), w1(y, 1)}),
          "y c = c^-1 y");
      rel(cat({w1(x, 1), w1(y, 1)}),
          cat({w1(a, -1), w1(b, -1), w1(y, 1), w1(x, 1), w1(c, -k - 1)}),
          "x y = a^-1 b^-1 y x " + pow_text('c', -k - 1));
      rel(w1(x, 2), w1(c, 1), "x^2 = c");
      rel(w1(y, 2), w1(a, 1), "y^2 = a");
      break;

    case FamilyId::QuarterTwist:
      pres.generators = {a, b, c, x};
      comm_rel(b, a, k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      comm_rel(c, x, 0);
      rel(cat({w1(x, 1), w1(a, 1)}), cat({w1(b, 1), w1(x, 1)}), "x a = b x");
      rel(cat({w1(x, 1), w1(b, 1)}), cat({w1(a, -1), w1(x, 1)}),
          "x b = a^-1 x");
      rel(w1(x, 4), w1(c, P.p), "x^4 = " + pow_text('c', P.p));
      break;

    case FamilyId::ThirdTwist:
      pres.generators = {a, b, c, x};
      comm_rel(b, a, k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      comm_rel(c, x, 0);
      rel(cat({w1(x, 1), w1(a, 1)}), cat({w1(b, 1), w1(x, 1), w1(c, P.k1)}),
          P.k1 == 0 ? std::string("x a = b x")
                    : "x a = b x " + pow_text('c', P.k1));
      rel(cat({w1(x, 1), w1(b, 1)}), cat({w1(a, -1), w1(b, -1), w1(x, 1)}),
          "x b = a^-1 b^-1 x");
      rel(w1(x, 3), w1(c, P.k2), "x^3 = " + pow_text('c', P.k2));
      break;

    case FamilyId::SixthTwist:
      pres.generators = {a, b, c, x};
      comm_rel(b, a, k);
      comm_rel(c, a, 0);
      comm_rel(c, b, 0);
      comm_rel(c, x, 0);
      rel(cat({w1(x, 1), w1(a, 1)}), cat({w1(a, 1), w1(b, 1), w1(x, 1)}),
          "x a = a b x");
      rel(cat({w1(x, 1), w1(b, 1)}), cat({w1(a, -1), w1(x, 1)}),
          "x b = a^-1 x");
      rel(w1(x, 6), w1(c, P.k1), "x^6 = " + pow_text('c', P.k1));
      break;
  }

  return pres;
}

HeisIsom evaluate_word(const Word& w, const std::map<Gen, HeisIsom>& images) {
  if (images.empty()) {
    throw std::invalid_argument("empty generator assignment");
  }
  HeisIsom acc = HeisIsom::identity(images.begin()->second.d());
  for (const WordTerm& t : w) {
    const auto it = images.find(t.gen);
    if (it == images.end()) {
      throw std::invalid_argument(std::string("no image assigned to generator '") +
                                  gen_letter(t.gen) + "'");
    }
    acc = acc * power(it->second, t.exp);
  }
  return acc;
}

std::vector<RelatorResidual> check_relations(
    const Presentation& pres, const std::map<Gen, HeisIsom>& images) {
  std::vector<RelatorResidual> out;
  out.reserve(pres.relators.size());
  for (size_t i = 0; i < pres.relators.size(); ++i) {
    out.push_back(
        {pres.relator_names[i], evaluate_word(pres.relators[i], images)});
  }
  return out;
}

std::string relators_to_text(const std::vector<Word>& relators) {
  std::string out;
  for (const Word& w : relators) {
    std::string line;
    for (const WordTerm& t : w) {
      char letter = gen_letter(t.gen);
      if (t.exp < 0) letter = static_cast<char>(std::toupper(letter));
      for (long i = 0; i < (t.exp < 0 ? -t.exp : t.exp); ++i) {
        if (!line.empty()) line += ' ';
        line += letter;
      }
    }
    if (line.empty()) line = "1";
    out += line + "\n";
  }
  return out;
}

std::vector<Word> relators_from_text(const std::string& text) {
  std::vector<Word> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Word w;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (tok == "1") continue;
      if (tok.size() != 1) {
        throw std::invalid_argument("bad relator token '" + tok + "'");
      }
      const char ch = tok[0];
      const char lower = static_cast<char>(std::tolower(ch));
      Gen g;
      switch (lower) {
        case 'a': g = Gen::A; break;
        case 'b': g = Gen::B; break;
        case 'c': g = Gen::C; break;
        case 'x': g = Gen::Alpha; break;
        case 'y': g = Gen::Beta; break;
        default:
          throw std::invalid_argument("bad relator token '" + tok + "'");
      }
      w.push_back({g, std::isupper(static_cast<unsigned char>(ch)) ? -1L : 1L});
    }
    out.push_back(reduce(w));
  }
  return out;
}

}  // namespace heiscusp
