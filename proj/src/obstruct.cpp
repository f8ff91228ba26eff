#include "heiscusp/obstruct.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "heiscusp/holonomy.hpp"
#include "heiscusp/textio.hpp"

namespace heiscusp {

bool AllowedD::contains(long d) const {
  if (all) return is_squarefree(d);
  return std::find(only.begin(), only.end(), d) != only.end();
}

std::string AllowedD::to_text() const {
  if (all) return "all squarefree d >= 1";
  std::string out = "{";
  for (size_t i = 0; i < only.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(only[i]);
  }
  return out + "}";
}

namespace {

// Coefficients (p, q) of the cyclotomic polynomial X^2 + p X + q of order n.
std::pair<Rat, Rat> quadratic_cyclotomic(int n) {
  switch (n) {
    case 3: return {Rat(1), Rat(1)};
    case 4: return {Rat(0), Rat(1)};
    case 6: return {Rat(-1), Rat(1)};
  }
  throw std::logic_error("not a quadratic cyclotomic order");
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  const Int num = numerator(r), den = denominator(r);
  const Int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn == num && sd * sd == den) return Rat(sn, sd);
  return std::nullopt;
}

// Roots of X^2 + p X + q in E_d, solved exactly: either a rational root
// (discriminant a rational square) or a = -p/2 with b^2 = (q - p^2/4)/d a
// rational square.
std::vector<ImagQuad> quadratic_roots_in_Ed(const Rat& p, const Rat& q,
                                            SquarefreeD d) {
  std::vector<ImagQuad> roots;
  const Rat disc = p * p - 4 * q;
  if (const auto s = rational_sqrt(disc)) {
    roots.emplace_back(d, (-p + *s) / 2);
    if (*s != 0) roots.emplace_back(d, (-p - *s) / 2);
    return roots;
  }
  const Rat b2 = (q - p * p / 4) / Rat(d.value());
  if (const auto b = rational_sqrt(b2)) {
    if (*b != 0) {
      roots.emplace_back(d, -p / 2, *b);
      roots.emplace_back(d, -p / 2, -*b);
    }
  }
  return roots;
}

long squarefree_kernel(Int n) {
  if (n < 0) n = -n;
  long kernel = 1;
  for (Int f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e % 2 == 1) kernel *= static_cast<long>(f);
  }
  return kernel * static_cast<long>(n);
}

}  // namespace

RootOfUnity primitive_root_in_Ed(int n, SquarefreeD d) {
  if (n == 1) return {1, ImagQuad::one(d)};
  if (n == 2) return {2, -ImagQuad::one(d)};
  if (n != 3 && n != 4 && n != 6) {
    throw std::invalid_argument("supported rotation orders are 1, 2, 3, 4, 6");
  }
  const auto [p, q] = quadratic_cyclotomic(n);
  for (const ImagQuad& r : quadratic_roots_in_Ed(p, q, d)) {
    if ((r * r + p * r + ImagQuad(d, q)).is_zero() &&
        multiplicative_order(r, n) == n) {
      return {n, r};
    }
  }
  return {n, std::nullopt};
}

bool zeta_in_Ed(int n, SquarefreeD d) {
  return primitive_root_in_Ed(n, d).value.has_value();
}

bool cubic_extension_obstruction(int n, SquarefreeD d) {
  if (n <= 2) return false;
  // The eigenvalue list {1, 1, u} makes the characteristic polynomial
  // (X-1)^2 (X-u); over E_d this puts u in E_d, so a missing root of unity
  // is a genuine obstruction.  Conjugate roots come and go together since
  // E_d is closed under conjugation.
  return !zeta_in_Ed(n, d);
}

int holomorphic_rotation_order(FamilyId f) {
  switch (f) {
    case FamilyId::NilTorus: return 1;
    case FamilyId::VerticalHalfTwist: return 2;
    case FamilyId::HorizontalHalfTwist: return 2;
    case FamilyId::DoubleHalfTwist: return 2;
    case FamilyId::QuarterTwist: return 4;
    case FamilyId::ThirdTwist: return 3;
    case FamilyId::SixthTwist: return 6;
  }
  throw std::logic_error("unknown family");
}

AllowedD allowed_d(FamilyId f) {
  const int n = holomorphic_rotation_order(f);
  if (n <= 2) return {true, {}};
  // Solve for the d whose E_d contains a primitive n-th root: with
  // X^2 + p X + q the cyclotomic, the root has b^2 = (q - p^2/4)/d, which
  // is a rational square for exactly one squarefree d.
  const auto [p, q] = quadratic_cyclotomic(n);
  const Rat c = q - p * p / 4;
  const long d = squarefree_kernel(numerator(c) * denominator(c));
  if (!zeta_in_Ed(n, SquarefreeD(d))) {
    throw std::logic_error("allowed_d is inconsistent with the root search");
  }
  return {false, {d}};
}

bool AntiholWitness::all_checked() const {
  for (const WitnessStep& s : steps) {
    if (!s.checked) return false;
  }
  return true;
}

namespace {

Rat small_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  return Rat(num(rng), den(rng));
}

// Rational point on a^2 + d b^2 = 1 from the line parametrization; s = 0
// gives 1, any other s a unit with nonzero imaginary part.
ImagQuad rational_unit(SquarefreeD d, const Rat& s) {
  const Rat ds2 = Rat(d.value()) * s * s;
  return {d, (1 - ds2) / (1 + ds2), 2 * s / (1 + ds2)};
}

AntiholWitness holomorphic_obstructed(FamilyId f) {
  AntiholWitness w{f, true, {}};
  std::mt19937 rng(20240811);
  const Gen sq_gen = f == FamilyId::HorizontalHalfTwist ? Gen::Alpha : Gen::Beta;
  const char* sq_name = f == FamilyId::HorizontalHalfTwist ? "x" : "y";

  // The presentation demands g^2 = a with a a horizontal translation, and
  // g c = c^-1 g with c a nontrivial vertical translation.
  const RepAssignment rep =
      standard_rep(f, FamilyParams{.k = 2}, SquarefreeD(1));
  const HeisIsom& a_img = rep.images.at(Gen::A);
  const HeisIsom& c_img = rep.images.at(Gen::C);
  const HeisIsom& g_img = rep.images.at(sq_gen);

  bool a_horizontal = classify(a_img) == IsomClass::HorizontalTranslation &&
                      classify(c_img) == IsomClass::VerticalTranslation;
  w.steps.push_back(
      {std::string("in the holonomy, a is a horizontal and c a nontrivial "
                   "vertical translation (checked at d = 1, k = 2)"),
       a_horizontal});

  bool square_rotation = true;
  bool minus_one_square = true;
  bool verticals_central = true;
  bool sigma_inverts = true;
  for (int i = 0; i < 50; ++i) {
    for (long dv : {1L, 2L, 3L, 5L, 7L}) {
      const SquarefreeD d(dv);
      const ImagQuad z(d, small_rat(rng), small_rat(rng));
      const RealQuad t(d, small_rat(rng), small_rat(rng));
      Rat s = small_rat(rng);
      if (s == 0) s = 1;
      const ImagQuad u = rational_unit(d, s);

      // A holomorphic square has rotational part u^2; u^2 != 1 can never
      // produce the translation a.
      const HeisIsom g(z, t, u);
      if (!(u * u).is_one() && (g * g).u() == ImagQuad::one(d)) {
        square_rotation = false;
      }
      // u = -1 squares onto the vertical axis: (z,t,-1)^2 = (0,2t,1).
      const HeisIsom h(z, t, -ImagQuad::one(d));
      const HeisIsom expected = HeisIsom::translation(
          ImagQuad::zero(d), Rat(2) * t);
      if (!(h * h == expected)) minus_one_square = false;
      // u = 1 (and in fact every holomorphic element) centralizes the
      // verticals, so it cannot invert c.
      const RealQuad s2(d, small_rat(rng), small_rat(rng));
      const HeisIsom v = HeisIsom::translation(ImagQuad::zero(d), s2);
      if (!(g * v * inverse(g) == v)) verticals_central = false;
      // Antiholomorphic elements do invert verticals.
      const HeisIsom gs(z, t, u, true);
      if (!(gs * v * inverse(gs) == inverse(v))) sigma_inverts = false;
    }
  }
  w.steps.push_back(
      {std::string("a holomorphic candidate for ") + sq_name +
           " needs rotational part with u^2 = 1, else its square is no "
           "translation (sampled exactly)",
       square_rotation});
  w.steps.push_back(
      {"the u = -1 branch squares to a vertical translation (0, 2t, 1), "
       "never to the horizontal a (sampled exactly)",
       minus_one_square});
  w.steps.push_back(
      {std::string("the u = 1 branch fails ") + sq_name + " c = c^-1 " +
           sq_name + ": holomorphic elements centralize vertical "
           "translations (sampled exactly), and c != c^-1",
       verticals_central});
  w.steps.push_back(
      {"antiholomorphic elements conjugate (0, s, 1) to (0, -s, 1), so the "
       "relation is realizable with a sigma-element (sampled exactly)",
       sigma_inverts});

  const HolonomyCert cert = verify_holonomy(rep);
  w.steps.push_back(
      {std::string("the standard holonomy satisfies all relations with ") +
           sq_name + " antiholomorphic (checked at d = 1, k = 2)",
       cert.relations_ok && g_img.antiholomorphic()});
  return w;
}

AntiholWitness holomorphic_witness(FamilyId f) {
  AntiholWitness w{f, false, {}};
  FamilyParams P;
  long dv = 1;
  switch (f) {
    case FamilyId::NilTorus: P.k = 1; break;
    case FamilyId::VerticalHalfTwist: P.k = 2; break;
    case FamilyId::QuarterTwist: P.k = 2; P.p = 1; break;
    case FamilyId::ThirdTwist: P.k = 1; P.k1 = 1; P.k2 = 1; dv = 3; break;
    case FamilyId::SixthTwist: P.k = 2; P.k1 = 5; dv = 3; break;
    default: throw std::logic_error("family requires antiholomorphic elements");
  }
  const RepAssignment rep = standard_rep(f, P, SquarefreeD(dv));
  bool all_holomorphic = true;
  for (const auto& [g, img] : rep.images) {
    if (img.antiholomorphic()) all_holomorphic = false;
  }
  const HolonomyCert cert = verify_holonomy(rep);
  w.steps.push_back({"the standard holonomy at " + params_text(f, P) +
                         ", d = " + std::to_string(dv) +
                         " uses holomorphic generator images only",
                     all_holomorphic});
  w.steps.push_back(
      {"that holonomy satisfies every defining relation", cert.relations_ok});
  return w;
}

}  // namespace

AntiholWitness antihol_required(FamilyId f) {
  if (f == FamilyId::HorizontalHalfTwist || f == FamilyId::DoubleHalfTwist) {
    return holomorphic_obstructed(f);
  }
  return holomorphic_witness(f);
}

}  // namespace heiscusp
