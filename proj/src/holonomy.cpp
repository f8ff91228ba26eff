#include "heiscusp/holonomy.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "heiscusp/obstruct.hpp"
#include "heiscusp/textio.hpp"

namespace heiscusp {

namespace {

HeisIsom translation_z(SquarefreeD d, ImagQuad z) {
  return HeisIsom::translation(std::move(z), RealQuad::zero(d));
}

HeisIsom translation_t(SquarefreeD d, RealQuad t) {
  return HeisIsom::translation(ImagQuad::zero(d), std::move(t));
}

}  // namespace

RepAssignment standard_rep(FamilyId f, const FamilyParams& P, SquarefreeD d) {
  if (const auto why = params_violation(f, P)) {
    throw std::invalid_argument("invalid parameters for family " +
                                std::string(family_name(f)) + " (" +
                                params_text(f, P) + "): " + *why);
  }
  const AllowedD allowed = allowed_d(f);
  if (!allowed.contains(d.value())) {
    const int n = holomorphic_rotation_order(f);
    throw std::domain_error(
        std::string(family_name(f)) + " admits integral holonomy only for " +
        "d in " + allowed.to_text() + ": a primitive root of unity of order " +
        std::to_string(n) + " lies in Q(i*sqrt(d)) for no other d; got d = " +
        std::to_string(d.value()));
  }

  const Rat k(P.k);
  const ImagQuad isd = ImagQuad::i_sqrt_d(d);
  const ImagQuad one = ImagQuad::one(d);
  auto sd = [&d](const Rat& q) { return RealQuad::sqrt_d_times(d, q); };

  RepAssignment rep{f, P, d, {}};
  auto img = [&rep](Gen g, HeisIsom h) { rep.images.emplace(g, std::move(h)); };

  switch (f) {
    case FamilyId::NilTorus:
      img(Gen::A, translation_z(d, ImagQuad(d, 2 * k)));
      img(Gen::B, translation_z(d, (2 * k) * isd));
      img(Gen::C, translation_t(d, sd(16 * k)));
      break;

    case FamilyId::VerticalHalfTwist:
      img(Gen::A, translation_z(d, ImagQuad(d, 2 * k)));
      img(Gen::B, translation_z(d, (2 * k) * isd));
      img(Gen::C, translation_t(d, sd(16 * k)));
      img(Gen::Alpha, HeisIsom(ImagQuad::zero(d), sd(8 * k), -one));
      break;

    case FamilyId::HorizontalHalfTwist:
      img(Gen::A, translation_z(d, ImagQuad(d, 2 * k)));
      img(Gen::B, translation_z(d, (2 * k) * isd));
      img(Gen::C, translation_t(d, sd(8 * k)));
      img(Gen::Alpha,
          HeisIsom(ImagQuad(d, k), RealQuad::zero(d), one, true));
      break;

    case FamilyId::DoubleHalfTwist:
      img(Gen::A, translation_z(d, ImagQuad(d, 2 * k)));
      img(Gen::B, translation_z(d, (2 * k) * isd));
      img(Gen::C, translation_t(d, sd(8 * k)));
      img(Gen::Alpha, HeisIsom(ImagQuad(d, -k, -k), sd(4 * k), -one));
      img(Gen::Beta,
          HeisIsom(ImagQuad(d, k), RealQuad::zero(d), one, true));
      break;

    case FamilyId::QuarterTwist:
      // d = 1; i*sqrt(1) is the imaginary unit.
      img(Gen::A, translation_z(d, ImagQuad(d, 2 * k)));
      img(Gen::B, translation_z(d, (2 * k) * isd));
      img(Gen::C, translation_t(d, RealQuad(d, 16 * k)));
      img(Gen::Alpha,
          HeisIsom(ImagQuad::zero(d), RealQuad(d, Rat(4 * P.p * P.k)), isd));
      break;

    case FamilyId::ThirdTwist: {
      // d = 3; the rotational part is (-1 + i*sqrt(3))/2.
      const Rat k1(P.k1), k2(P.k2);
      img(Gen::A, translation_z(d, ImagQuad(d, 24 * k)));
      img(Gen::B, translation_z(d, ImagQuad(d, -12 * k, 12 * k)));
      img(Gen::C, translation_t(d, sd(1152 * k)));
      img(Gen::Alpha,
          HeisIsom(ImagQuad(d, -6 * k - 12 * k1, 6 * k - 12 * k1),
                   sd(384 * k * k2 + 48 * k * k - 96 * k * k1 + 192 * k1 * k1),
                   ImagQuad(d, Rat(-1, 2), Rat(1, 2))));
      break;
    }

    case FamilyId::SixthTwist: {
      // d = 3; the rotational part is (1 + i*sqrt(3))/2.
      const Rat k1(P.k1);
      img(Gen::A, translation_z(d, ImagQuad(d, 12 * k)));
      img(Gen::B, translation_z(d, ImagQuad(d, -6 * k, 6 * k)));
      img(Gen::C, translation_t(d, sd(288 * k)));
      img(Gen::Alpha,
          HeisIsom(ImagQuad(d, 6 * k), sd(36 * k * k + 48 * k * k1),
                   ImagQuad(d, Rat(1, 2), Rat(1, 2))));
      break;
    }
  }

  return rep;
}

namespace {

// Order of the subgroup of U(1) x {1, sigma} generated by the rotation and
// reflection parts of the generator images; empty when it exceeds the bound
// (possible only for assignments far from any holonomy).
std::optional<long> rotation_closure_order(const RepAssignment& rep) {
  using Part = std::pair<ImagQuad, bool>;
  std::vector<Part> closure{{ImagQuad::one(rep.d), false}};
  auto insert = [&closure](const Part& p) {
    for (const Part& q : closure) {
      if (q.first == p.first && q.second == p.second) return false;
    }
    closure.push_back(p);
    return true;
  };
  for (const auto& [g, img] : rep.images) {
    insert({img.u(), img.antiholomorphic()});
  }
  constexpr size_t kBound = 64;
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = closure.size();
    for (size_t i = 0; i < n && closure.size() <= kBound; ++i) {
      for (size_t j = 0; j < n && closure.size() <= kBound; ++j) {
        // sigma u sigma = conj(u), so (u1, s1)(u2, s2) = (u1 * u2^(s1), s1 + s2).
        const ImagQuad u = closure[i].first *
                           (closure[i].second ? conj(closure[j].first)
                                              : closure[j].first);
        grew |= insert({u, closure[i].second != closure[j].second});
      }
    }
    if (closure.size() > kBound) return std::nullopt;
  }
  return static_cast<long>(closure.size());
}

}  // namespace

HolonomyCert verify_holonomy(const RepAssignment& rep) {
  HolonomyCert cert{rep.family, rep.params,  rep.d, true, true,
                    true,       true,        0,     {},    {}};

  const Presentation pres = build_presentation(rep.family, rep.params);
  cert.residuals = check_relations(pres, rep.images);
  for (const RelatorResidual& r : cert.residuals) {
    if (!r.residual.is_identity()) {
      cert.relations_ok = false;
      cert.failures.push_back("relator " + r.name + " has residual " +
                              to_text(r.residual));
    }
  }

  for (const auto& [g, img] : rep.images) {
    if (!is_integral(img.holomorphic_part())) {
      cert.integral_ok = false;
      cert.failures.push_back(std::string("image of '") + gen_letter(g) +
                              "' = " + to_text(img) +
                              " has a matrix entry outside Z[tau]");
    }
  }

  // Lattice: a, b project to independent translations of C, c spans the
  // vertical axis.
  const auto a_it = rep.images.find(Gen::A);
  const auto b_it = rep.images.find(Gen::B);
  const auto c_it = rep.images.find(Gen::C);
  if (a_it == rep.images.end() || b_it == rep.images.end() ||
      c_it == rep.images.end()) {
    cert.lattice_ok = false;
    cert.failures.push_back("assignment lacks images for a, b, c");
  } else {
    const AffineMapC pa = pi_star(a_it->second), pb = pi_star(b_it->second);
    if (!pa.is_translation() || !pb.is_translation()) {
      cert.lattice_ok = false;
      cert.failures.push_back("a or b does not project to a translation of C");
    } else if (im_part(pa.z * conj(pb.z)).is_zero()) {
      cert.lattice_ok = false;
      cert.failures.push_back(
          "the translation parts of a and b are R-linearly dependent");
    }
    if (c_it->second.antiholomorphic() ||
        classify(c_it->second) != IsomClass::VerticalTranslation) {
      cert.lattice_ok = false;
      cert.failures.push_back(
          "c is not a nontrivial vertical translation: " +
          to_text(c_it->second));
    }
  }

  cert.rotation_group_order = rotation_closure_order(rep).value_or(-1);

  // Rotational data present among the generator images themselves.
  bool any_sigma = false, any_minus_one = false, any_nontrivial = false;
  const ImagQuad minus_one = -ImagQuad::one(rep.d);
  int target_order = holomorphic_rotation_order(rep.family);
  bool order_hit = false;
  for (const auto& [g, img] : rep.images) {
    if (img.antiholomorphic()) any_sigma = true;
    if (img.u() == minus_one) any_minus_one = true;
    if (img.antiholomorphic() || !img.u().is_one()) any_nontrivial = true;
    if (!img.antiholomorphic() &&
        multiplicative_order(img.u(), 12) == std::optional<int>(target_order)) {
      order_hit = true;
    }
  }

  long expected_closure = 0;
  std::string missing;
  switch (rep.family) {
    case FamilyId::NilTorus:
      expected_closure = 1;
      if (any_nontrivial) missing = "a trivial rotational part on every generator";
      break;
    case FamilyId::VerticalHalfTwist:
      expected_closure = 2;
      if (!any_minus_one) missing = "a generator with rotational part -1";
      break;
    case FamilyId::HorizontalHalfTwist:
      expected_closure = 2;
      if (!any_sigma) missing = "an antiholomorphic generator";
      break;
    case FamilyId::DoubleHalfTwist:
      expected_closure = 4;
      if (!any_minus_one || !any_sigma) {
        missing = "both a generator with rotational part -1 and an "
                  "antiholomorphic generator";
      }
      break;
    case FamilyId::QuarterTwist:
      expected_closure = 4;
      if (!order_hit) missing = "a rotational part of multiplicative order 4";
      break;
    case FamilyId::ThirdTwist:
      expected_closure = 3;
      if (!order_hit) missing = "a rotational part of multiplicative order 3";
      break;
    case FamilyId::SixthTwist:
      expected_closure = 6;
      if (!order_hit) missing = "a rotational part of multiplicative order 6";
      break;
  }
  if (!missing.empty() || cert.rotation_group_order != expected_closure) {
    cert.rotational_ok = false;
    std::string msg = std::string(family_name(rep.family)) +
                      " holonomy needs rotation parts generating a group of "
                      "order " +
                      std::to_string(expected_closure) + "; got order " +
                      std::to_string(cert.rotation_group_order);
    if (!missing.empty()) msg += " and lacks " + missing;
    cert.failures.push_back(std::move(msg));
  }

  return cert;
}

ErratumReport erratum_family4(long k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  const SquarefreeD d(1);
  const Rat rk(k);
  const ImagQuad zero = ImagQuad::zero(d);
  const HeisIsom published(ImagQuad(d, 2 * rk, 2 * rk), RealQuad::zero(d),
                           -ImagQuad::one(d));
  const HeisIsom published_c = HeisIsom::translation(zero, RealQuad(d, 32 * rk));
  const HeisIsom corrected(ImagQuad(d, -rk, -rk), RealQuad(d, 4 * rk),
                           -ImagQuad::one(d));
  const HeisIsom corrected_c = HeisIsom::translation(zero, RealQuad(d, 8 * rk));
  const HeisIsom ps = published * published;
  const HeisIsom cs = corrected * corrected;
  return {k,
          published,
          published_c,
          ps,
          ps.is_identity(),
          ps == published_c,
          corrected,
          corrected_c,
          cs,
          cs == corrected_c};
}

}  // namespace heiscusp
