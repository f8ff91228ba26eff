#include "heiscusp/heis.hpp"

#include <stdexcept>
#include <utility>

namespace heiscusp {

const char* to_cstring(IsomClass c) {
  switch (c) {
    case IsomClass::Identity: return "identity";
    case IsomClass::VerticalTranslation: return "vertical-translation";
    case IsomClass::HorizontalTranslation: return "horizontal-translation";
    case IsomClass::Elliptic: return "elliptic";
    case IsomClass::ElliptoParabolic: return "ellipto-parabolic";
  }
  return "?";
}

HeisIsom::HeisIsom(ImagQuad z, RealQuad t, ImagQuad u, bool antiholomorphic)
    : z_(std::move(z)), t_(std::move(t)), u_(std::move(u)),
      antiholomorphic_(antiholomorphic) {
  require_same_d(z_.d(), t_.d());
  require_same_d(z_.d(), u_.d());
  if (norm(u_) != 1) {
    throw std::invalid_argument("rotational part must have |u| = 1");
  }
}

HeisIsom HeisIsom::identity(SquarefreeD d) {
  return {ImagQuad::zero(d), RealQuad::zero(d), ImagQuad::one(d)};
}

HeisIsom HeisIsom::translation(ImagQuad z, RealQuad t) {
  const SquarefreeD d = z.d();
  return {std::move(z), std::move(t), ImagQuad::one(d)};
}

HeisIsom HeisIsom::rotation(ImagQuad u) {
  const SquarefreeD d = u.d();
  return {ImagQuad::zero(d), RealQuad::zero(d), std::move(u)};
}

HeisIsom HeisIsom::reflection(SquarefreeD d) {
  return {ImagQuad::zero(d), RealQuad::zero(d), ImagQuad::one(d), true};
}

HeisIsom HeisIsom::coordinate_conjugate() const {
  return {conj(z_), -t_, conj(u_), antiholomorphic_};
}

bool HeisIsom::is_identity() const {
  return !antiholomorphic_ && z_.is_zero() && t_.is_zero() && u_.is_one();
}

HeisIsom compose(const HeisIsom& g, const HeisIsom& h) {
  require_same_d(g.d(), h.d());
  // Move g's sigma (if any) across h before multiplying the (z,t,u) parts.
  const HeisIsom hh = g.antiholomorphic() ? h.coordinate_conjugate() : h;
  ImagQuad z = g.u() * hh.z() + g.z();
  RealQuad t = g.t() + hh.t() + Rat(2) * im_part(conj(g.u()) * g.z() * conj(hh.z()));
  ImagQuad u = g.u() * hh.u();
  return {std::move(z), std::move(t), std::move(u),
          g.antiholomorphic() != h.antiholomorphic()};
}

HeisIsom inverse(const HeisIsom& g) {
  if (!g.antiholomorphic()) {
    // (z,t,u)^{-1} = (-conj(u) z, -t, conj(u)).
    return {-(conj(g.u()) * g.z()), -g.t(), conj(g.u())};
  }
  // ((z,t,u) sigma)^{-1} = (-u conj(z), t, u) sigma.
  return {-(g.u() * conj(g.z())), g.t(), g.u(), true};
}

HeisIsom power(const HeisIsom& g, long n) {
  if (n < 0) return power(inverse(g), -n);
  HeisIsom acc = HeisIsom::identity(g.d());
  for (long i = 0; i < n; ++i) acc = acc * g;
  return acc;
}

HeisIsom antiholomorphic_square(const HeisIsom& g) {
  if (!g.antiholomorphic()) {
    throw std::invalid_argument(
        "antiholomorphic_square requires an antiholomorphic element");
  }
  ImagQuad z = g.u() * conj(g.z()) + g.z();
  RealQuad t = Rat(-2) * im_part(g.u() * conj(g.z()) * conj(g.z()));
  return {std::move(z), std::move(t), ImagQuad::one(g.d())};
}

HeisIsom dilate_conjugate(const HeisIsom& g, const Rat& r) {
  if (g.antiholomorphic()) {
    throw std::invalid_argument("dilate_conjugate requires a holomorphic element");
  }
  if (r <= 0) throw std::invalid_argument("dilation factor must be positive");
  return {r * g.z(), (r * r) * g.t(), g.u()};
}

namespace {

// (-|z|^2 + i t)/2, the top-right matrix entry; empty when i t is not in E_d.
std::optional<ImagQuad> top_right_entry(const HeisIsom& g) {
  const std::optional<ImagQuad> it = try_times_i(g.t());
  if (!it) return std::nullopt;
  return Rat(1, 2) * (ImagQuad(g.d(), -norm(g.z())) + *it);
}

}  // namespace

bool is_integral(const HeisIsom& g) {
  if (g.antiholomorphic()) {
    throw std::invalid_argument(
        "is_integral applies to holomorphic elements; test the holomorphic "
        "part of a sigma-class element");
  }
  const std::optional<ImagQuad> tr = top_right_entry(g);
  if (!tr) return false;
  return in_ring_of_integers(g.z()) && in_ring_of_integers(*tr) &&
         in_ring_of_integers(g.u());
}

IsomClass classify(const HeisIsom& g) {
  if (g.antiholomorphic()) {
    throw std::invalid_argument("classify requires a holomorphic element");
  }
  if (g.u().is_one()) {
    if (!g.z().is_zero()) return IsomClass::HorizontalTranslation;
    if (!g.t().is_zero()) return IsomClass::VerticalTranslation;
    return IsomClass::Identity;
  }
  // Center: conjugating by the translation with w = -z/(1-u) cancels the
  // z part, leaving (0, t', u).
  const ImagQuad w = -(g.z() / (ImagQuad::one(g.d()) - g.u()));
  const HeisIsom h = HeisIsom::translation(w, RealQuad::zero(g.d()));
  const HeisIsom centered = h * g * inverse(h);
  if (!centered.z().is_zero() || !(centered.u() == g.u())) {
    throw std::logic_error("centering conjugation failed");
  }
  return centered.t().is_zero() ? IsomClass::Elliptic
                                : IsomClass::ElliptoParabolic;
}

AffineMapC compose(const AffineMapC& f, const AffineMapC& g) {
  const ImagQuad gu = f.conj ? conj(g.u) : g.u;
  const ImagQuad gz = f.conj ? conj(g.z) : g.z;
  return {f.u * gu, f.u * gz + f.z, f.conj != g.conj};
}

ImagQuad apply(const AffineMapC& f, const ImagQuad& w) {
  return f.u * (f.conj ? conj(w) : w) + f.z;
}

AffineMapC pi_star(const HeisIsom& g) {
  return {g.u(), g.z(), g.antiholomorphic()};
}

namespace {

bool preserves_hermitian_form(SquarefreeD d,
                              const std::array<ImagQuad, 9>& e) {
  // H has ones on the antidiagonal: (M* H M)[i][j] = sum_k conj(e[k][i]) *
  // (H M)[k][j] with (H M)[k][j] = e[2-k][j].
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ImagQuad s = ImagQuad::zero(d);
      for (int k = 0; k < 3; ++k) {
        s = s + conj(e[3 * k + i]) * e[3 * (2 - k) + j];
      }
      const ImagQuad expected =
          (i + j == 2) ? ImagQuad::one(d) : ImagQuad::zero(d);
      if (!(s == expected)) return false;
    }
  }
  return true;
}

}  // namespace

UMat::UMat(SquarefreeD d, std::array<ImagQuad, 9> entries)
    : d_(d), e_(std::move(entries)) {
  for (const ImagQuad& x : e_) require_same_d(d_, x.d());
  if (!preserves_hermitian_form(d_, e_)) {
    throw std::invalid_argument("matrix does not preserve the Hermitian form");
  }
}

UMat UMat::identity(SquarefreeD d) {
  const ImagQuad o = ImagQuad::one(d), z = ImagQuad::zero(d);
  return {d, {o, z, z, z, o, z, z, z, o}};
}

UMat UMat::dilation(SquarefreeD d, const Rat& r) {
  if (r <= 0) throw std::invalid_argument("dilation factor must be positive");
  const ImagQuad z = ImagQuad::zero(d);
  return {d, {ImagQuad(d, r), z, z, z, ImagQuad::one(d), z, z, z,
              ImagQuad(d, 1 / r)}};
}

bool UMat::upper_triangular() const {
  return entry(1, 0).is_zero() && entry(2, 0).is_zero() &&
         entry(2, 1).is_zero();
}

UMat operator*(const UMat& m, const UMat& n) {
  require_same_d(m.d(), n.d());
  std::array<ImagQuad, 9> e{
      ImagQuad::zero(m.d()), ImagQuad::zero(m.d()), ImagQuad::zero(m.d()),
      ImagQuad::zero(m.d()), ImagQuad::zero(m.d()), ImagQuad::zero(m.d()),
      ImagQuad::zero(m.d()), ImagQuad::zero(m.d()), ImagQuad::zero(m.d())};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ImagQuad s = ImagQuad::zero(m.d());
      for (int k = 0; k < 3; ++k) s = s + m.entry(i, k) * n.entry(k, j);
      e[3 * i + j] = s;
    }
  }
  return {m.d(), std::move(e)};
}

std::optional<MatrixLift> matrix_lift(const HeisIsom& g) {
  const std::optional<ImagQuad> tr = top_right_entry(g);
  if (!tr) return std::nullopt;
  const SquarefreeD d = g.d();
  const ImagQuad zero = ImagQuad::zero(d), one = ImagQuad::one(d);
  UMat m(d, {one, -(g.u() * conj(g.z())), *tr,
             zero, g.u(), g.z(),
             zero, zero, one});
  return MatrixLift{std::move(m), g.antiholomorphic()};
}

IqPoly::IqPoly(SquarefreeD d, std::vector<ImagQuad> coeffs)
    : d_(d), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("empty polynomial");
  for (const ImagQuad& x : c_) require_same_d(d_, x.d());
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
}

IqPoly IqPoly::x_minus(const ImagQuad& r) {
  return {r.d(), {-r, ImagQuad::one(r.d())}};
}

ImagQuad IqPoly::eval(const ImagQuad& x) const {
  ImagQuad acc = ImagQuad::zero(d_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IqPoly operator*(const IqPoly& f, const IqPoly& g) {
  require_same_d(f.d(), g.d());
  std::vector<ImagQuad> c(f.c_.size() + g.c_.size() - 1,
                          ImagQuad::zero(f.d()));
  for (size_t i = 0; i < f.c_.size(); ++i) {
    for (size_t j = 0; j < g.c_.size(); ++j) {
      c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
    }
  }
  return {f.d(), std::move(c)};
}

IqPoly char_poly(const UMat& m) {
  const SquarefreeD d = m.d();
  const ImagQuad tr = m.entry(0, 0) + m.entry(1, 1) + m.entry(2, 2);
  const ImagQuad m2 =
      (m.entry(0, 0) * m.entry(1, 1) - m.entry(0, 1) * m.entry(1, 0)) +
      (m.entry(0, 0) * m.entry(2, 2) - m.entry(0, 2) * m.entry(2, 0)) +
      (m.entry(1, 1) * m.entry(2, 2) - m.entry(1, 2) * m.entry(2, 1));
  const ImagQuad det =
      m.entry(0, 0) * (m.entry(1, 1) * m.entry(2, 2) -
                       m.entry(1, 2) * m.entry(2, 1)) -
      m.entry(0, 1) * (m.entry(1, 0) * m.entry(2, 2) -
                       m.entry(1, 2) * m.entry(2, 0)) +
      m.entry(0, 2) * (m.entry(1, 0) * m.entry(2, 1) -
                       m.entry(1, 1) * m.entry(2, 0));
  return {d, {-det, m2, -tr, ImagQuad::one(d)}};
}

namespace {

// Entrywise test of M^2 + c1 M + c0 I = 0.
bool quadratic_annihilates(const UMat& m, const UMat& m2, const ImagQuad& c1,
                           const ImagQuad& c0) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ImagQuad v = m2.entry(i, j) + c1 * m.entry(i, j);
      if (i == j) v = v + c0;
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

IqPoly min_poly(const UMat& m) {
  const SquarefreeD d = m.d();
  const ImagQuad lambda = m.entry(0, 0);

  // Degree 1: M = lambda I.
  bool scalar = true;
  for (int i = 0; i < 3 && scalar; ++i) {
    for (int j = 0; j < 3 && scalar; ++j) {
      const ImagQuad expected = (i == j) ? lambda : ImagQuad::zero(d);
      if (!(m.entry(i, j) == expected)) scalar = false;
    }
  }
  if (scalar) return IqPoly::x_minus(lambda);

  // Degree 2: any annihilating X^2 + c1 X + c0 is forced entrywise, so
  // derive the only candidate and verify it.
  const UMat m2 = m * m;
  std::optional<ImagQuad> c1;
  for (int i = 0; i < 3 && !c1; ++i) {
    for (int j = 0; j < 3 && !c1; ++j) {
      if (i != j && !m.entry(i, j).is_zero()) {
        c1 = -(m2.entry(i, j) / m.entry(i, j));
      }
    }
  }
  if (!c1) {
    // Diagonal with at least two distinct values; Vieta on any such pair.
    for (int i = 0; i < 3 && !c1; ++i) {
      for (int j = i + 1; j < 3 && !c1; ++j) {
        if (!(m.entry(i, i) == m.entry(j, j))) {
          c1 = -(m.entry(i, i) + m.entry(j, j));
        }
      }
    }
  }
  if (c1) {
    const ImagQuad c0 = -(m2.entry(0, 0) + *c1 * m.entry(0, 0));
    if (quadratic_annihilates(m, m2, *c1, c0)) {
      return {d, {c0, *c1, ImagQuad::one(d)}};
    }
  }

  // Cayley-Hamilton: degree 3 is always enough.
  return char_poly(m);
}

std::array<ImagQuad, 3> eigenvalues_upper(const UMat& m) {
  if (!m.upper_triangular()) {
    throw std::domain_error("eigenvalues_upper requires an upper-triangular matrix");
  }
  return {m.entry(0, 0), m.entry(1, 1), m.entry(2, 2)};
}

}  // namespace heiscusp
