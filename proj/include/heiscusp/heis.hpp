#pragma once

#include <array>
#include <optional>
#include <vector>

#include "heiscusp/ring.hpp"

namespace heiscusp {

/// Conjugacy classes of horosphere-preserving holomorphic isometries:
/// unipotent translations split into horizontal (3-step) and vertical
/// (2-step) ones, nontrivial rotational part splits into elliptic and
/// ellipto-parabolic.
enum class IsomClass {
  Identity,
  VerticalTranslation,
  HorizontalTranslation,
  Elliptic,
  ElliptoParabolic,
};

const char* to_cstring(IsomClass c);

/// Isometry of the Heisenberg group Nil = C x R: a holomorphic part
/// (z, t, u) with |u| = 1, optionally followed by the antiholomorphic
/// reflection sigma : (z, t) -> (conj z, -t).
///
/// Products follow
///   (z1,t1,u1).(z2,t2,u2) = (u1 z2 + z1, t1 + t2 + 2 Im(conj(u1) z1 conj(z2)), u1 u2)
///   sigma (z,t,u) = (conj z, -t, conj u) sigma.
class HeisIsom {
 public:
  HeisIsom(ImagQuad z, RealQuad t, ImagQuad u, bool antiholomorphic = false);

  static HeisIsom identity(SquarefreeD d);
  static HeisIsom translation(ImagQuad z, RealQuad t);
  static HeisIsom rotation(ImagQuad u);
  /// The reflection sigma alone.
  static HeisIsom reflection(SquarefreeD d);

  SquarefreeD d() const { return z_.d(); }
  const ImagQuad& z() const { return z_; }
  const RealQuad& t() const { return t_; }
  const ImagQuad& u() const { return u_; }
  bool antiholomorphic() const { return antiholomorphic_; }

  /// Drops the sigma flag, keeping (z, t, u).
  HeisIsom holomorphic_part() const { return {z_, t_, u_, false}; }
  /// Coordinate conjugate (conj z, -t, conj u), the result of moving a
  /// sigma across this element.
  HeisIsom coordinate_conjugate() const;

  bool is_identity() const;

  friend bool operator==(const HeisIsom&, const HeisIsom&) = default;

 private:
  ImagQuad z_;
  RealQuad t_;
  ImagQuad u_;
  bool antiholomorphic_;
};

HeisIsom compose(const HeisIsom& g, const HeisIsom& h);
inline HeisIsom operator*(const HeisIsom& g, const HeisIsom& h) {
  return compose(g, h);
}
HeisIsom inverse(const HeisIsom& g);
HeisIsom power(const HeisIsom& g, long n);

/// Closed form for the square of an antiholomorphic isometry:
/// ((z,t,u) sigma)^2 = (u conj(z) + z, -2 Im(u conj(z)^2), 1).
/// Requires g antiholomorphic.
HeisIsom antiholomorphic_square(const HeisIsom& g);

/// Conjugation by the dilation of factor r > 0:
/// D_r (z,t,u) D_r^{-1} = (r z, r^2 t, u).  Requires g holomorphic.
HeisIsom dilate_conjugate(const HeisIsom& g, const Rat& r);

/// Whether the matrix of the holomorphic isometry g has all entries in the
/// ring of integers of E_d; equivalently z, u and (-|z|^2 + i t)/2 all lie
/// in Z[tau].  False when i t is not representable in E_d at all.
bool is_integral(const HeisIsom& g);

/// Conjugacy class of a holomorphic g, decided by exact coordinate rules;
/// elements with u != 1 are centered by conjugating with the horizontal
/// translation by -z/(1-u) first.
IsomClass classify(const HeisIsom& g);

/// Affine map of C: w -> u*w + z, or w -> u*conj(w) + z when conj is set.
struct AffineMapC {
  ImagQuad u;
  ImagQuad z;
  bool conj = false;

  bool is_identity() const { return u.is_one() && z.is_zero() && !conj; }
  bool is_translation() const { return u.is_one() && !conj; }

  friend bool operator==(const AffineMapC&, const AffineMapC&) = default;
};

AffineMapC compose(const AffineMapC& f, const AffineMapC& g);
ImagQuad apply(const AffineMapC& f, const ImagQuad& w);

/// Induced action on the base C of Nil = C x R.  The kernel over all of
/// Isom(Nil) is exactly the vertical translations (0, t, 1).
AffineMapC pi_star(const HeisIsom& g);

/// 3x3 matrix over E_d preserving the Hermitian form
///   H = [0 0 1; 0 1 0; 1 0 0],
/// i.e. conj-transpose(M) * H * M = H; checked on construction.
class UMat {
 public:
  UMat(SquarefreeD d, std::array<ImagQuad, 9> entries);

  static UMat identity(SquarefreeD d);
  /// diag(r, 1, 1/r) for rational r > 0, the standard dilation lift.
  static UMat dilation(SquarefreeD d, const Rat& r);

  SquarefreeD d() const { return d_; }
  const ImagQuad& entry(int row, int col) const { return e_[3 * row + col]; }

  bool upper_triangular() const;

  friend bool operator==(const UMat&, const UMat&) = default;

 private:
  SquarefreeD d_;
  std::array<ImagQuad, 9> e_;
};

UMat operator*(const UMat& m, const UMat& n);

struct MatrixLift {
  UMat mat;
  bool antiholomorphic;
};

/// Matrix of the holomorphic part,
///   [1, -u conj(z), (-|z|^2 + i t)/2; 0, u, z; 0, 0, 1],
/// together with the sigma flag.  Empty when i t falls outside E_d (t has a
/// nonzero rational part and d != 1).
std::optional<MatrixLift> matrix_lift(const HeisIsom& g);

/// Monic polynomial over E_d, coefficients stored from degree 0 upward.
class IqPoly {
 public:
  IqPoly(SquarefreeD d, std::vector<ImagQuad> coeffs);

  /// X - r.
  static IqPoly x_minus(const ImagQuad& r);

  SquarefreeD d() const { return d_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const ImagQuad& coeff(int i) const { return c_.at(i); }

  ImagQuad eval(const ImagQuad& x) const;

  friend IqPoly operator*(const IqPoly& f, const IqPoly& g);
  friend bool operator==(const IqPoly&, const IqPoly&) = default;

 private:
  SquarefreeD d_;
  std::vector<ImagQuad> c_;
};

/// Characteristic polynomial X^3 - tr(M) X^2 + m2(M) X - det(M), where m2 is
/// the sum of the principal 2x2 minors.
IqPoly char_poly(const UMat& m);

/// Minimal polynomial, monic, found by testing degrees 1 and 2 exactly and
/// falling back to the characteristic polynomial.
IqPoly min_poly(const UMat& m);

/// Diagonal entries of an upper-triangular matrix; these are its
/// eigenvalues.  Throws std::domain_error otherwise.
std::array<ImagQuad, 3> eigenvalues_upper(const UMat& m);

}  // namespace heiscusp
