#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>

namespace heiscusp {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

bool is_squarefree(long n);

/// A squarefree integer d >= 1 selecting the imaginary quadratic field
/// Q(i*sqrt(d)).  Values of different d never mix in arithmetic.
class SquarefreeD {
 public:
  explicit SquarefreeD(long d);

  long value() const { return d_; }
  int mod4() const { return static_cast<int>(d_ % 4); }

  friend bool operator==(SquarefreeD, SquarefreeD) = default;

 private:
  long d_;
};

class RealQuad;

/// Element a + b*i*sqrt(d) of E_d = Q(i*sqrt(d)), with a, b rational.
class ImagQuad {
 public:
  ImagQuad(SquarefreeD d, Rat a, Rat b)
      : d_(d), a_(std::move(a)), b_(std::move(b)) {}
  ImagQuad(SquarefreeD d, Rat a) : ImagQuad(d, std::move(a), Rat(0)) {}

  static ImagQuad zero(SquarefreeD d) { return {d, Rat(0), Rat(0)}; }
  static ImagQuad one(SquarefreeD d) { return {d, Rat(1), Rat(0)}; }
  /// The generator i*sqrt(d) itself.
  static ImagQuad i_sqrt_d(SquarefreeD d) { return {d, Rat(0), Rat(1)}; }

  SquarefreeD d() const { return d_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  friend bool operator==(const ImagQuad&, const ImagQuad&) = default;

 private:
  SquarefreeD d_;
  Rat a_, b_;
};

ImagQuad operator+(const ImagQuad& x, const ImagQuad& y);
ImagQuad operator-(const ImagQuad& x, const ImagQuad& y);
ImagQuad operator-(const ImagQuad& x);
ImagQuad operator*(const ImagQuad& x, const ImagQuad& y);
ImagQuad operator*(const Rat& s, const ImagQuad& x);
/// Field division; throws std::domain_error on zero divisor.
ImagQuad operator/(const ImagQuad& x, const ImagQuad& y);

ImagQuad conj(const ImagQuad& x);
/// norm(a + b*i*sqrt(d)) = a^2 + d*b^2 = x * conj(x), a nonnegative rational.
Rat norm(const ImagQuad& x);
/// Imaginary part as a real value: Im(a + b*i*sqrt(d)) = b*sqrt(d).
RealQuad im_part(const ImagQuad& x);

/// Membership in the ring of integers Z[tau] of E_d, where tau = i*sqrt(d)
/// for d = 1, 2 (mod 4) and tau = (1 + i*sqrt(d))/2 for d = 3 (mod 4).
bool in_ring_of_integers(const ImagQuad& x);

/// Multiplicative order of x, if it is at most `bound`.
std::optional<int> multiplicative_order(const ImagQuad& x, int bound);

/// Element p + q*sqrt(d) of the real quadratic space Q + Q*sqrt(d); carries
/// the vertical coordinate of Heisenberg isometries.  For d = 1 the
/// representation is canonicalized to q = 0 (sqrt(1) folds into the rational
/// part), so componentwise equality is value equality for every d.
class RealQuad {
 public:
  RealQuad(SquarefreeD d, Rat p, Rat q);
  RealQuad(SquarefreeD d, Rat p) : RealQuad(d, std::move(p), Rat(0)) {}

  static RealQuad zero(SquarefreeD d) { return {d, Rat(0), Rat(0)}; }
  /// The value q*sqrt(d).
  static RealQuad sqrt_d_times(SquarefreeD d, Rat q) {
    return {d, Rat(0), std::move(q)};
  }

  SquarefreeD d() const { return d_; }
  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }

  friend bool operator==(const RealQuad&, const RealQuad&) = default;

 private:
  SquarefreeD d_;
  Rat p_, q_;
};

RealQuad operator+(const RealQuad& s, const RealQuad& t);
RealQuad operator-(const RealQuad& s, const RealQuad& t);
RealQuad operator-(const RealQuad& s);
RealQuad operator*(const Rat& r, const RealQuad& t);

/// i * (p + q*sqrt(d)) as an element of E_d, when representable: always for
/// d = 1, and exactly when p = 0 otherwise.
std::optional<ImagQuad> try_times_i(const RealQuad& t);

/// Enforces matching d between operands; throws std::invalid_argument.
void require_same_d(SquarefreeD x, SquarefreeD y);

}  // namespace heiscusp
