#include "heiscusp/ring.hpp"

#include <string>
#include <utility>

namespace heiscusp {

bool is_squarefree(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

SquarefreeD::SquarefreeD(long d) : d_(d) {
  if (!is_squarefree(d)) {
    throw std::invalid_argument("d must be a squarefree integer >= 1, got " +
                                std::to_string(d));
  }
}

void require_same_d(SquarefreeD x, SquarefreeD y) {
  if (!(x == y)) {
    throw std::invalid_argument(
        "mixed fields: d = " + std::to_string(x.value()) + " vs d = " +
        std::to_string(y.value()));
  }
}

ImagQuad operator+(const ImagQuad& x, const ImagQuad& y) {
  require_same_d(x.d(), y.d());
  return {x.d(), x.a() + y.a(), x.b() + y.b()};
}

ImagQuad operator-(const ImagQuad& x, const ImagQuad& y) {
  require_same_d(x.d(), y.d());
  return {x.d(), x.a() - y.a(), x.b() - y.b()};
}

ImagQuad operator-(const ImagQuad& x) { return {x.d(), -x.a(), -x.b()}; }

ImagQuad operator*(const ImagQuad& x, const ImagQuad& y) {
  require_same_d(x.d(), y.d());
  // (a1 + b1 w)(a2 + b2 w) with w = i*sqrt(d), w^2 = -d.
  const Rat d(x.d().value());
  return {x.d(), x.a() * y.a() - d * x.b() * y.b(),
          x.a() * y.b() + x.b() * y.a()};
}

ImagQuad operator*(const Rat& s, const ImagQuad& x) {
  return {x.d(), s * x.a(), s * x.b()};
}

ImagQuad operator/(const ImagQuad& x, const ImagQuad& y) {
  require_same_d(x.d(), y.d());
  const Rat n = norm(y);
  if (n == 0) throw std::domain_error("division by zero in E_d");
  // x / y = x * conj(y) / norm(y).
  const ImagQuad p = x * conj(y);
  return {x.d(), p.a() / n, p.b() / n};
}

ImagQuad conj(const ImagQuad& x) { return {x.d(), x.a(), -x.b()}; }

Rat norm(const ImagQuad& x) {
  return x.a() * x.a() + Rat(x.d().value()) * x.b() * x.b();
}

RealQuad im_part(const ImagQuad& x) {
  return RealQuad::sqrt_d_times(x.d(), x.b());
}

bool in_ring_of_integers(const ImagQuad& x) {
  if (x.d().mod4() == 3) {
    // Z[tau] with tau = (1 + i*sqrt(d))/2: x = m + n*tau needs n = 2b and
    // m = a - b integral.
    return is_integer(2 * x.b()) && is_integer(x.a() - x.b());
  }
  return is_integer(x.a()) && is_integer(x.b());
}

std::optional<int> multiplicative_order(const ImagQuad& x, int bound) {
  ImagQuad p = x;
  for (int n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p = p * x;
  }
  return std::nullopt;
}

RealQuad::RealQuad(SquarefreeD d, Rat p, Rat q)
    : d_(d), p_(std::move(p)), q_(std::move(q)) {
  if (d_.value() == 1) {
    p_ += q_;
    q_ = 0;
  }
}

RealQuad operator+(const RealQuad& s, const RealQuad& t) {
  require_same_d(s.d(), t.d());
  return {s.d(), s.p() + t.p(), s.q() + t.q()};
}

RealQuad operator-(const RealQuad& s, const RealQuad& t) {
  require_same_d(s.d(), t.d());
  return {s.d(), s.p() - t.p(), s.q() - t.q()};
}

RealQuad operator-(const RealQuad& s) { return {s.d(), -s.p(), -s.q()}; }

RealQuad operator*(const Rat& r, const RealQuad& t) {
  return {t.d(), r * t.p(), r * t.q()};
}

std::optional<ImagQuad> try_times_i(const RealQuad& t) {
  if (t.d().value() == 1) {
    // i * p = p * i*sqrt(1); the q part is already folded into p.
    return ImagQuad(t.d(), Rat(0), t.p());
  }
  if (t.p() != 0) return std::nullopt;
  // i * q*sqrt(d) = q * (i*sqrt(d)).
  return ImagQuad(t.d(), Rat(0), t.q());
}

}  // namespace heiscusp
