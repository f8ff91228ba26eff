#pragma once

#include "heiscusp/heis.hpp"
#include "heiscusp/ring.hpp"

#include <random>

// Hand-rolled exact samplers.  Everything stays rational: unit-modulus
// rotational parts come from the parametrization
//   u(s) = ((1 - d s^2) + 2 s i sqrt(d)) / (1 + d s^2),
// which hits norm 1 for every rational s.
namespace testgen {

using Rng = std::mt19937_64;

inline heiscusp::Rat small_rat(Rng& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  return heiscusp::Rat(num(rng), den(rng));
}

inline heiscusp::Rat nonzero_rat(Rng& rng) {
  for (;;) {
    heiscusp::Rat r = small_rat(rng);
    if (r != 0) return r;
  }
}

inline heiscusp::ImagQuad random_imag(Rng& rng, heiscusp::SquarefreeD d) {
  return {d, small_rat(rng), small_rat(rng)};
}

inline heiscusp::ImagQuad random_unit(Rng& rng, heiscusp::SquarefreeD d) {
  const heiscusp::Rat s = small_rat(rng);
  const heiscusp::Rat ds2 = heiscusp::Rat(d.value()) * s * s;
  const heiscusp::Rat den = 1 + ds2;
  return {d, (1 - ds2) / den, (2 * s) / den};
}

inline heiscusp::RealQuad random_real(Rng& rng, heiscusp::SquarefreeD d) {
  return {d, small_rat(rng), small_rat(rng)};
}

// t with i*t in E_d, so the element has a matrix lift.
inline heiscusp::RealQuad random_liftable_t(Rng& rng, heiscusp::SquarefreeD d) {
  if (d.value() == 1) return {d, small_rat(rng)};
  return heiscusp::RealQuad::sqrt_d_times(d, small_rat(rng));
}

inline heiscusp::HeisIsom random_holomorphic(Rng& rng,
                                             heiscusp::SquarefreeD d) {
  return {random_imag(rng, d), random_real(rng, d), random_unit(rng, d)};
}

inline heiscusp::HeisIsom random_antiholomorphic(Rng& rng,
                                                 heiscusp::SquarefreeD d) {
  return {random_imag(rng, d), random_real(rng, d), random_unit(rng, d), true};
}

inline heiscusp::HeisIsom random_heis(Rng& rng, heiscusp::SquarefreeD d) {
  std::bernoulli_distribution flip(0.5);
  return {random_imag(rng, d), random_real(rng, d), random_unit(rng, d),
          flip(rng)};
}

// Holomorphic with a matrix lift over E_d.
inline heiscusp::HeisIsom random_liftable(Rng& rng, heiscusp::SquarefreeD d) {
  return {random_imag(rng, d), random_liftable_t(rng, d), random_unit(rng, d)};
}

inline heiscusp::SquarefreeD random_d(Rng& rng) {
  static const long pool[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15};
  std::uniform_int_distribution<int> pick(0, 9);
  return heiscusp::SquarefreeD(pool[pick(rng)]);
}

}  // namespace testgen
