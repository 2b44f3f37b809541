#pragma once

#include <cmath>
#include <stdexcept>

#include "beamsched/units.hpp"

namespace beamsched {

// Wrap an angle to (-pi, pi].
inline double normalize_angle(double a) {
  double x = std::fmod(a + kPi, kTwoPi);
  if (x <= 0.0) x += kTwoPi;
  return x - kPi;
}

// Two-level "keyhole" sectorized pattern: constant main-lobe gain g_max
// inside the beam width, constant side-lobe gain g_min outside, normalized
// to unit total radiated power:
//   beam_width * g_max + (2*pi - beam_width) * g_min = 1.
struct AntennaPattern {
  double beam_width = kTwoPi;  // radians, in (0, 2*pi)
  double msr = 1.0;            // main-to-side-lobe ratio, linear, >= 1
  double g_max = 1.0 / kTwoPi;
  double g_min = 1.0 / kTwoPi;
};

inline AntennaPattern derive_antenna_gains(double beam_width, double msr) {
  if (!(beam_width > 0.0) || !(beam_width < kTwoPi))
    throw std::invalid_argument("antenna beam width must lie in (0, 2*pi)");
  if (!(msr >= 1.0))
    throw std::invalid_argument("main-to-side-lobe ratio must be >= 1");
  const double g_min = 1.0 / ((msr - 1.0) * beam_width + kTwoPi);
  return {beam_width, msr, msr * g_min, g_min};
}

// Boundary offsets |theta| == beam_width/2 belong to the main lobe.
inline double antenna_gain(const AntennaPattern& p, double offset) {
  const double t = normalize_angle(offset);
  return std::abs(t) <= 0.5 * p.beam_width ? p.g_max : p.g_min;
}

}  // namespace beamsched
