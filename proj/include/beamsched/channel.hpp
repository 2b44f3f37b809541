#pragma once

#include <cmath>
#include <random>
#include <span>
#include <stdexcept>

#include "beamsched/units.hpp"

namespace beamsched {

// Nakagami-m small-scale fading. mu is the shape, omega = E[h^2].
struct FadingParams {
  double mu = 1.0;
  double omega = 1.0;
};

// One amplitude draw: h = sqrt(G) with G ~ Gamma(shape mu, scale omega/mu),
// which reproduces the Nakagami moments E[h^2] = omega, Var(h^2) = omega^2/mu.
inline double sample_fading(const FadingParams& f, std::mt19937_64& rng) {
  if (!(f.mu > 0.0)) throw std::invalid_argument("fading shape mu must be > 0");
  if (!(f.omega > 0.0)) throw std::invalid_argument("fading omega must be > 0");
  std::gamma_distribution<double> g(f.mu, f.omega / f.mu);
  return std::sqrt(g(rng));
}

// Thermal noise over the operating bandwidth:
//   sigma^2 (dBm) = 10 lg(k_B T0 * 10^3) + NR (dB) + 10 lg W.
inline double noise_power_dbm(double noise_figure_db, double temperature_k,
                              double bandwidth_hz) {
  if (!(temperature_k > 0.0))
    throw std::invalid_argument("temperature must be > 0 K");
  if (!(bandwidth_hz > 0.0))
    throw std::invalid_argument("bandwidth must be > 0 Hz");
  return 10.0 * std::log10(kBoltzmann * temperature_k * 1e3) + noise_figure_db +
         10.0 * std::log10(bandwidth_hz);
}

struct NoiseModel {
  double noise_figure_db = 0.0;
  double temperature_k = 290.0;
  double bandwidth_hz = 1.0;
  double sigma2_watts = 0.0;

  double sigma2_dbm() const { return watts_to_dbm(sigma2_watts); }
};

inline NoiseModel make_noise_model(double noise_figure_db, double temperature_k,
                                   double bandwidth_hz) {
  NoiseModel n{noise_figure_db, temperature_k, bandwidth_hz, 0.0};
  n.sigma2_watts =
      dbm_to_watts(noise_power_dbm(noise_figure_db, temperature_k, bandwidth_hz));
  return n;
}

// Composite link gain hbar^2 = G_ue * G_bs * |h|^2 * d^-eta.
struct LinkGain {
  double hbar2 = 0.0;
};

inline LinkGain link_gain(double bs_gain, double ue_gain, double fading_h,
                          double distance_m, double pathloss_eta) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("coincident BS/UE positions (distance = 0)");
  return {ue_gain * bs_gain * fading_h * fading_h *
          std::pow(distance_m, -pathloss_eta)};
}

// Interference plus noise at the UE served by BS `serving`, given every BS's
// transmit power and the composite gains toward this UE.
inline double interference_plus_noise(std::span<const double> hbar2,
                                      std::span<const double> powers, int serving,
                                      double sigma2) {
  double acc = sigma2;
  for (std::size_t l = 0; l < hbar2.size(); ++l)
    if (static_cast<int>(l) != serving) acc += hbar2[l] * powers[l];
  return acc;
}

// Equivalent channel gain g so that SINR = g * p.
inline double equivalent_gain(std::span<const double> hbar2,
                              std::span<const double> powers, int serving,
                              double sigma2) {
  return hbar2[serving] / interference_plus_noise(hbar2, powers, serving, sigma2);
}

inline double sinr(std::span<const double> hbar2, std::span<const double> powers,
                   int serving, double sigma2) {
  return equivalent_gain(hbar2, powers, serving, sigma2) * powers[serving];
}

// Shannon throughput over a stretch of slots, in bit-units (slot count times
// bandwidth times natural-log spectral efficiency).
inline double shannon_throughput(double slots, double bandwidth_hz,
                                 double sinr_value) {
  return slots * bandwidth_hz * std::log1p(sinr_value);
}

}  // namespace beamsched
