#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamsched/antenna.hpp"
#include "beamsched/channel.hpp"
#include "beamsched/rng.hpp"

namespace beamsched {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double bearing(const Vec2& from, const Vec2& to) {
  if (from.x == to.x && from.y == to.y)
    throw std::invalid_argument("bearing undefined for coincident points");
  return std::atan2(to.y - from.y, to.x - from.x);
}

// Signed angle in (-pi, pi] between a boresight direction and the direction
// from `from` toward `to`.
inline double angular_offset(const Vec2& from, double boresight, const Vec2& to) {
  return normalize_angle(bearing(from, to) - boresight);
}

// Static scenario description: everything that stays fixed across a run.
struct Scenario {
  double grid_side = 800.0;        // meters
  int num_bs = 10;                 // M
  int ues_per_bs = 10;             // K_i (uniform across BSs)
  double coverage_radius = 150.0;  // meters
  double min_bs_separation = 100.0;  // meters, rejection rule for random layouts
  double pathloss_eta = 4.0;

  double p_max = 7.9;  // Watts, per BS
  double p_avg = 6.5;  // Watts, per BS

  AntennaPattern bs_pattern;
  AntennaPattern ue_pattern;
  FadingParams fading{1.0, 0.001};
  NoiseModel noise;
  double bandwidth_hz = 4e8;
  double center_frequency_hz = 3.7e10;

  // Optional explicit BS coordinates; empty means sample uniformly on the grid
  // with the min-separation rejection rule.
  std::vector<Vec2> bs_positions;

  int num_ue() const { return num_bs * ues_per_bs; }
};

inline void validate(const Scenario& s) {
  if (s.num_bs < 1) throw std::invalid_argument("num_bs must be >= 1");
  if (s.ues_per_bs < 1) throw std::invalid_argument("ues_per_bs must be >= 1");
  if (!(s.grid_side > 0.0)) throw std::invalid_argument("grid_side must be > 0");
  if (!(s.coverage_radius > 0.0) || s.coverage_radius > s.grid_side)
    throw std::invalid_argument("coverage_radius must lie in (0, grid_side]");
  if (!(s.p_max > 0.0)) throw std::invalid_argument("p_max must be > 0");
  if (!(s.p_avg > 0.0) || s.p_avg > s.p_max)
    throw std::invalid_argument("p_avg must lie in (0, p_max]");
  if (!(s.pathloss_eta >= 2.0))
    throw std::invalid_argument("pathloss_eta must be >= 2");
  if (!(s.noise.sigma2_watts > 0.0))
    throw std::invalid_argument("noise power must be > 0");
  if (!s.bs_positions.empty() &&
      static_cast<int>(s.bs_positions.size()) != s.num_bs)
    throw std::invalid_argument("explicit BS position count must equal num_bs");
}

// BS/UE layout plus the fixed UE -> serving BS association.
struct Placement {
  std::vector<Vec2> bs_pos;
  std::vector<Vec2> ue_pos;
  std::vector<int> serving_bs;             // per UE
  std::vector<std::vector<int>> ues_of_bs;  // per BS

  int num_bs() const { return static_cast<int>(bs_pos.size()); }
  int num_ue() const { return static_cast<int>(ue_pos.size()); }
};

// BS positions first (so UE counts do not perturb the layout), then each BS's
// UEs uniform by area in its coverage disk. Association fixed at generation.
inline Placement generate_placement(const Scenario& s, std::uint64_t root_seed) {
  validate(s);
  Placement p;
  std::mt19937_64 rng = substream(root_seed, Stream::placement);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  if (!s.bs_positions.empty()) {
    p.bs_pos = s.bs_positions;
  } else {
    p.bs_pos.reserve(s.num_bs);
    const int kMaxTries = 20000;
    for (int i = 0; i < s.num_bs; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < kMaxTries && !placed; ++attempt) {
        Vec2 cand{unit(rng) * s.grid_side, unit(rng) * s.grid_side};
        placed = true;
        for (const Vec2& other : p.bs_pos)
          if (distance(cand, other) < s.min_bs_separation) {
            placed = false;
            break;
          }
        if (placed) p.bs_pos.push_back(cand);
      }
      if (!placed)
        throw std::runtime_error(
            "could not place BS " + std::to_string(i) +
            " with the requested minimum separation; relax min_bs_separation");
    }
  }

  p.ue_pos.reserve(s.num_ue());
  p.serving_bs.reserve(s.num_ue());
  p.ues_of_bs.assign(s.num_bs, {});
  for (int i = 0; i < s.num_bs; ++i) {
    for (int u = 0; u < s.ues_per_bs; ++u) {
      const double r = s.coverage_radius * std::sqrt(unit(rng));
      const double phi = unit(rng) * kTwoPi;
      const int ue = static_cast<int>(p.ue_pos.size());
      p.ue_pos.push_back(
          {p.bs_pos[i].x + r * std::cos(phi), p.bs_pos[i].y + r * std::sin(phi)});
      p.serving_bs.push_back(i);
      p.ues_of_bs[i].push_back(ue);
    }
  }
  return p;
}

// One UE per BS, uniform over its associated set, fixed for a whole epoch.
inline std::vector<int> select_ues(const Placement& p, std::mt19937_64& rng) {
  std::vector<int> selected(p.num_bs());
  for (int i = 0; i < p.num_bs(); ++i) {
    const auto& ues = p.ues_of_bs[i];
    if (ues.empty()) throw std::invalid_argument("BS with no associated UEs");
    std::uniform_int_distribution<std::size_t> pick(0, ues.size() - 1);
    selected[i] = ues[pick(rng)];
  }
  return selected;
}

// Boresights after beam alignment: each BS points at its selected UE, every
// UE points at its serving BS, so serving-pair offsets are exactly zero.
struct Pointing {
  std::vector<double> bs_boresight;  // per BS
  std::vector<double> ue_boresight;  // per UE
};

inline Pointing make_pointing(const Placement& p,
                              const std::vector<int>& selected) {
  Pointing pt;
  pt.bs_boresight.resize(p.num_bs());
  pt.ue_boresight.resize(p.num_ue());
  for (int i = 0; i < p.num_bs(); ++i)
    pt.bs_boresight[i] = bearing(p.bs_pos[i], p.ue_pos[selected[i]]);
  for (int j = 0; j < p.num_ue(); ++j)
    pt.ue_boresight[j] = bearing(p.ue_pos[j], p.bs_pos[p.serving_bs[j]]);
  return pt;
}

}  // namespace beamsched
