#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace beamsched {

// One-shot power allocation game for a single block: each BS transmits to its
// selected UE, payoff = alpha*W*log(1+SINR) - lambda*p. hbar2 is the M x M
// composite gain matrix, row i = gains from every BS toward the UE selected
// by BS i (positive diagonal).
struct GameInstance {
  double bandwidth = 0.0;
  double sigma2 = 0.0;
  std::vector<double> alpha;   // per BS
  std::vector<double> lambda;  // per BS
  std::vector<double> p_max;   // per BS
  std::vector<double> hbar2;   // row-major M x M

  int num_bs() const { return static_cast<int>(alpha.size()); }
  double gain(int i, int l) const { return hbar2[i * num_bs() + l]; }
};

inline void validate(const GameInstance& g) {
  const std::size_t m = g.alpha.size();
  if (m == 0) throw std::invalid_argument("game instance with no players");
  if (g.lambda.size() != m || g.p_max.size() != m || g.hbar2.size() != m * m)
    throw std::invalid_argument("game instance with inconsistent sizes");
  if (!(g.bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
  if (!(g.sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be > 0");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(g.alpha[i] >= 0.0) || !(g.lambda[i] >= 0.0))
      throw std::invalid_argument("pricing factors must be >= 0");
    if (!(g.p_max[i] > 0.0)) throw std::invalid_argument("p_max must be > 0");
    if (!(g.hbar2[i * m + i] > 0.0))
      throw std::invalid_argument("direct link gain must be > 0");
    for (std::size_t l = 0; l < m; ++l)
      if (!(g.hbar2[i * m + l] >= 0.0))
        throw std::invalid_argument("link gains must be >= 0");
  }
}

inline double interference_at(const GameInstance& g, int i,
                              std::span<const double> powers) {
  double acc = g.sigma2;
  for (int l = 0; l < g.num_bs(); ++l)
    if (l != i) acc += g.gain(i, l) * powers[l];
  return acc;
}

inline double equivalent_gain(const GameInstance& g, int i,
                              std::span<const double> powers) {
  return g.gain(i, i) / interference_at(g, i, powers);
}

inline double payoff(const GameInstance& g, int i, std::span<const double> powers) {
  const double gi = equivalent_gain(g, i, powers);
  return g.alpha[i] * g.bandwidth * std::log1p(gi * powers[i]) -
         g.lambda[i] * powers[i];
}

// Clamped water-filling best response. Degenerate pricing: zero marginal
// utility (alpha = 0) transmits nothing; zero power price (lambda = 0) with
// positive alpha pushes the water level to infinity, hence p_max.
inline double best_response_power(double alpha, double lambda, double bandwidth,
                                  double eq_gain, double p_max) {
  if (!(eq_gain > 0.0))
    throw std::invalid_argument("equivalent gain must be > 0");
  if (alpha <= 0.0) return 0.0;
  if (lambda <= 0.0) return p_max;
  return std::clamp(alpha * bandwidth / lambda - 1.0 / eq_gain, 0.0, p_max);
}

inline double best_response(const GameInstance& g, int i,
                            std::span<const double> powers) {
  return best_response_power(g.alpha[i], g.lambda[i], g.bandwidth,
                             equivalent_gain(g, i, powers), g.p_max[i]);
}

struct NeResult {
  std::vector<double> powers;
  int iterations = 0;
  bool converged = false;
  double residual2 = 0.0;  // last ||p^(s+1) - p^(s)||_2^2
};

using SlotObserver = std::function<void(int slot, std::span<const double> powers)>;

// Synchronous parallel best-response iteration. Each iteration models one
// slot: the observer sees the powers actually transmitted during that slot
// (the previous iterate), then all BSs update simultaneously from the
// interference they measured under it. Stops when ||p' - p||^2 <= epsilon or
// after max_iters updates.
inline NeResult parallel_update(const GameInstance& g, std::vector<double> powers,
                                double epsilon, int max_iters,
                                const SlotObserver& on_slot = {}) {
  validate(g);
  const int m = g.num_bs();
  if (static_cast<int>(powers.size()) != m)
    throw std::invalid_argument("initial power vector has wrong size");
  for (int i = 0; i < m; ++i)
    if (!(powers[i] >= 0.0) || powers[i] > g.p_max[i])
      throw std::invalid_argument("initial powers must be feasible");

  NeResult res;
  std::vector<double> next(m);
  for (int s = 1; s <= max_iters; ++s) {
    if (on_slot) on_slot(s, powers);
    double diff2 = 0.0;
    for (int i = 0; i < m; ++i) next[i] = best_response(g, i, powers);
    for (int i = 0; i < m; ++i) {
      const double d = next[i] - powers[i];
      diff2 += d * d;
    }
    powers = next;
    res.iterations = s;
    res.residual2 = diff2;
    if (diff2 <= epsilon) {
      res.converged = true;
      break;
    }
  }
  res.powers = std::move(powers);
  return res;
}

// Max best-response deviation; a small value certifies an approximate fixed
// point of the joint BR map.
inline double verify_ne(const GameInstance& g, std::span<const double> powers) {
  double worst = 0.0;
  for (int i = 0; i < g.num_bs(); ++i)
    worst = std::max(worst, std::abs(powers[i] - best_response(g, i, powers)));
  return worst;
}

struct QMatrix {
  int n = 0;
  std::vector<double> a;  // row-major

  double at(int r, int c) const { return a[r * n + c]; }
  double& at(int r, int c) { return a[r * n + c]; }
};

// Q_pp = alpha_p W,
// Q_pq = -alpha_p W |hbar_{j(p),q} / hbar_{j(q),q}|^2
//        (1 + sum_i |hbar_{j(q),i}|^2 p_i^max / sigma^2)   for p != q.
inline QMatrix build_q_matrix(const GameInstance& g) {
  validate(g);
  const int m = g.num_bs();
  QMatrix q{m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0)};
  std::vector<double> col_scale(m);
  for (int c = 0; c < m; ++c) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += g.gain(c, i) * g.p_max[i];
    col_scale[c] = 1.0 + acc / g.sigma2;
  }
  for (int p = 0; p < m; ++p)
    for (int c = 0; c < m; ++c)
      q.at(p, c) = (p == c)
                       ? g.alpha[p] * g.bandwidth
                       : -g.alpha[p] * g.bandwidth *
                             (g.gain(p, c) / g.gain(c, c)) * col_scale[c];
  return q;
}

namespace detail {

// Determinant by Gaussian elimination with partial pivoting; m is destroyed.
inline double determinant_inplace(std::vector<double>& m, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[pivot * n + c])) pivot = r;
    if (m[pivot * n + c] == 0.0) return 0.0;
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[c * n + k]);
      det = -det;
    }
    det *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double f = m[r * n + c] / m[c * n + c];
      for (int k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return det;
}

}  // namespace detail

// Exhaustive principal-minor test: true iff all 2^n - 1 principal minors are
// strictly positive. Exact at the scales used here; n > 20 is rejected.
inline bool is_p_matrix(const QMatrix& q) {
  if (q.n <= 0) throw std::invalid_argument("empty matrix");
  if (q.n > 20)
    throw std::invalid_argument("principal-minor enumeration limited to n <= 20");
  const int n = q.n;
  std::vector<int> idx;
  std::vector<double> sub;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    sub.resize(static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub[r * k + c] = q.at(idx[r], idx[c]);
    if (!(detail::determinant_inplace(sub, k) > 0.0)) return false;
  }
  return true;
}

}  // namespace beamsched
