#pragma once

#include "mrf/energy.hpp"
#include "mrf/noise.hpp"
#include "mrf/trace.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrf {

/// Annealing schedule t(k) = scale * (1/k - 1/k_max) for 1 <= k <= k_max.
/// Reaches exactly zero on the last sweep.
template <typename Scalar = double>
Scalar temperature(std::int64_t k, std::int64_t k_max, Scalar scale = Scalar(1) / Scalar(500)) {
  if (k < 1 || k > k_max) {
    throw std::out_of_range("temperature: sweep " + std::to_string(k) + " outside [1, " +
                            std::to_string(k_max) + "]");
  }
  return scale * (Scalar(1) / Scalar(k) - Scalar(1) / Scalar(k_max));
}

/// Metropolis acceptance for an energy change `delta` = E2 - E1 at temperature t.
/// Downhill moves are always accepted. At t == 0 a level move is accepted and
/// an uphill move is not.
template <typename Scalar>
Scalar acceptance_for_delta(Scalar delta, Scalar t) {
  if (!(t >= Scalar(0))) throw std::invalid_argument("acceptance: temperature must be >= 0");
  if (delta < Scalar(0)) return Scalar(1);
  if (t == Scalar(0)) return delta == Scalar(0) ? Scalar(1) : Scalar(0);
  using std::exp;
  return exp(-delta / t);
}

/// Transition probability from energy e1 to e2: 1 if e1 > e2, else exp((e1 - e2) / t).
template <typename Scalar>
Scalar acceptance_probability(Scalar e1, Scalar e2, Scalar t) {
  if (!(t >= Scalar(0))) throw std::invalid_argument("acceptance: temperature must be >= 0");
  if (e1 > e2) return Scalar(1);
  if (t == Scalar(0)) return e1 == e2 ? Scalar(1) : Scalar(0);
  using std::exp;
  return exp((e1 - e2) / t);
}

struct IcmConfig {
  std::int64_t k_max = 30;
  /// Recompute E from scratch at each sweep boundary and report the drift.
  bool check_drift = false;

  void validate() const {
    if (k_max < 1) throw std::invalid_argument("IcmConfig: k_max must be >= 1");
  }
};

enum class TiePolicy {
  Accept,  ///< zero-delta candidates go through the p > q test (p = 1)
  Reject,  ///< zero-delta candidates are always reverted, as in ICM
};

struct AnnealConfig {
  std::int64_t k_max = 30;
  std::uint64_t seed = 0;
  double temperature_scale = 1.0 / 500.0;
  /// Return the lowest-energy state seen instead of the final state.
  bool track_best = false;
  TiePolicy ties = TiePolicy::Accept;
  bool check_drift = false;

  void validate() const {
    if (k_max < 1) throw std::invalid_argument("AnnealConfig: k_max must be >= 1");
    if (!(temperature_scale > 0.0) || !std::isfinite(temperature_scale)) {
      throw std::invalid_argument("AnnealConfig: temperature_scale must be positive and finite");
    }
  }
};

template <typename Scalar = double>
struct DenoiseReport {
  SpinImage restored;
  Scalar final_energy{0};
  Scalar best_energy{0};
  EnergyTrace<Scalar> trace;
  std::int64_t sweeps_run = 0;
  std::int64_t flips_accepted = 0;
  /// Largest |incremental - recomputed| energy seen; zero unless drift checking is on.
  Scalar max_drift{0};
};

namespace detail {

template <typename Scalar>
void check_drift(const SpinImage& x, const SpinImage& y, const EnergyParams<Scalar>& params,
                 Scalar incremental, Scalar& max_drift) {
  using std::abs;
  const Scalar drift = abs(incremental - energy(x, y, params));
  if (drift > max_drift) max_drift = drift;
}

}  // namespace detail

/// Iterated conditional modes starting from x = y.
///
/// Pixels are visited in row-major order. A flip is kept only when it strictly
/// lowers the energy. Stops early after a sweep with no kept flip, since every
/// later sweep would be identical.
template <typename Scalar>
DenoiseReport<Scalar> denoise_icm(const SpinImage& y, const EnergyParams<Scalar>& params,
                                  const IcmConfig& cfg = {}) {
  params.validate();
  cfg.validate();

  SpinImage x = y;
  Scalar e = energy(x, y, params);
  DenoiseReport<Scalar> report{x, e, e, {}, 0, 0, Scalar(0)};
  report.trace.push(0, e);

  for (std::int64_t k = 1; k <= cfg.k_max; ++k) {
    std::int64_t kept = 0;
    for (Index i = 0; i < x.size(); ++i) {
      const Scalar delta = detail::flip_delta_unchecked(x, y, i, params);
      if (delta < Scalar(0)) {
        x.flip(i);
        e += delta;
        ++kept;
        if (e < report.best_energy) report.best_energy = e;
      }
    }
    report.flips_accepted += kept;
    report.sweeps_run = k;
    report.trace.push(k, e);
    if (cfg.check_drift) detail::check_drift(x, y, params, e, report.max_drift);
    if (kept == 0) break;
  }

  report.final_energy = e;
  report.restored = std::move(x);
  return report;
}

/// Simulated annealing with a caller-supplied schedule `t = schedule(k, k_max)`.
///
/// Starts from x = y and visits pixels in row-major order for k = 1..k_max.
/// Every visit draws one q = unit_uniform(engine()) from std::mt19937_64
/// seeded with cfg.seed; the candidate flip is kept iff p > q, where p is the
/// acceptance probability of its energy change.
template <typename Scalar, typename Schedule>
DenoiseReport<Scalar> anneal(const SpinImage& y, const EnergyParams<Scalar>& params,
                             const AnnealConfig& cfg, Schedule&& schedule) {
  params.validate();
  cfg.validate();

  SpinImage x = y;
  Scalar e = energy(x, y, params);
  DenoiseReport<Scalar> report{x, e, e, {}, 0, 0, Scalar(0)};
  report.trace.push(0, e);

  // Best state is replayed lazily from the flips made since the last record.
  SpinImage best_state = x;
  std::vector<Index> since_best;

  std::mt19937_64 engine(cfg.seed);
  for (std::int64_t k = 1; k <= cfg.k_max; ++k) {
    const Scalar t = schedule(k, cfg.k_max);
    for (Index i = 0; i < x.size(); ++i) {
      const Scalar delta = detail::flip_delta_unchecked(x, y, i, params);
      const Scalar p = acceptance_for_delta(delta, t);
      const Scalar q = Scalar(unit_uniform(engine()));
      const bool tie_blocked = cfg.ties == TiePolicy::Reject && delta == Scalar(0);
      if (tie_blocked || !(p > q)) continue;

      x.flip(i);
      e += delta;
      ++report.flips_accepted;
      if (cfg.track_best) since_best.push_back(i);
      if (e < report.best_energy) {
        report.best_energy = e;
        if (cfg.track_best) {
          for (const Index j : since_best) best_state.flip(j);
          since_best.clear();
        }
      }
    }
    report.sweeps_run = k;
    report.trace.push(k, e);
    if (cfg.check_drift) detail::check_drift(x, y, params, e, report.max_drift);
  }

  report.final_energy = e;
  report.restored = cfg.track_best ? std::move(best_state) : std::move(x);
  return report;
}

/// Simulated annealing with the schedule t(k) = temperature_scale * (1/k - 1/k_max).
template <typename Scalar>
DenoiseReport<Scalar> denoise_sa(const SpinImage& y, const EnergyParams<Scalar>& params,
                                 const AnnealConfig& cfg = {}) {
  const Scalar scale = Scalar(cfg.temperature_scale);
  return anneal(y, params, cfg, [scale](std::int64_t k, std::int64_t k_max) {
    return temperature<Scalar>(k, k_max, scale);
  });
}

}  // namespace mrf
