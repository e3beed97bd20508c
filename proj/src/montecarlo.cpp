#include "qct/montecarlo.hpp"

#include "qct/analytics.hpp"
#include "qct/parallel.hpp"
#include "qct/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qct {

namespace {

// Fixed speculation width: convergence is still decided batch-by-batch in
// index order, so the sample count does not depend on the worker count.
constexpr int wave_batches = 8;
constexpr int spot_interval = 1000;

struct BatchResult {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  long rejected = 0;
  long spot_checks = 0;
  double max_spot_deviation = 0.0;
};

struct Accumulator {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void combine(const BatchResult& b) {
    if (b.count == 0) return;
    const double delta = b.mean - mean;
    const long n = count + b.count;
    mean += delta * static_cast<double>(b.count) / n;
    m2 += b.m2 + delta * delta * static_cast<double>(count) * b.count / n;
    count = n;
  }

  double sem() const {
    if (count < 2) return std::numeric_limits<double>::infinity();
    const double variance = m2 / (count - 1);
    return std::sqrt(std::max(variance, 0.0) / count);
  }
};

BatchResult run_batch(const EstimatorConfig& cfg, long batch_index) {
  RngStream rng = RngStream::child(cfg.seed, static_cast<std::uint64_t>(batch_index));
  const DeviationConfig dev{cfg.delta_phi, cfg.basis_x};
  BatchResult out;
  for (int s = 0; s < cfg.batch_size; ++s) {
    const TargetState state = cfg.ensemble == Ensemble::PureHaar
                                  ? sample_haar_pure(cfg.d, rng)
                                  : sample_hs_mixed(cfg.d, rng);
    const ComplexMatrix mags = magnitudes_of(state.rho.matrix());
    const double eta = eta_deviation(mags, cfg.delta_phi);

    double min_eig = 0.0;
    const TargetState perturbed = perturbed_state_unchecked(mags, dev, &min_eig);
    if (min_eig < -density_tol) ++out.rejected;

    const long global_index = batch_index * cfg.batch_size + s;
    if (global_index % spot_interval == 0) {
      ++out.spot_checks;
      const auto check = [&](int x, int y) {
        const TargetState st =
            x == cfg.basis_x ? perturbed : perturbed_state_unchecked(mags, {cfg.delta_phi, x});
        const TeleportOutcome o = teleport_cjks(st, nullptr, x, y);
        out.max_spot_deviation =
            std::max(out.max_spot_deviation, std::abs(efficiency(o) - eta));
      };
      if (cfg.sweep_bases) {
        for (int x = 0; x < cfg.d; ++x)
          for (int y = 0; y < cfg.d; ++y) check(x, y);
      } else {
        check(cfg.basis_x, cfg.basis_y);
      }
    }

    // Welford update
    ++out.count;
    const double delta = eta - out.mean;
    out.mean += delta / out.count;
    out.m2 += delta * (eta - out.mean);
  }
  return out;
}

} // namespace

std::string to_string(Ensemble e) {
  return e == Ensemble::PureHaar ? "pure" : "mixed";
}

Ensemble ensemble_from_string(const std::string& name) {
  if (name == "pure") return Ensemble::PureHaar;
  if (name == "mixed") return Ensemble::MixedHS;
  throw std::invalid_argument("unknown ensemble: " + name);
}

EstimatorReport estimate_avg_efficiency(const EstimatorConfig& cfg) {
  if (cfg.sem_target <= 0.0) throw std::invalid_argument("estimator: sem_target must be > 0");
  if (cfg.batch_size < 2) throw std::invalid_argument("estimator: batch size must be >= 2");
  if (cfg.max_samples < cfg.batch_size)
    throw std::invalid_argument("estimator: max_samples below one batch");

  const long max_batches = cfg.max_samples / cfg.batch_size;

  Accumulator acc;
  long rejected = 0;
  long spot_checks = 0;
  double max_spot_dev = 0.0;
  bool converged = false;

  for (long wave_start = 0; wave_start < max_batches && !converged;
       wave_start += wave_batches) {
    const long wave_end = std::min(wave_start + wave_batches, max_batches);
    std::vector<BatchResult> results(wave_end - wave_start);

#ifdef QCT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(qct::parallel::max_threads()) \
    if (qct::parallel::enabled())
#endif
    for (long b = wave_start; b < wave_end; ++b)
      results[b - wave_start] = run_batch(cfg, b);

    for (const auto& batch : results) {
      acc.combine(batch);
      rejected += batch.rejected;
      spot_checks += batch.spot_checks;
      max_spot_dev = std::max(max_spot_dev, batch.max_spot_deviation);
      if (acc.sem() < cfg.sem_target) {
        converged = true;
        break; // later speculative batches are discarded
      }
    }
  }

  return {cfg.d,     cfg.ensemble, cfg.delta_phi, acc.mean,  acc.sem(),    acc.count,
          converged, rejected,     cfg.seed,      spot_checks, max_spot_dev};
}

std::vector<EstimatorReport> table1_report(const RobustnessTableConfig& cfg) {
  std::vector<EstimatorReport> out;
  out.reserve(cfg.d_list.size() * cfg.delta_list.size() * cfg.ensembles.size());
  for (int d : cfg.d_list)
    for (double delta : cfg.delta_list)
      for (Ensemble ensemble : cfg.ensembles) {
        EstimatorConfig ec;
        ec.d = d;
        ec.ensemble = ensemble;
        ec.delta_phi = delta;
        ec.sem_target = cfg.sem_target;
        ec.max_samples = cfg.max_samples;
        ec.seed = cfg.seed;
        out.push_back(estimate_avg_efficiency(ec));
      }
  return out;
}

} // namespace qct
