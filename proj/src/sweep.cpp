#include "prisms/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prisms/analytic.hpp"
#include "prisms/montecarlo.hpp"

namespace prisms {

void SweepSpec::validate() const {
  if (n_values.empty()) throw std::invalid_argument("n grid is empty");
  if (epsilon_grid.empty()) throw std::invalid_argument("epsilon grid is empty");
  if (rho_grid.empty()) throw std::invalid_argument("rho grid is empty");
  if (regimes.empty()) throw std::invalid_argument("regime list is empty");
  for (int n : n_values) validate_params(n, 0.0, 0.0);
  for (double eps : epsilon_grid) validate_params(4, eps, 0.0);
  for (double rho : rho_grid) validate_params(4, 0.0, rho);
  if (mode == SweepMode::MonteCarlo && trials == 0)
    throw std::invalid_argument("trials must be positive in Monte Carlo mode");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();

  std::vector<Regime> regimes = spec.regimes;
  std::vector<int> n_values = spec.n_values;
  std::vector<double> epsilons = spec.epsilon_grid;
  std::vector<double> rhos = spec.rho_grid;
  std::sort(regimes.begin(), regimes.end());
  std::sort(n_values.begin(), n_values.end());
  std::sort(epsilons.begin(), epsilons.end());
  std::sort(rhos.begin(), rhos.end());

  std::vector<SweepRow> rows;
  rows.reserve(regimes.size() * n_values.size() * epsilons.size() * rhos.size());
  for (Regime regime : regimes) {
    const Preparation prep = Preparation::canonical(regime);
    for (int n : n_values) {
      for (double eps : epsilons) {
        for (double rho : rhos) {
          const ModelParams params{n, eps, rho};
          SweepRow row{regime, n, eps, rho, 0.0, 0.0};
          if (spec.mode == SweepMode::Exact) {
            row.i_value = chsh(params, prep).value;
          } else {
            const EstimateReport report =
                estimate(params, prep, spec.trials, spec.seed, spec.workers);
            row.i_value = report.i_hat;
            row.i_stderr = report.se_i;
          }
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

ProfileClassification classify_profile(const std::vector<double>& grid,
                                       const std::vector<double>& values,
                                       double flat_tolerance) {
  if (grid.size() != values.size())
    throw std::invalid_argument("profile grid and values differ in length");
  if (grid.size() < 2) throw std::invalid_argument("profile needs at least two points");

  ProfileClassification out;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double diff = values[i] - values[i - 1];
    if (diff > flat_tolerance && !out.rising)
      out.rising = AdjacentPair{grid[i - 1], grid[i]};
    if (diff < -flat_tolerance && !out.falling)
      out.falling = AdjacentPair{grid[i - 1], grid[i]};
  }

  if (out.rising && out.falling) {
    out.trend = Trend::Mixed;
  } else if (out.rising) {
    out.trend = Trend::NonDecreasing;
    out.rising.reset();
  } else if (out.falling) {
    out.trend = Trend::NonIncreasing;
    out.falling.reset();
  } else {
    out.trend = Trend::Constant;
  }
  return out;
}

MonotonicityReport monotonicity_probe(int n, Regime regime, SweepAxis axis,
                                      double fixed_value, double step) {
  if (!(step > 0.0 && step <= 1.0))
    throw std::invalid_argument("step out of range (0, 1]");
  // Validate both coordinates up front; the walked axis covers [0, 1].
  if (axis == SweepAxis::Epsilon)
    validate_params(n, 0.0, fixed_value);
  else
    validate_params(n, fixed_value, 0.0);

  const Preparation prep = Preparation::canonical(regime);
  const int steps = static_cast<int>(std::ceil(1.0 / step - 1e-9));
  std::vector<double> grid;
  std::vector<double> values;
  grid.reserve(static_cast<std::size_t>(steps) + 1);
  values.reserve(grid.capacity());
  for (int i = 0; i <= steps; ++i) {
    const double x = std::min(i * step, 1.0);
    const ModelParams params = axis == SweepAxis::Epsilon ? ModelParams{n, x, fixed_value}
                                                          : ModelParams{n, fixed_value, x};
    grid.push_back(x);
    values.push_back(chsh(params, prep).value);
  }

  const ProfileClassification profile = classify_profile(grid, values);
  MonotonicityReport report;
  report.axis = axis;
  report.n = n;
  report.regime = regime;
  report.fixed_value = fixed_value;
  report.step = step;
  report.trend = profile.trend;
  report.rising = profile.rising;
  report.falling = profile.falling;
  return report;
}

}  // namespace prisms
