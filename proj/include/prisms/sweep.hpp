#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prisms/model.hpp"

namespace prisms {

enum class SweepMode : std::uint8_t { Exact, MonteCarlo };

// Cartesian grid over (regime, n, epsilon, rho). Monte Carlo mode reuses
// the one master seed at every grid point, so each row matches a standalone
// estimate run with the same parameters.
struct SweepSpec {
  std::vector<int> n_values;
  std::vector<double> epsilon_grid;
  std::vector<double> rho_grid;
  std::vector<Regime> regimes;
  SweepMode mode = SweepMode::Exact;
  std::uint64_t trials = 0;  // Monte Carlo mode only
  std::uint64_t seed = 0;
  unsigned workers = 1;

  // Throws std::invalid_argument before any evaluation starts: empty grids,
  // invalid parameter values, or Monte Carlo mode without trials.
  void validate() const;
};

struct SweepRow {
  Regime regime = Regime::A;
  int n = 4;
  double epsilon = 0.0;
  double rho = 0.0;
  double i_value = 0.0;
  double i_stderr = 0.0;  // zero in exact mode
};

// Evaluates the grid and returns rows sorted lexicographically by
// (regime, n, epsilon, rho), regardless of the order the grids were given in.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

enum class SweepAxis : std::uint8_t { Epsilon, Rho };

// Direction of I along one axis, judged from finite differences.
enum class Trend : std::uint8_t { Constant, NonDecreasing, NonIncreasing, Mixed };

struct AdjacentPair {
  double lower = 0.0;
  double upper = 0.0;
};

// Finite-difference classification of a sampled profile. Differences within
// `flat_tolerance` of zero count as flat; rising and falling witnesses are
// kept only when both occur (a genuine sign flip).
struct ProfileClassification {
  Trend trend = Trend::Constant;
  std::optional<AdjacentPair> rising;
  std::optional<AdjacentPair> falling;
};

ProfileClassification classify_profile(const std::vector<double>& grid,
                                       const std::vector<double>& values,
                                       double flat_tolerance = 1e-12);

struct MonotonicityReport {
  SweepAxis axis = SweepAxis::Epsilon;
  int n = 4;
  Regime regime = Regime::A;
  double fixed_value = 0.0;  // the other axis, held constant
  double step = 0.0;
  Trend trend = Trend::Constant;
  // Populated only when trend == Mixed: adjacent grid values where I
  // strictly rises and strictly falls, witnessing the sign flip.
  std::optional<AdjacentPair> rising;
  std::optional<AdjacentPair> falling;
};

// Walks the exact CHSH value along `axis` from 0 to 1 in increments of
// `step` (endpoint included) with the other parameter pinned at
// `fixed_value`, and classifies the finite differences. Differences within
// 1e-12 of zero count as flat.
MonotonicityReport monotonicity_probe(int n, Regime regime, SweepAxis axis,
                                      double fixed_value, double step = 0.05);

}  // namespace prisms
