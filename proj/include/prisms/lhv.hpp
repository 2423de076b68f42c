#pragma once

#include <vector>

#include "prisms/analytic.hpp"
#include "prisms/model.hpp"

namespace prisms {

// A deterministic local strategy: one pre-assigned +/-1 reading for each of
// the four single experiments. In CHSH terms roll_left/look_left are the
// outcomes for settings a/a', roll_right/look_right for b/b'.
struct LocalStrategy {
  int roll_left = +1;
  int look_left = +1;
  int roll_right = +1;
  int look_right = +1;

  friend constexpr bool operator==(const LocalStrategy&, const LocalStrategy&) = default;
};

struct StrategyEvaluation {
  LocalStrategy strategy;
  double i = 0.0;
};

// Exhaustive certificate over the 16 deterministic strategies.
struct LhvCertificate {
  double max_i = 0.0;
  std::vector<StrategyEvaluation> evaluations;  // all 16, in enumeration order
  std::vector<LocalStrategy> maximizers;        // the ones attaining max_i
};

// Enumerates every deterministic strategy and evaluates
// I = |E_ab - E_ab'| + |E_a'b' + E_a'b| with E taken as the plain product of
// the pre-assigned readings. The maximum over mixtures of strategies equals
// the maximum over these extreme points, so max_i is the bound any local
// hidden-variable account of the four experiments must obey.
LhvCertificate lhv_max_chsh();

// Maximum over the four sign resolutions s1 (E_ab - E_ab') + s2 (E_a'b' + E_a'b)
// of the CHSH combination, again over all 16 strategies. Each resolution is
// linear in the strategy mixture, so this certifies that no mixture beats
// the extreme points. Always equals lhv_max_chsh().max_i.
double lhv_signed_linear_max();

// One branch of the exact finite expansion of the joint-strike experiment.
struct WeightedBranch {
  double probability = 0.0;
  JointOutcome outcome;
};

struct BranchEnumeration {
  std::vector<WeightedBranch> branches;

  double total_probability() const noexcept;
  JointDistribution aggregate() const noexcept;
};

// All outcome branches of the RollRoll experiment with their exact
// probabilities: rod falls (1 - rho), aimed roll succeeds (rho (1 - eps)),
// or each of the n orientations at rho eps / n. Zero-probability branches
// are dropped, so the list holds at most 2 + n entries. Aggregating it is
// the brute-force route to the same distribution joint_distribution builds
// directly.
BranchEnumeration branch_enumerate(const ModelParams& params, const Preparation& prep);

}  // namespace prisms
