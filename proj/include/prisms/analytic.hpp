#pragma once

#include <numbers>

#include "prisms/model.hpp"

namespace prisms {

// Normalization slack for probability vectors.
inline constexpr double kProbabilityTolerance = 1e-12;

// Slack above the classical bound 2 before a CHSH value counts as violated.
inline constexpr double kChshTolerance = 1e-12;

// Probabilities of the four outcome pairs of one coincidence experiment.
struct JointDistribution {
  double pp = 0.0;  // P(+1, +1)
  double pm = 0.0;  // P(+1, -1)
  double mp = 0.0;  // P(-1, +1)
  double mm = 0.0;  // P(-1, -1)

  double sum() const noexcept { return (pp + mm) + (pm + mp); }
  bool is_normalized(double tol = kProbabilityTolerance) const noexcept;

  // The probability cell an outcome pair lands in.
  double& slot(const JointOutcome& o) noexcept {
    if (o.left > 0) return o.right > 0 ? pp : pm;
    return o.right > 0 ? mp : mm;
  }
  double slot(const JointOutcome& o) const noexcept {
    if (o.left > 0) return o.right > 0 ? pp : pm;
    return o.right > 0 ? mp : mm;
  }
};

// Correlation of the product of the two +/-1 readings:
// E = P(+,+) + P(-,-) - P(+,-) - P(-,+).
// Throws std::invalid_argument if the distribution is not normalized or has
// a cell outside [0, 1] beyond tolerance.
double expectation_value(const JointDistribution& dist);

// E for each of the four coincidence experiments, in the CHSH labelling
// (roll = unprimed setting, look = primed).
struct ExpectationTable {
  double e_ab = 1.0;    // RollRoll
  double e_abp = 1.0;   // RollLook
  double e_apb = 1.0;   // LookRoll
  double e_apbp = 1.0;  // LookLook
};

struct ChshValue {
  double value = 0.0;
  bool violated = false;  // value exceeds 2 beyond kChshTolerance
};

// Exact outcome distribution of one coincidence experiment. RollLook,
// LookRoll and LookLook leave at least one prism untouched, which drops the
// rod and pins both readings to +1; only RollRoll mixes the three branches
// (rod falls / aimed roll succeeds / uniform orientation).
JointDistribution joint_distribution(const ModelParams& params, const Preparation& prep,
                                     CoincidenceExperiment kind);

ExpectationTable expectation_table(const ModelParams& params, const Preparation& prep);

// I = |E_ab - E_ab'| + |E_a'b' + E_a'b|.
ChshValue chsh_from_table(const ExpectationTable& table);

// Full pipeline: distributions -> expectations -> CHSH combination.
ChshValue chsh(const ModelParams& params, const Preparation& prep);

// Closed forms: I = 2 + rho * (2(1 - eps) + eps * 8/n) in regime A and
// I = 2 + rho * eps * 8/n in regime B. Must agree with chsh() to 1e-12.
ChshValue chsh_closed_form(const ModelParams& params, const Preparation& prep);

// I rewritten through the one stochastic term: I = 2 + |E_ab - 1|, valid
// because the other three expectations are exactly 1.
struct ChshDecomposition {
  double e_ab = 1.0;
  ChshValue chsh;
};

ChshDecomposition chsh_decomposition(const ModelParams& params, const Preparation& prep);

// CHSH value of the singlet state at optimal settings, the quantum
// benchmark 2*sqrt(2).
constexpr double singlet_reference() noexcept { return 2.0 * std::numbers::sqrt2; }

}  // namespace prisms
