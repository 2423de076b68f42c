#include "prisms/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace prisms {

bool JointDistribution::is_normalized(double tol) const noexcept {
  for (double p : {pp, pm, mp, mm}) {
    if (!(p >= -tol && p <= 1.0 + tol)) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

double expectation_value(const JointDistribution& dist) {
  if (!dist.is_normalized())
    throw std::invalid_argument("joint distribution is not normalized");
  // Grouped so that swapping pm and mp cannot change even the rounding.
  return (dist.pp + dist.mm) - (dist.pm + dist.mp);
}

JointDistribution joint_distribution(const ModelParams& params, const Preparation& prep,
                                     CoincidenceExperiment kind) {
  check_params(params);
  if (kind != CoincidenceExperiment::RollRoll) {
    // One prism is struck alone or not at all: the rod drops, a lone roll
    // stops on a '+' face, and a look reads the resting '+' face.
    return JointDistribution{1.0, 0.0, 0.0, 0.0};
  }
  const FaceLayout layout = FaceLayout::build(params.n);
  const OrientationCounts counts = layout.orientation_counts();
  const double n = static_cast<double>(params.n);
  const double uniform_weight = params.rho * params.epsilon;

  JointDistribution dist;
  dist.pp = (1.0 - params.rho) + uniform_weight * counts.pp / n;
  dist.pm = uniform_weight * counts.pm / n;
  dist.mp = uniform_weight * counts.mp / n;
  dist.mm = uniform_weight * counts.mm / n;
  dist.slot(prep.target()) += params.rho * (1.0 - params.epsilon);
  return dist;
}

ExpectationTable expectation_table(const ModelParams& params, const Preparation& prep) {
  ExpectationTable table;
  table.e_ab =
      expectation_value(joint_distribution(params, prep, CoincidenceExperiment::RollRoll));
  table.e_abp =
      expectation_value(joint_distribution(params, prep, CoincidenceExperiment::RollLook));
  table.e_apb =
      expectation_value(joint_distribution(params, prep, CoincidenceExperiment::LookRoll));
  table.e_apbp =
      expectation_value(joint_distribution(params, prep, CoincidenceExperiment::LookLook));
  return table;
}

ChshValue chsh_from_table(const ExpectationTable& table) {
  const double i =
      std::abs(table.e_ab - table.e_abp) + std::abs(table.e_apbp + table.e_apb);
  return ChshValue{i, i > 2.0 + kChshTolerance};
}

ChshValue chsh(const ModelParams& params, const Preparation& prep) {
  return chsh_from_table(expectation_table(params, prep));
}

ChshValue chsh_closed_form(const ModelParams& params, const Preparation& prep) {
  check_params(params);
  const double per_face = 8.0 / static_cast<double>(params.n);
  const double bracket = prep.regime() == Regime::A
                             ? 2.0 * (1.0 - params.epsilon) + params.epsilon * per_face
                             : params.epsilon * per_face;
  const double i = 2.0 + params.rho * bracket;
  return ChshValue{i, i > 2.0 + kChshTolerance};
}

ChshDecomposition chsh_decomposition(const ModelParams& params, const Preparation& prep) {
  const double e_ab =
      expectation_value(joint_distribution(params, prep, CoincidenceExperiment::RollRoll));
  const double i = 2.0 + std::abs(e_ab - 1.0);
  return ChshDecomposition{e_ab, ChshValue{i, i > 2.0 + kChshTolerance}};
}

}  // namespace prisms
