#include "prisms/model.hpp"

#include <stdexcept>
#include <string>

namespace prisms {

CoincidenceExperiment coincidence_of(SingleExperiment left, SingleExperiment right) {
  const bool left_ok =
      left == SingleExperiment::RollLeft || left == SingleExperiment::LookLeft;
  const bool right_ok =
      right == SingleExperiment::RollRight || right == SingleExperiment::LookRight;
  if (!left_ok) throw std::invalid_argument("first experiment must act on the left prism");
  if (!right_ok) throw std::invalid_argument("second experiment must act on the right prism");
  if (left == SingleExperiment::RollLeft) {
    return right == SingleExperiment::RollRight ? CoincidenceExperiment::RollRoll
                                                : CoincidenceExperiment::RollLook;
  }
  return right == SingleExperiment::RollRight ? CoincidenceExperiment::LookRoll
                                              : CoincidenceExperiment::LookLook;
}

ModelParams validate_params(int n, double epsilon, double rho) {
  if (n < 4) throw std::invalid_argument("n must be at least 4");
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon out of range [0, 1]");
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho out of range [0, 1]");
  return ModelParams{n, epsilon, rho};
}

void check_params(const ModelParams& params) {
  validate_params(params.n, params.epsilon, params.rho);
}

FaceLayout FaceLayout::build(int n) {
  if (n < 4) throw std::invalid_argument("n must be at least 4");
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
  const int half = n / 2;
  return FaceLayout{n, {0, half}, {1, 1 + half}};
}

JointOutcome FaceLayout::outcome_at(int k) const {
  if (k < 0 || k >= n_)
    throw std::out_of_range("orientation index out of range [0, n): " + std::to_string(k));
  const auto contains = [k](const std::array<int, 2>& plus) {
    return plus[0] == k || plus[1] == k;
  };
  return JointOutcome{contains(plus_left_) ? +1 : -1, contains(plus_right_) ? +1 : -1};
}

OrientationCounts FaceLayout::orientation_counts() const noexcept {
  // Only orientations in plus_left_ or plus_right_ can differ from (-1,-1),
  // so tally those four indices and attribute the rest to mm. The two '+'
  // sets never intersect (one holds even offsets 0 and n/2, the other odd
  // ones 1 and 1+n/2 with n/2 >= 2).
  OrientationCounts counts;
  counts.mm = n_;
  const auto in_right = [this](int k) {
    return plus_right_[0] == k || plus_right_[1] == k;
  };
  const auto in_left = [this](int k) {
    return plus_left_[0] == k || plus_left_[1] == k;
  };
  for (int k : plus_left_) {
    if (in_right(k)) ++counts.pp; else ++counts.pm;
    --counts.mm;
  }
  for (int k : plus_right_) {
    if (in_left(k)) continue;  // already tallied as pp above
    ++counts.mp;
    --counts.mm;
  }
  return counts;
}

}  // namespace prisms
