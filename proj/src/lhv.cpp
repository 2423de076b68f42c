#include "prisms/lhv.hpp"

#include <cmath>

namespace prisms {

namespace {

double chsh_of_strategy(const LocalStrategy& s) {
  const int e_ab = s.roll_left * s.roll_right;
  const int e_abp = s.roll_left * s.look_right;
  const int e_apb = s.look_left * s.roll_right;
  const int e_apbp = s.look_left * s.look_right;
  return static_cast<double>(std::abs(e_ab - e_abp) + std::abs(e_apbp + e_apb));
}

LocalStrategy strategy_from_bits(unsigned bits) {
  const auto sign = [bits](unsigned bit) { return (bits >> bit) & 1u ? -1 : +1; };
  return LocalStrategy{sign(0), sign(1), sign(2), sign(3)};
}

}  // namespace

LhvCertificate lhv_max_chsh() {
  LhvCertificate cert;
  cert.evaluations.reserve(16);
  for (unsigned bits = 0; bits < 16; ++bits) {
    const LocalStrategy s = strategy_from_bits(bits);
    const double i = chsh_of_strategy(s);
    cert.evaluations.push_back(StrategyEvaluation{s, i});
    if (i > cert.max_i) cert.max_i = i;
  }
  for (const StrategyEvaluation& ev : cert.evaluations) {
    if (ev.i == cert.max_i) cert.maximizers.push_back(ev.strategy);
  }
  return cert;
}

double lhv_signed_linear_max() {
  double best = 0.0;
  for (int s1 : {+1, -1}) {
    for (int s2 : {+1, -1}) {
      for (unsigned bits = 0; bits < 16; ++bits) {
        const LocalStrategy s = strategy_from_bits(bits);
        const int value = s1 * (s.roll_left * s.roll_right - s.roll_left * s.look_right) +
                          s2 * (s.look_left * s.look_right + s.look_left * s.roll_right);
        if (value > best) best = value;
      }
    }
  }
  return best;
}

double BranchEnumeration::total_probability() const noexcept {
  double sum = 0.0;
  for (const WeightedBranch& b : branches) sum += b.probability;
  return sum;
}

JointDistribution BranchEnumeration::aggregate() const noexcept {
  JointDistribution dist;
  for (const WeightedBranch& b : branches) dist.slot(b.outcome) += b.probability;
  return dist;
}

BranchEnumeration branch_enumerate(const ModelParams& params, const Preparation& prep) {
  check_params(params);
  const FaceLayout layout = FaceLayout::build(params.n);
  BranchEnumeration enumeration;
  const auto add = [&enumeration](double probability, JointOutcome outcome) {
    if (probability == 0.0) return;
    enumeration.branches.push_back(WeightedBranch{probability, outcome});
  };
  add(1.0 - params.rho, JointOutcome{+1, +1});
  add(params.rho * (1.0 - params.epsilon), prep.target());
  const double per_orientation =
      params.rho * params.epsilon / static_cast<double>(params.n);
  for (int k = 0; k < params.n; ++k) add(per_orientation, layout.outcome_at(k));
  return enumeration;
}

}  // namespace prisms
