#pragma once

#include <array>
#include <cstdint>

#include "prisms/analytic.hpp"
#include "prisms/model.hpp"
#include "prisms/rng.hpp"

namespace prisms {

// Which branch of the mechanism decided a trial's outcome.
enum class TrialBranch : std::uint8_t {
  Fixed,              // experiment kind leaves no randomness (RollLook, LookRoll, LookLook)
  Detached,           // rod fell during the joint strike; both prisms end on '+'
  Aimed,              // rod held and the aimed roll succeeded; preparation target
  RandomOrientation,  // rod held, aim missed; uniform joint orientation
};

struct TrialRecord {
  CoincidenceExperiment kind = CoincidenceExperiment::RollRoll;
  JointOutcome outcome;
  TrialBranch branch = TrialBranch::Fixed;
  int orientation = -1;  // face index when branch == RandomOrientation
};

// Outcome of a single experiment. Always +1: a lone roll stops on one of
// the two '+' faces and a look reads the face already showing. The stream
// argument keeps the sampling interface uniform; no draw is consumed
// because which '+' face the roll stops on never changes the reading.
int sample_single(SingleExperiment kind, SplitMix64& rng) noexcept;

// One coincidence trial. Draw order for RollRoll: rod survival, then aim
// success, then (only on a miss) the uniform orientation.
TrialRecord sample_coincidence(const ModelParams& params, const Preparation& prep,
                               CoincidenceExperiment kind, const FaceLayout& layout,
                               SplitMix64& rng);
TrialRecord sample_coincidence(const ModelParams& params, const Preparation& prep,
                               CoincidenceExperiment kind, SplitMix64& rng);

// Integer tallies of the four outcome pairs. All derived statistics are
// computed from these, so two runs with equal tallies report identical
// bytes.
struct OutcomeCounts {
  std::uint64_t pp = 0;
  std::uint64_t pm = 0;
  std::uint64_t mp = 0;
  std::uint64_t mm = 0;

  std::uint64_t total() const noexcept { return pp + pm + mp + mm; }
  void add(const JointOutcome& o) noexcept;
  OutcomeCounts& operator+=(const OutcomeCounts& other) noexcept;

  // Sample mean of the +/-1 product.
  double expectation() const noexcept;
  // Plug-in standard error sqrt((1 - E^2) / total).
  double expectation_stderr() const noexcept;
};

struct BranchCounts {
  std::uint64_t fixed = 0;
  std::uint64_t detached = 0;
  std::uint64_t aimed = 0;
  std::uint64_t random_orientation = 0;

  void add(TrialBranch b) noexcept;
  BranchCounts& operator+=(const BranchCounts& other) noexcept;
};

struct EstimateReport {
  ModelParams params;
  Preparation prep = Preparation::regime_a();
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // Indexed like kCoincidenceExperiments: RollRoll, RollLook, LookRoll, LookLook.
  std::array<OutcomeCounts, 4> counts{};
  // Branches of the RollRoll experiment only; the other three are all Fixed.
  BranchCounts branches;
  ExpectationTable table;
  double i_hat = 0.0;
  // Conservative: the four per-term standard errors summed.
  double se_i = 0.0;
};

// Runs `trials` samples of each of the four coincidence experiments. Trial
// t of experiment e draws from trial_stream(seed, e, t), so the report is a
// pure function of (params, prep, trials, seed) no matter how many workers
// split the loop.
EstimateReport estimate(const ModelParams& params, const Preparation& prep,
                        std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

}  // namespace prisms
