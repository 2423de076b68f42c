#include "prisms/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace prisms {

int sample_single(SingleExperiment kind, SplitMix64& rng) noexcept {
  (void)kind;
  (void)rng;
  return +1;
}

TrialRecord sample_coincidence(const ModelParams& params, const Preparation& prep,
                               CoincidenceExperiment kind, const FaceLayout& layout,
                               SplitMix64& rng) {
  if (kind != CoincidenceExperiment::RollRoll)
    return TrialRecord{kind, JointOutcome{+1, +1}, TrialBranch::Fixed, -1};
  if (!rng.next_bernoulli(params.rho))
    return TrialRecord{kind, JointOutcome{+1, +1}, TrialBranch::Detached, -1};
  if (rng.next_bernoulli(1.0 - params.epsilon))
    return TrialRecord{kind, prep.target(), TrialBranch::Aimed, -1};
  const int k = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(params.n)));
  return TrialRecord{kind, layout.outcome_at(k), TrialBranch::RandomOrientation, k};
}

TrialRecord sample_coincidence(const ModelParams& params, const Preparation& prep,
                               CoincidenceExperiment kind, SplitMix64& rng) {
  check_params(params);
  const FaceLayout layout = FaceLayout::build(params.n);
  return sample_coincidence(params, prep, kind, layout, rng);
}

void OutcomeCounts::add(const JointOutcome& o) noexcept {
  if (o.left > 0) {
    if (o.right > 0) ++pp; else ++pm;
  } else {
    if (o.right > 0) ++mp; else ++mm;
  }
}

OutcomeCounts& OutcomeCounts::operator+=(const OutcomeCounts& other) noexcept {
  pp += other.pp;
  pm += other.pm;
  mp += other.mp;
  mm += other.mm;
  return *this;
}

double OutcomeCounts::expectation() const noexcept {
  const std::int64_t agree = static_cast<std::int64_t>(pp + mm);
  const std::int64_t disagree = static_cast<std::int64_t>(pm + mp);
  return static_cast<double>(agree - disagree) / static_cast<double>(total());
}

double OutcomeCounts::expectation_stderr() const noexcept {
  const double e = expectation();
  const double variance = 1.0 - e * e;
  if (variance <= 0.0) return 0.0;
  return std::sqrt(variance / static_cast<double>(total()));
}

void BranchCounts::add(TrialBranch b) noexcept {
  switch (b) {
    case TrialBranch::Fixed: ++fixed; break;
    case TrialBranch::Detached: ++detached; break;
    case TrialBranch::Aimed: ++aimed; break;
    case TrialBranch::RandomOrientation: ++random_orientation; break;
  }
}

BranchCounts& BranchCounts::operator+=(const BranchCounts& other) noexcept {
  fixed += other.fixed;
  detached += other.detached;
  aimed += other.aimed;
  random_orientation += other.random_orientation;
  return *this;
}

namespace {

struct ChunkTally {
  OutcomeCounts outcomes;
  BranchCounts branches;
};

ChunkTally run_chunk(const ModelParams& params, const Preparation& prep,
                     CoincidenceExperiment kind, const FaceLayout& layout,
                     std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
  ChunkTally tally;
  const auto experiment_index =
      static_cast<std::uint32_t>(static_cast<std::uint8_t>(kind));
  for (std::uint64_t t = begin; t < end; ++t) {
    SplitMix64 rng = trial_stream(seed, experiment_index, t);
    const TrialRecord rec = sample_coincidence(params, prep, kind, layout, rng);
    tally.outcomes.add(rec.outcome);
    tally.branches.add(rec.branch);
  }
  return tally;
}

}  // namespace

EstimateReport estimate(const ModelParams& params, const Preparation& prep,
                        std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  check_params(params);
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (workers == 0) workers = 1;
  const FaceLayout layout = FaceLayout::build(params.n);

  EstimateReport report;
  report.params = params;
  report.prep = prep;
  report.trials = trials;
  report.seed = seed;

  for (std::size_t idx = 0; idx < kCoincidenceExperiments.size(); ++idx) {
    const CoincidenceExperiment kind = kCoincidenceExperiments[idx];
    const std::uint64_t chunk_count =
        workers > trials ? trials : static_cast<std::uint64_t>(workers);
    std::vector<ChunkTally> tallies(chunk_count);
    const std::uint64_t per_chunk = (trials + chunk_count - 1) / chunk_count;

    if (chunk_count == 1) {
      tallies[0] = run_chunk(params, prep, kind, layout, seed, 0, trials);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(chunk_count);
      for (std::uint64_t c = 0; c < chunk_count; ++c) {
        const std::uint64_t begin = c * per_chunk;
        const std::uint64_t end = begin + per_chunk < trials ? begin + per_chunk : trials;
        pool.emplace_back([&, c, begin, end] {
          tallies[c] = run_chunk(params, prep, kind, layout, seed, begin, end);
        });
      }
      for (std::thread& t : pool) t.join();
    }

    // Integer sums in fixed chunk order: identical totals for any partition.
    for (const ChunkTally& tally : tallies) {
      report.counts[idx] += tally.outcomes;
      if (kind == CoincidenceExperiment::RollRoll) report.branches += tally.branches;
    }
  }

  report.table.e_ab = report.counts[0].expectation();
  report.table.e_abp = report.counts[1].expectation();
  report.table.e_apb = report.counts[2].expectation();
  report.table.e_apbp = report.counts[3].expectation();
  report.i_hat = chsh_from_table(report.table).value;
  report.se_i = report.counts[0].expectation_stderr() + report.counts[1].expectation_stderr() +
                report.counts[2].expectation_stderr() + report.counts[3].expectation_stderr();
  return report;
}

}  // namespace prisms
