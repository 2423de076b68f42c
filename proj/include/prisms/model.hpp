#pragma once

#include <array>
#include <cstdint>

namespace prisms {

// A prism face carries one of two symbols. '+' faces are the low-friction
// ones a lone roll always stops on; '-' faces are the ordinary ones.
enum class Face : std::uint8_t { Plus, Minus };

constexpr int face_value(Face f) noexcept { return f == Face::Plus ? +1 : -1; }

// Outcome pair of a coincidence experiment, one reading per prism.
// Components are +1 or -1.
struct JointOutcome {
  int left = +1;
  int right = +1;

  constexpr int product() const noexcept { return left * right; }
  friend constexpr bool operator==(const JointOutcome&, const JointOutcome&) = default;
};

// Single experiments: strike one prism so it rolls, or just look at its
// upper face without touching it.
enum class SingleExperiment : std::uint8_t {
  RollLeft,
  LookLeft,
  RollRight,
  LookRight,
};

// Coincidence experiments are ordered pairs of one left-prism and one
// right-prism single experiment. Striking both prisms at once (RollRoll)
// is the only combination with a stochastic outcome; the other three leave
// at least one prism untouched long enough that both readings are fixed.
enum class CoincidenceExperiment : std::uint8_t {
  RollRoll,  // strike both; CHSH setting pair ab
  RollLook,  // strike left, inspect right; ab'
  LookRoll,  // inspect left, strike right; a'b
  LookLook,  // inspect both; a'b'
};

inline constexpr std::array<CoincidenceExperiment, 4> kCoincidenceExperiments = {
    CoincidenceExperiment::RollRoll,
    CoincidenceExperiment::RollLook,
    CoincidenceExperiment::LookRoll,
    CoincidenceExperiment::LookLook,
};

constexpr SingleExperiment left_part(CoincidenceExperiment e) noexcept {
  return (e == CoincidenceExperiment::RollRoll || e == CoincidenceExperiment::RollLook)
             ? SingleExperiment::RollLeft
             : SingleExperiment::LookLeft;
}

constexpr SingleExperiment right_part(CoincidenceExperiment e) noexcept {
  return (e == CoincidenceExperiment::RollRoll || e == CoincidenceExperiment::LookRoll)
             ? SingleExperiment::RollRight
             : SingleExperiment::LookRight;
}

// Pairs a left-prism experiment with a right-prism one. Throws
// std::invalid_argument if either argument acts on the wrong prism.
CoincidenceExperiment coincidence_of(SingleExperiment left, SingleExperiment right);

// Standard CHSH setting labels: roll is the unprimed setting, look the
// primed one.
constexpr const char* label(CoincidenceExperiment e) noexcept {
  switch (e) {
    case CoincidenceExperiment::RollRoll: return "ab";
    case CoincidenceExperiment::RollLook: return "ab'";
    case CoincidenceExperiment::LookRoll: return "a'b";
    case CoincidenceExperiment::LookLook: return "a'b'";
  }
  return "?";
}

// Preparation regimes for the joint roll. A aims at anti-correlated upper
// faces, B at doubly negative ones.
enum class Regime : std::uint8_t { A, B };

constexpr char regime_letter(Regime r) noexcept { return r == Regime::A ? 'A' : 'B'; }

// n: number of lateral faces of each prism (even, at least 4).
// epsilon: probability that the aimed joint roll misses and the final joint
//   orientation is uniform instead.
// rho: probability that the rod coupling the prisms survives the strike.
struct ModelParams {
  int n = 4;
  double epsilon = 0.0;
  double rho = 1.0;
};

// Returns the validated triple or throws std::invalid_argument naming the
// violated bound.
ModelParams validate_params(int n, double epsilon, double rho);

// Re-checks an already-built triple. Every public operation taking
// ModelParams calls this before computing.
void check_params(const ModelParams& params);

// What the experimenter aims the joint roll at. Regime A targets one of the
// two anti-correlated readings, (-1,+1) by default or its mirror (+1,-1);
// regime B targets (-1,-1). Which anti-correlated reading regime A uses
// never changes any CHSH value.
class Preparation {
 public:
  static Preparation regime_a() { return {Regime::A, JointOutcome{-1, +1}}; }
  static Preparation regime_a_mirror() { return {Regime::A, JointOutcome{+1, -1}}; }
  static Preparation regime_b() { return {Regime::B, JointOutcome{-1, -1}}; }
  static Preparation canonical(Regime r) {
    return r == Regime::A ? regime_a() : regime_b();
  }

  Regime regime() const noexcept { return regime_; }
  JointOutcome target() const noexcept { return target_; }

 private:
  Preparation(Regime regime, JointOutcome target) : regime_(regime), target_(target) {}

  Regime regime_;
  JointOutcome target_;
};

// How many of the n joint orientations produce each outcome pair.
struct OrientationCounts {
  int pp = 0;  // (+1, +1)
  int pm = 0;  // (+1, -1)
  int mp = 0;  // (-1, +1)
  int mm = 0;  // (-1, -1)

  constexpr int total() const noexcept { return pp + pm + mp + mm; }
};

// Joint face labelling of the two coupled prisms. The rod locks the prisms
// together, so a single orientation index k in [0, n) fixes both upper
// faces. Each prism has exactly two '+' faces, diametrically opposed; the
// right prism's pair sits one step ahead of the left's, so no orientation
// shows '+' on both.
class FaceLayout {
 public:
  // Throws std::invalid_argument unless n is even and at least 4.
  static FaceLayout build(int n);

  int n() const noexcept { return n_; }
  const std::array<int, 2>& plus_left() const noexcept { return plus_left_; }
  const std::array<int, 2>& plus_right() const noexcept { return plus_right_; }

  // Upper-face readings at joint orientation k. Throws std::out_of_range
  // unless 0 <= k < n.
  JointOutcome outcome_at(int k) const;

  // Tally of outcome_at over all n orientations; always (0, 2, 2, n-4).
  OrientationCounts orientation_counts() const noexcept;

 private:
  FaceLayout(int n, std::array<int, 2> plus_left, std::array<int, 2> plus_right)
      : n_(n), plus_left_(plus_left), plus_right_(plus_right) {}

  int n_;
  std::array<int, 2> plus_left_;
  std::array<int, 2> plus_right_;
};

}  // namespace prisms
