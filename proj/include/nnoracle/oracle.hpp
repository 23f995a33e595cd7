#pragma once

#include <string>

#include "nnoracle/types.hpp"

namespace nno::oracle {

// Comparators turn a network prediction plus an observed program output into
// an accept/reject verdict. Aggressiveness A in 0..5 decides the non-clear-cut
// cases of the categorical comparator: 0 always accepts them, 5 always
// rejects. For the Euclidean comparator A tightens the distance threshold.

enum class Comparator { Euclidean, Categorical };

struct ComparatorSpec {
  Comparator kind = Comparator::Categorical;
  int aggressiveness = 0;  // 0..5
  double eps_max = 0.09;   // Euclidean acceptance radius at A=0
  double th_low = 0.2;     // categorical confidence thresholds
  double th_high = 0.8;

  bool operator==(const ComparatorSpec&) const = default;
};

enum class Verdict { Accept, Reject };

enum class Reason { ObviousMatch, ObviousMismatch, NonClearCut };

struct Judgment {
  Verdict verdict = Verdict::Accept;
  Reason reason = Reason::NonClearCut;

  bool operator==(const Judgment&) const = default;
};

// Positive here means "judged correct": an Accept on a correct execution is
// a true positive. This is the literal agreement taxonomy; the experiment
// harness reports rejection-based rates instead and says so there.
enum class Classification { TruePositive, TrueNegative, FalsePositive, FalseNegative };

// Accept iff |observed - predicted| < eps_max - 0.01*A. Both values are
// amounts normalized to [0,1]. The verdict is binary, never non-clear-cut.
Judgment judge_euclidean(const ComparatorSpec& spec, double predicted, double observed);

// The categorical case table over z_obs (observed, one-hot) and z_net (raw
// network output). With k=winner(z_obs), j=winner(z_net), agree=(k==j) taken
// as 1.0/0.0 and c=z_net[j]:
//   agree and |1-c| < th_low        -> Accept (obvious match)
//   !agree and |0-c| > th_high      -> Reject (obvious mismatch)
//   otherwise non-clear-cut, by A:
//     0 accept; 1 accept unless agree and |1-c| > th_high; 2 accept iff
//     agree; 3 accept iff !agree or |1-c| > th_high; 4 accept iff
//     |agree-c| < th_low; 5 reject.
Judgment judge_categorical(const ComparatorSpec& spec, const VectorRef& z_obs,
                           const VectorRef& z_net);

Classification classify(Verdict verdict, bool ground_truth_correct);

std::string to_string(Verdict v);
std::string to_string(Reason r);

}  // namespace nno::oracle
