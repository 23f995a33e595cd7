#include "nnoracle/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "nnoracle/encode.hpp"

namespace nno::oracle {

namespace {

void check_aggressiveness(const ComparatorSpec& spec) {
  if (spec.aggressiveness < 0 || spec.aggressiveness > 5)
    throw std::invalid_argument("oracle: aggressiveness must be in 0..5");
}

}  // namespace

Judgment judge_euclidean(const ComparatorSpec& spec, double predicted, double observed) {
  if (spec.kind != Comparator::Euclidean)
    throw std::invalid_argument("oracle: judge_euclidean needs a Euclidean spec");
  check_aggressiveness(spec);
  const double eps = spec.eps_max - 0.01 * spec.aggressiveness;
  const bool accept = std::abs(observed - predicted) < eps;
  return accept ? Judgment{Verdict::Accept, Reason::ObviousMatch}
                : Judgment{Verdict::Reject, Reason::ObviousMismatch};
}

Judgment judge_categorical(const ComparatorSpec& spec, const VectorRef& z_obs,
                           const VectorRef& z_net) {
  if (spec.kind != Comparator::Categorical)
    throw std::invalid_argument("oracle: judge_categorical needs a Categorical spec");
  check_aggressiveness(spec);
  if (z_obs.size() != z_net.size())
    throw std::domain_error("oracle: observed and predicted vectors differ in length");

  const int k = encode::winner(z_obs);
  const int j = encode::winner(z_net);
  const bool agree = k == j;
  const double agree_val = agree ? 1.0 : 0.0;
  const double c = z_net[j];

  if (agree && std::abs(agree_val - c) < spec.th_low)
    return {Verdict::Accept, Reason::ObviousMatch};
  if (!agree && std::abs(agree_val - c) > spec.th_high)
    return {Verdict::Reject, Reason::ObviousMismatch};

  bool accept = false;
  switch (spec.aggressiveness) {
    case 0: accept = true; break;
    case 1: accept = !(agree && std::abs(1.0 - c) > spec.th_high); break;
    case 2: accept = agree; break;
    case 3: accept = !agree || std::abs(1.0 - c) > spec.th_high; break;
    case 4: accept = std::abs(agree_val - c) < spec.th_low; break;
    case 5: accept = false; break;
  }
  return {accept ? Verdict::Accept : Verdict::Reject, Reason::NonClearCut};
}

Classification classify(Verdict verdict, bool ground_truth_correct) {
  if (verdict == Verdict::Accept)
    return ground_truth_correct ? Classification::TruePositive : Classification::FalseNegative;
  return ground_truth_correct ? Classification::FalsePositive : Classification::TrueNegative;
}

std::string to_string(Verdict v) { return v == Verdict::Accept ? "accept" : "reject"; }

std::string to_string(Reason r) {
  switch (r) {
    case Reason::ObviousMatch: return "obvious_match";
    case Reason::ObviousMismatch: return "obvious_mismatch";
    case Reason::NonClearCut: return "non_clear_cut";
  }
  return "?";
}

}  // namespace nno::oracle
