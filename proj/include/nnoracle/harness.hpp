#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nnoracle/encode.hpp"
#include "nnoracle/fnn.hpp"
#include "nnoracle/oracle.hpp"
#include "nnoracle/subject.hpp"

namespace nno::harness {

// Experiment driver reproducing the mutation study: train a network variant
// on sampled executions of the reference program, then measure how often it
// rejects error-exposing mutant executions (true positives, reported as the
// percentage of erroneous executions rejected) and correct executions (false
// positives). Note the polarity: these rates follow the experiment's usage,
// not oracle::classify's literal agreement taxonomy.

enum class Variant { Direct, Uni, Unimin, Lower, Center };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

struct ExperimentConfig {
  Variant variant = Variant::Uni;
  int n = 30;
  int aggressiveness = 0;
  fnn::TrainConfig train;  // train.seed is ignored; weight_seed is used
  int train_count = 500;
  int eval_correct_count = 500;
  int eval_per_mutant = 500;
  std::uint64_t data_seed = 1;
  std::uint64_t weight_seed = 1;
  // Measure false positives on the training inputs instead of a fresh set.
  bool fp_on_training_inputs = false;
  encode::InputScaling scaling = encode::InputScaling::MaxNormalized;
  int hidden_neurons = 24;
};

// Fixed variant -> abstraction / comparator / training pairings.
encode::AbstractionSpec abstraction_for(Variant v, int n);
oracle::ComparatorSpec comparator_for(Variant v, int aggressiveness);
fnn::TrainConfig default_train_config(Variant v);

// `count` records drawn uniformly without replacement, with targets encoded
// from the reference program's amounts.
std::vector<fnn::Sample> sample_training_set(const ExperimentConfig& cfg);

// `count` distinct records on which the mutant's amount differs from the
// reference amount. Rejection-samples the domain; falls back to exhaustive
// enumeration after `retry_budget` draws. Throws if fewer than `count`
// exposing inputs exist at all.
std::vector<subject::CustomerRecord> sample_exposing_set(int mutant_id, std::uint64_t seed,
                                                         int count,
                                                         std::int64_t retry_budget = 10'000'000);

struct EvaluationReport {
  double tp_rate = 0.0;   // % of the 21*eval_per_mutant erroneous executions rejected
  double fp_rate = 0.0;   // % of the eval_correct_count correct executions rejected
  double fp_sigma = 0.0;  // bagged std dev of fp_rate
  double mse_final = 0.0;
  std::array<double, subject::kMutantCount> per_mutant_tp{};
  std::array<double, subject::kMutantCount> per_mutant_fp_sigma{};
  ExperimentConfig config;
};

// Verdict on one observed execution (record, observed amount).
using Judge =
    std::function<oracle::Verdict(const subject::CustomerRecord& x, int observed_amount)>;

Judge oracle_judge(const fnn::Network& net, const encode::AbstractionSpec& aspec,
                   const oracle::ComparatorSpec& cspec, encode::InputScaling scaling);

// Ground-truth judge: rejects iff the observed amount differs from approve's.
Judge perfect_judge();

// Trains a network for cfg (data_seed -> training set, weight_seed -> init).
fnn::Network train_network(const ExperimentConfig& cfg,
                           const fnn::EpochCallback& on_epoch = {});

// Full pipeline: train, then evaluate.
EvaluationReport evaluate(const ExperimentConfig& cfg);

// Evaluation with an externally supplied judge (e.g. a loaded model or the
// perfect judge); mse_final is passed through into the report.
EvaluationReport evaluate_with(const Judge& judge, const ExperimentConfig& cfg,
                               double mse_final = 0.0);

// Population std dev of the rejection rates of 5 random bags of 100; the
// judgment list must have exactly 500 entries.
double bagged_stddev(std::span<const oracle::Verdict> judgments, std::uint64_t seed);

// --- sweeps ---

struct SweepPoint {
  std::string label;
  ExperimentConfig config;
};

struct SweepResult {
  SweepPoint point;
  std::optional<EvaluationReport> report;
  std::string error;  // set when this point failed
};

// Named grids: "fig2" (variant x aggressiveness), "fig3" (abstraction x N at
// A=0), "fig4" (uni_30 and lower_30 at A=0, per-mutant view).
std::vector<SweepPoint> preset_grid(const std::string& name);

// Evaluates every point; failures are recorded per row and do not abort the
// sweep. Deterministic output order regardless of thread count.
std::vector<SweepResult> run_sweep(std::span<const SweepPoint> points, int threads = 0);

std::string csv_header();
std::string csv_row(const SweepResult& r);
std::string to_csv(std::span<const SweepResult> results);

}  // namespace nno::harness
