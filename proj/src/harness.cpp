#include "nnoracle/harness.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <cstdio>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "nnoracle/rng.hpp"

namespace nno::harness {

namespace {

// Tags for deriving independent sampling streams from data_seed.
constexpr std::uint64_t kTagTraining = 1;
constexpr std::uint64_t kTagEvalCorrect = 2;
constexpr std::uint64_t kTagFpBags = 3;
constexpr std::uint64_t kTagExposingBase = 100;  // +mutant id
constexpr std::uint64_t kTagMutantBags = 200;    // +mutant id

std::vector<subject::CustomerRecord> sample_distinct_records(std::uint64_t seed, int count) {
  if (count < 1 || count > subject::kDomainSize)
    throw std::invalid_argument("harness: record count out of range");
  Rng rng(seed);
  std::unordered_set<std::int64_t> seen;
  std::vector<subject::CustomerRecord> records;
  records.reserve(static_cast<std::size_t>(count));
  while (records.size() < static_cast<std::size_t>(count)) {
    const auto idx =
        static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(subject::kDomainSize)));
    if (seen.insert(idx).second) records.push_back(subject::record_at(idx));
  }
  return records;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Direct: return "direct";
    case Variant::Uni: return "uni";
    case Variant::Unimin: return "unimin";
    case Variant::Lower: return "lower";
    case Variant::Center: return "center";
  }
  return "?";
}

Variant variant_from_string(const std::string& name) {
  if (name == "direct") return Variant::Direct;
  if (name == "uni") return Variant::Uni;
  if (name == "unimin") return Variant::Unimin;
  if (name == "lower") return Variant::Lower;
  if (name == "center") return Variant::Center;
  throw std::invalid_argument("harness: unknown variant '" + name + "'");
}

encode::AbstractionSpec abstraction_for(Variant v, int n) {
  encode::AbstractionSpec spec;
  switch (v) {
    case Variant::Direct: spec.kind = encode::Abstraction::Direct; break;
    case Variant::Uni:
    case Variant::Unimin: spec.kind = encode::Abstraction::Uniform; break;
    case Variant::Lower: spec.kind = encode::Abstraction::LowStretch; break;
    case Variant::Center: spec.kind = encode::Abstraction::CenterStretch; break;
  }
  if (spec.kind != encode::Abstraction::Direct) {
    if (n < 2 || n > 1024) throw std::invalid_argument("harness: n must be in 2..1024");
    spec.n = n;
  }
  return spec;
}

oracle::ComparatorSpec comparator_for(Variant v, int aggressiveness) {
  oracle::ComparatorSpec spec;
  spec.aggressiveness = aggressiveness;
  if (v == Variant::Direct) {
    spec.kind = oracle::Comparator::Euclidean;
  } else {
    spec.kind = oracle::Comparator::Categorical;
    // unimin widens the non-clear-cut band.
    spec.th_low = v == Variant::Unimin ? 0.1 : 0.2;
    spec.th_high = v == Variant::Unimin ? 0.9 : 0.8;
  }
  return spec;
}

fnn::TrainConfig default_train_config(Variant v) {
  fnn::TrainConfig cfg;
  cfg.mode = fnn::LearningMode::Incremental;
  if (v == Variant::Direct) {
    cfg.learning_rate = 0.1;
    cfg.epochs = 10000;
  } else {
    cfg.learning_rate = 0.5;
    cfg.epochs = 1500;
  }
  return cfg;
}

std::vector<fnn::Sample> sample_training_set(const ExperimentConfig& cfg) {
  const auto aspec = abstraction_for(cfg.variant, cfg.n);
  const auto records = sample_distinct_records(mix_seed(cfg.data_seed, kTagTraining),
                                               cfg.train_count);
  std::vector<fnn::Sample> samples;
  samples.reserve(records.size());
  for (const auto& x : records)
    samples.push_back({encode::normalize_input(x, cfg.scaling),
                       encode::encode_output(aspec, subject::approve(x).amount)});
  return samples;
}

std::vector<subject::CustomerRecord> sample_exposing_set(int mutant_id, std::uint64_t seed,
                                                         int count, std::int64_t retry_budget) {
  if (count < 1) throw std::invalid_argument("harness: exposing count must be >= 1");
  Rng rng(seed);
  std::unordered_set<std::int64_t> seen;
  std::vector<subject::CustomerRecord> records;
  records.reserve(static_cast<std::size_t>(count));
  for (std::int64_t draws = 0; draws < retry_budget &&
                               records.size() < static_cast<std::size_t>(count);
       ++draws) {
    const auto idx =
        static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(subject::kDomainSize)));
    if (!seen.insert(idx).second) continue;
    const auto x = subject::record_at(idx);
    if (subject::is_exposing(mutant_id, x)) records.push_back(x);
  }
  if (records.size() == static_cast<std::size_t>(count)) return records;

  // Retry budget exhausted: enumerate every exposing input and draw without
  // replacement from that list.
  std::vector<std::int64_t> exposing;
  for (std::int64_t i = 0; i < subject::kDomainSize; ++i)
    if (subject::is_exposing(mutant_id, subject::record_at(i))) exposing.push_back(i);
  if (exposing.size() < static_cast<std::size_t>(count))
    throw std::runtime_error("harness: M" + std::to_string(mutant_id) + " has only " +
                             std::to_string(exposing.size()) + " exposing inputs, need " +
                             std::to_string(count));
  records.clear();
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::int64_t>(uniform_below(
                           rng, static_cast<std::uint64_t>(exposing.size() - i)));
    std::swap(exposing[static_cast<std::size_t>(i)], exposing[static_cast<std::size_t>(j)]);
    records.push_back(subject::record_at(exposing[static_cast<std::size_t>(i)]));
  }
  return records;
}

Judge oracle_judge(const fnn::Network& net, const encode::AbstractionSpec& aspec,
                   const oracle::ComparatorSpec& cspec, encode::InputScaling scaling) {
  return [net, aspec, cspec, scaling](const subject::CustomerRecord& x,
                                      int observed_amount) -> oracle::Verdict {
    const Vector out = fnn::forward(net, encode::normalize_input(x, scaling));
    if (cspec.kind == oracle::Comparator::Euclidean)
      return oracle::judge_euclidean(cspec, out[0], observed_amount / aspec.y_max).verdict;
    const Vector z_obs = encode::encode_output(aspec, observed_amount);
    return oracle::judge_categorical(cspec, z_obs, out).verdict;
  };
}

Judge perfect_judge() {
  return [](const subject::CustomerRecord& x, int observed_amount) {
    return observed_amount == subject::approve(x).amount ? oracle::Verdict::Accept
                                                         : oracle::Verdict::Reject;
  };
}

fnn::Network train_network(const ExperimentConfig& cfg, const fnn::EpochCallback& on_epoch) {
  const auto samples = sample_training_set(cfg);
  const auto aspec = abstraction_for(cfg.variant, cfg.n);
  fnn::TrainConfig train = cfg.train;
  train.seed = cfg.weight_seed;
  auto net = fnn::init({8, cfg.hidden_neurons, aspec.output_dim()}, cfg.weight_seed,
                       train.init_half_range);
  return fnn::train(std::move(net), samples, train, on_epoch);
}

double bagged_stddev(std::span<const oracle::Verdict> judgments, std::uint64_t seed) {
  constexpr int kBags = 5;
  constexpr int kBagSize = 100;
  if (judgments.size() != kBags * kBagSize)
    throw std::domain_error("harness: bagged_stddev needs exactly 500 judgments");
  std::vector<std::size_t> order(judgments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i)
    std::swap(order[i], order[uniform_below(rng, i + 1)]);
  double mean = 0.0;
  std::array<double, kBags> rates{};
  for (int b = 0; b < kBags; ++b) {
    int rejected = 0;
    for (int k = 0; k < kBagSize; ++k)
      if (judgments[order[static_cast<std::size_t>(b * kBagSize + k)]] == oracle::Verdict::Reject)
        ++rejected;
    rates[static_cast<std::size_t>(b)] = 100.0 * rejected / kBagSize;
    mean += rates[static_cast<std::size_t>(b)];
  }
  mean /= kBags;
  double var = 0.0;
  for (double r : rates) var += (r - mean) * (r - mean);
  return std::sqrt(var / kBags);
}

EvaluationReport evaluate_with(const Judge& judge, const ExperimentConfig& cfg,
                               double mse_final) {
  EvaluationReport report;
  report.config = cfg;
  report.mse_final = mse_final;

  // Correct executions.
  const auto correct_records =
      cfg.fp_on_training_inputs
          ? sample_distinct_records(mix_seed(cfg.data_seed, kTagTraining), cfg.train_count)
          : sample_distinct_records(mix_seed(cfg.data_seed, kTagEvalCorrect),
                                    cfg.eval_correct_count);
  std::vector<oracle::Verdict> fp_verdicts;
  fp_verdicts.reserve(correct_records.size());
  int fp_rejected = 0;
  for (const auto& x : correct_records) {
    const auto v = judge(x, subject::approve(x).amount);
    fp_verdicts.push_back(v);
    if (v == oracle::Verdict::Reject) ++fp_rejected;
  }
  report.fp_rate = 100.0 * fp_rejected / static_cast<double>(fp_verdicts.size());
  const bool baggable = fp_verdicts.size() == 500;
  if (baggable)
    report.fp_sigma = bagged_stddev(fp_verdicts, mix_seed(cfg.data_seed, kTagFpBags));

  // Error-exposing executions, per mutant.
  std::int64_t total_rejected = 0;
  for (int id = 1; id <= subject::kMutantCount; ++id) {
    const auto exposing = sample_exposing_set(
        id, mix_seed(cfg.data_seed, kTagExposingBase + static_cast<std::uint64_t>(id)),
        cfg.eval_per_mutant);
    int rejected = 0;
    for (const auto& x : exposing)
      if (judge(x, subject::mutant(id, x).amount) == oracle::Verdict::Reject) ++rejected;
    report.per_mutant_tp[static_cast<std::size_t>(id - 1)] =
        100.0 * rejected / static_cast<double>(exposing.size());
    total_rejected += rejected;
    if (baggable)
      report.per_mutant_fp_sigma[static_cast<std::size_t>(id - 1)] = bagged_stddev(
          fp_verdicts, mix_seed(cfg.data_seed, kTagMutantBags + static_cast<std::uint64_t>(id)));
  }
  report.tp_rate = 100.0 * static_cast<double>(total_rejected) /
                   static_cast<double>(subject::kMutantCount * cfg.eval_per_mutant);
  return report;
}

EvaluationReport evaluate(const ExperimentConfig& cfg) {
  const auto net = train_network(cfg);
  const double final_mse = fnn::mse(net, sample_training_set(cfg));
  const auto judge = oracle_judge(net, abstraction_for(cfg.variant, cfg.n),
                                  comparator_for(cfg.variant, cfg.aggressiveness), cfg.scaling);
  return evaluate_with(judge, cfg, final_mse);
}

std::vector<SweepPoint> preset_grid(const std::string& name) {
  std::vector<SweepPoint> points;
  auto make = [](Variant v, int n, int aggressiveness) {
    ExperimentConfig cfg;
    cfg.variant = v;
    cfg.n = n;
    cfg.aggressiveness = aggressiveness;
    cfg.train = default_train_config(v);
    return cfg;
  };
  if (name == "fig2") {
    struct Series {
      Variant v;
      int n;
      fnn::LearningMode mode;
    };
    const Series series[] = {{Variant::Direct, 2, fnn::LearningMode::Incremental},
                             {Variant::Uni, 30, fnn::LearningMode::Incremental},
                             {Variant::Unimin, 10, fnn::LearningMode::Incremental},
                             {Variant::Unimin, 10, fnn::LearningMode::Batch},
                             {Variant::Lower, 30, fnn::LearningMode::Incremental},
                             {Variant::Center, 30, fnn::LearningMode::Incremental}};
    for (const auto& s : series)
      for (int a = 0; a <= 5; ++a) {
        auto cfg = make(s.v, s.n, a);
        cfg.train.mode = s.mode;
        std::string label = to_string(s.v);
        if (s.v != Variant::Direct) label += "_" + std::to_string(s.n);
        if (s.mode == fnn::LearningMode::Batch) label += "_batch";
        points.push_back({label, cfg});
      }
  } else if (name == "fig3") {
    for (Variant v : {Variant::Uni, Variant::Lower, Variant::Center})
      for (int n = 10; n <= 60; n += 10)
        points.push_back({to_string(v) + "_" + std::to_string(n), make(v, n, 0)});
  } else if (name == "fig4") {
    points.push_back({"uni_30", make(Variant::Uni, 30, 0)});
    points.push_back({"lower_30", make(Variant::Lower, 30, 0)});
  } else {
    throw std::invalid_argument("harness: unknown preset '" + name + "'");
  }
  return points;
}

namespace {

// Networks are shared between grid points that differ only in judging
// parameters (e.g. aggressiveness), so each distinct training runs once.
std::string training_key(const ExperimentConfig& cfg) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s|n=%d|mode=%d|lr=%.17g|ep=%d|init=%.17g|ds=%llu|ws=%llu|tc=%d|sc=%d|h=%d",
                to_string(cfg.variant).c_str(), cfg.variant == Variant::Direct ? 0 : cfg.n,
                static_cast<int>(cfg.train.mode), cfg.train.learning_rate, cfg.train.epochs,
                cfg.train.init_half_range, static_cast<unsigned long long>(cfg.data_seed),
                static_cast<unsigned long long>(cfg.weight_seed), cfg.train_count,
                static_cast<int>(cfg.scaling), cfg.hidden_neurons);
  // uni and unimin train identically on the same abstraction.
  std::string key(buf);
  if (cfg.variant == Variant::Unimin) key.replace(0, 6, "uni");
  return key;
}

struct TrainedNet {
  fnn::Network net;
  double mse_final = 0.0;
  std::string error;
};

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& body) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<SweepResult> run_sweep(std::span<const SweepPoint> points, int threads) {
  std::vector<std::string> keys;
  std::map<std::string, TrainedNet> trained;
  for (const auto& p : points)
    if (trained.emplace(training_key(p.config), TrainedNet{}).second)
      keys.push_back(training_key(p.config));

  std::map<std::string, const SweepPoint*> key_owner;
  for (const auto& p : points) key_owner.emplace(training_key(p.config), &p);

  parallel_for(keys.size(), threads, [&](std::size_t i) {
    const SweepPoint& p = *key_owner.at(keys[i]);
    TrainedNet& slot = trained.at(keys[i]);
    try {
      slot.net = train_network(p.config);
      slot.mse_final = fnn::mse(slot.net, sample_training_set(p.config));
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
  });

  std::vector<SweepResult> results(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const SweepPoint& p = points[i];
    results[i].point = p;
    const TrainedNet& t = trained.at(training_key(p.config));
    if (!t.error.empty()) {
      results[i].error = t.error;
      return;
    }
    try {
      const auto judge =
          oracle_judge(t.net, abstraction_for(p.config.variant, p.config.n),
                       comparator_for(p.config.variant, p.config.aggressiveness),
                       p.config.scaling);
      results[i].report = evaluate_with(judge, p.config, t.mse_final);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });
  return results;
}

std::string csv_header() {
  std::string h = "variant,n,aggressiveness,mode,lr,epochs,data_seed,weight_seed,"
                  "mse_final,tp_rate,fp_rate,fp_sigma";
  for (int id = 1; id <= subject::kMutantCount; ++id) h += ",m" + std::to_string(id) + "_tp";
  h += ",error";
  return h;
}

std::string csv_row(const SweepResult& r) {
  const ExperimentConfig& cfg = r.point.config;
  char buf[128];
  std::string row = to_string(cfg.variant);
  row += "," + std::to_string(cfg.variant == Variant::Direct ? 1 : cfg.n);
  row += "," + std::to_string(cfg.aggressiveness);
  row += cfg.train.mode == fnn::LearningMode::Incremental ? ",incremental" : ",batch";
  std::snprintf(buf, sizeof buf, ",%g,%d,%llu,%llu", cfg.train.learning_rate, cfg.train.epochs,
                static_cast<unsigned long long>(cfg.data_seed),
                static_cast<unsigned long long>(cfg.weight_seed));
  row += buf;
  if (r.report) {
    const EvaluationReport& rep = *r.report;
    std::snprintf(buf, sizeof buf, ",%.8g,%.2f,%.2f,%.2f", rep.mse_final, rep.tp_rate,
                  rep.fp_rate, rep.fp_sigma);
    row += buf;
    for (double tp : rep.per_mutant_tp) {
      std::snprintf(buf, sizeof buf, ",%.2f", tp);
      row += buf;
    }
    row += ",";
  } else {
    for (int i = 0; i < 4 + subject::kMutantCount; ++i) row += ",";
    std::string msg = r.error;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    row += "," + msg;
  }
  return row;
}

std::string to_csv(std::span<const SweepResult> results) {
  std::string csv = csv_header() + "\n";
  for (const auto& r : results) csv += csv_row(r) + "\n";
  return csv;
}

}  // namespace nno::harness
