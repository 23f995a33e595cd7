#include <doctest.h>

#include <algorithm>
#include <set>

#include "nnoracle/harness.hpp"
#include "nnoracle/rng.hpp"

using namespace nno;
using harness::ExperimentConfig;
using harness::Variant;
using oracle::Verdict;

namespace {

ExperimentConfig tiny_config(Variant v = Variant::Uni) {
  ExperimentConfig cfg;
  cfg.variant = v;
  cfg.n = 10;
  cfg.train = harness::default_train_config(v);
  cfg.train.epochs = 5;
  cfg.train_count = 40;
  cfg.eval_correct_count = 60;
  cfg.eval_per_mutant = 25;
  cfg.data_seed = 7;
  cfg.weight_seed = 17;
  return cfg;
}

}  // namespace

TEST_CASE("variant pairings") {
  CHECK(harness::abstraction_for(Variant::Direct, 30).kind == encode::Abstraction::Direct);
  CHECK(harness::abstraction_for(Variant::Direct, 30).output_dim() == 1);
  CHECK(harness::abstraction_for(Variant::Uni, 30).kind == encode::Abstraction::Uniform);
  CHECK(harness::abstraction_for(Variant::Unimin, 10).kind == encode::Abstraction::Uniform);
  CHECK(harness::abstraction_for(Variant::Lower, 30).kind == encode::Abstraction::LowStretch);
  CHECK(harness::abstraction_for(Variant::Center, 30).kind ==
        encode::Abstraction::CenterStretch);
  CHECK_THROWS_AS(harness::abstraction_for(Variant::Uni, 1), std::invalid_argument);

  CHECK(harness::comparator_for(Variant::Direct, 2).kind == oracle::Comparator::Euclidean);
  const auto uni = harness::comparator_for(Variant::Uni, 0);
  CHECK(uni.th_low == 0.2);
  CHECK(uni.th_high == 0.8);
  const auto unimin = harness::comparator_for(Variant::Unimin, 0);
  CHECK(unimin.th_low == 0.1);
  CHECK(unimin.th_high == 0.9);

  CHECK(harness::default_train_config(Variant::Uni).epochs == 1500);
  CHECK(harness::default_train_config(Variant::Uni).learning_rate == 0.5);
  CHECK(harness::default_train_config(Variant::Direct).epochs == 10000);
  CHECK(harness::default_train_config(Variant::Direct).learning_rate == 0.1);
}

TEST_CASE("sample_training_set: distinct, deterministic, valid targets") {
  ExperimentConfig cfg;
  cfg.variant = Variant::Uni;
  cfg.n = 30;
  cfg.train_count = 500;
  cfg.data_seed = 123;
  const auto a = harness::sample_training_set(cfg);
  const auto b = harness::sample_training_set(cfg);
  REQUIRE(a.size() == 500);
  std::set<std::vector<double>> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].input == b[i].input);
    CHECK(a[i].target == b[i].target);
    CHECK(a[i].target.sum() == 1.0);     // one-hot
    CHECK(a[i].target.maxCoeff() == 1.0);
    seen.insert({a[i].input.data(), a[i].input.data() + a[i].input.size()});
  }
  CHECK(seen.size() == 500);  // pairwise distinct inputs

  cfg.data_seed = 124;
  const auto c = harness::sample_training_set(cfg);
  bool any_diff = false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].input != a[i].input) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("sample_exposing_set: postconditions and fallback") {
  const auto set = harness::sample_exposing_set(9, 42, 500);
  REQUIRE(set.size() == 500);
  std::set<std::int64_t> distinct;
  for (const auto& x : set) {
    CHECK(subject::is_exposing(9, x));
    distinct.insert(subject::index_of(x));
  }
  CHECK(distinct.size() == 500);

  const auto again = harness::sample_exposing_set(9, 42, 500);
  CHECK(std::equal(set.begin(), set.end(), again.begin()));

  // zero rejection budget forces the exhaustive fallback
  const auto fallback = harness::sample_exposing_set(9, 42, 500, 0);
  REQUIRE(fallback.size() == 500);
  for (const auto& x : fallback) CHECK(subject::is_exposing(9, x));

  // M9 has 6560 exposing inputs in total; asking for more must fail loudly
  CHECK_THROWS_WITH_AS(static_cast<void>(harness::sample_exposing_set(9, 1, 7000, 0)),
                       doctest::Contains("M9"), std::runtime_error);
}

TEST_CASE("bagged_stddev: degenerate and balanced inputs") {
  std::vector<Verdict> all_accept(500, Verdict::Accept);
  CHECK(harness::bagged_stddev(all_accept, 1) == 0.0);
  std::vector<Verdict> all_reject(500, Verdict::Reject);
  CHECK(harness::bagged_stddev(all_reject, 1) == 0.0);

  std::vector<Verdict> alternating(500);
  for (std::size_t i = 0; i < alternating.size(); ++i)
    alternating[i] = i % 2 == 0 ? Verdict::Accept : Verdict::Reject;
  const double sigma = harness::bagged_stddev(alternating, 99);
  CHECK(sigma == harness::bagged_stddev(alternating, 99));  // deterministic
  // bags of a 50% stream stay near 50%, so the spread is small
  CHECK(sigma < 15.0);
  // and the bag rates always average to the overall rate exactly
  // (equal-sized bags partition the set)
  CHECK(sigma >= 0.0);

  std::vector<Verdict> wrong_size(499, Verdict::Accept);
  CHECK_THROWS_AS(harness::bagged_stddev(wrong_size, 1), std::domain_error);
}

TEST_CASE("perfect oracle goes through the whole pipeline cleanly") {
  ExperimentConfig cfg = tiny_config();
  cfg.eval_correct_count = 500;
  cfg.eval_per_mutant = 500;
  const auto report = harness::evaluate_with(harness::perfect_judge(), cfg);
  CHECK(report.tp_rate == 100.0);
  CHECK(report.fp_rate == 0.0);
  CHECK(report.fp_sigma == 0.0);
  for (double tp : report.per_mutant_tp) CHECK(tp == 100.0);
}

TEST_CASE("per-mutant rates average to the aggregate") {
  ExperimentConfig cfg = tiny_config();
  const auto net = harness::train_network(cfg);
  const auto judge =
      harness::oracle_judge(net, harness::abstraction_for(cfg.variant, cfg.n),
                            harness::comparator_for(cfg.variant, 3), cfg.scaling);
  const auto report = harness::evaluate_with(judge, cfg);
  double mean = 0.0;
  for (double tp : report.per_mutant_tp) mean += tp;
  mean /= subject::kMutantCount;
  CHECK(report.tp_rate == doctest::Approx(mean).epsilon(1e-12));
  CHECK(report.tp_rate >= 0.0);
  CHECK(report.tp_rate <= 100.0);
  CHECK(report.fp_rate >= 0.0);
  CHECK(report.fp_rate <= 100.0);
}

TEST_CASE("evaluate: bit-reproducible under fixed seeds") {
  const ExperimentConfig cfg = tiny_config(Variant::Lower);
  const auto a = harness::evaluate(cfg);
  const auto b = harness::evaluate(cfg);
  CHECK(a.tp_rate == b.tp_rate);
  CHECK(a.fp_rate == b.fp_rate);
  CHECK(a.fp_sigma == b.fp_sigma);
  CHECK(a.mse_final == b.mse_final);
  CHECK(a.per_mutant_tp == b.per_mutant_tp);
  CHECK(a.per_mutant_fp_sigma == b.per_mutant_fp_sigma);
}

TEST_CASE("fp_on_training_inputs reuses the training records") {
  ExperimentConfig cfg = tiny_config();
  cfg.fp_on_training_inputs = true;
  // a judge that rejects everything: fp_rate 100 either way, but the
  // training set has train_count records, not eval_correct_count
  int calls = 0;
  harness::Judge reject_all = [&calls](const subject::CustomerRecord&, int) {
    ++calls;
    return Verdict::Reject;
  };
  const auto report = harness::evaluate_with(reject_all, cfg);
  CHECK(report.fp_rate == 100.0);
  CHECK(calls == cfg.train_count + 21 * cfg.eval_per_mutant);
}

TEST_CASE("preset grids") {
  CHECK(harness::preset_grid("fig3").size() == 18);
  CHECK(harness::preset_grid("fig2").size() == 36);
  CHECK(harness::preset_grid("fig4").size() == 2);
  CHECK_THROWS_AS(harness::preset_grid("fig9"), std::invalid_argument);
  for (const auto& p : harness::preset_grid("fig3")) {
    CHECK(p.config.aggressiveness == 0);
    CHECK(p.config.n >= 10);
    CHECK(p.config.n <= 60);
  }
}

TEST_CASE("run_sweep: deterministic, thread-count independent, failure rows") {
  std::vector<harness::SweepPoint> points;
  for (int a : {0, 5}) {
    auto cfg = tiny_config();
    cfg.aggressiveness = a;
    points.push_back({"uni_10", cfg});
  }
  // a failing point: n out of range
  auto bad = tiny_config();
  bad.n = 1;
  points.push_back({"bad", bad});

  const auto r1 = harness::run_sweep(points, 1);
  const auto r2 = harness::run_sweep(points, 2);
  REQUIRE(r1.size() == 3);
  CHECK(harness::to_csv(r1) == harness::to_csv(r2));
  CHECK(r1[0].report.has_value());
  CHECK(r1[1].report.has_value());
  // same training, different aggressiveness
  CHECK(r1[0].report->mse_final == r1[1].report->mse_final);
  CHECK_FALSE(r1[2].report.has_value());
  CHECK_FALSE(r1[2].error.empty());

  const std::string csv = harness::to_csv(r1);
  CHECK(csv.find("variant,n,aggressiveness,mode,lr,epochs,data_seed,weight_seed,mse_final,"
                 "tp_rate,fp_rate,fp_sigma,m1_tp") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows

  // empty grid: header only
  const auto empty = harness::run_sweep(std::vector<harness::SweepPoint>{}, 1);
  CHECK(harness::to_csv(empty) == harness::csv_header() + "\n");
}

TEST_CASE("oracle_judge agrees with direct oracle calls") {
  ExperimentConfig cfg = tiny_config();
  const auto net = harness::train_network(cfg);
  const auto aspec = harness::abstraction_for(cfg.variant, cfg.n);
  const auto cspec = harness::comparator_for(cfg.variant, 2);
  const auto judge = harness::oracle_judge(net, aspec, cspec, cfg.scaling);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto x = subject::record_at(static_cast<std::int64_t>(
        uniform_below(rng, static_cast<std::uint64_t>(subject::kDomainSize))));
    const int amount = subject::approve(x).amount;
    const Vector out = fnn::forward(net, encode::normalize_input(x, cfg.scaling));
    const auto expected =
        oracle::judge_categorical(cspec, encode::encode_output(aspec, amount), out).verdict;
    CHECK(judge(x, amount) == expected);
  }
}
