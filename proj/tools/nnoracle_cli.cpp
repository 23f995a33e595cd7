// Command-line front end: train networks, evaluate them against the mutant
// suite, run figure sweeps, list mutants, and check externally produced
// execution records against a saved model.
//
// Exit codes: 0 ok (check: all accepted), 1 check saw rejections, 2 usage
// error, 3 training diverged, 4 model file problem, 5 record parse errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nnoracle/chart.hpp"
#include "nnoracle/harness.hpp"
#include "nnoracle/model_io.hpp"

namespace {

using nno::harness::ExperimentConfig;
using nno::harness::Variant;
using Vector = nno::Vector;

constexpr int kExitOk = 0;
constexpr int kExitRejections = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDiverged = 3;
constexpr int kExitModelIo = 4;
constexpr int kExitParseErrors = 5;

struct TrainArgs {
  std::string variant = "uni";
  int n = 30;
  std::string mode;
  double lr = -1.0;
  int epochs = -1;
  std::uint64_t data_seed = 1;
  std::uint64_t weight_seed = 1;
  int hidden = 24;
  int train_count = 500;
  bool identity_inputs = false;
  bool shuffle = false;
  int log_every = 100;
  std::string out;
};

ExperimentConfig config_from(const TrainArgs& a) {
  ExperimentConfig cfg;
  cfg.variant = nno::harness::variant_from_string(a.variant);
  cfg.n = a.n;
  cfg.train = nno::harness::default_train_config(cfg.variant);
  if (!a.mode.empty())
    cfg.train.mode = a.mode == "batch" ? nno::fnn::LearningMode::Batch
                                       : nno::fnn::LearningMode::Incremental;
  if (a.lr > 0) cfg.train.learning_rate = a.lr;
  if (a.epochs > 0) cfg.train.epochs = a.epochs;
  cfg.train.shuffle_each_epoch = a.shuffle;
  cfg.data_seed = a.data_seed;
  cfg.weight_seed = a.weight_seed;
  cfg.hidden_neurons = a.hidden;
  cfg.train_count = a.train_count;
  cfg.scaling = a.identity_inputs ? nno::encode::InputScaling::Identity
                                  : nno::encode::InputScaling::MaxNormalized;
  return cfg;
}

int cmd_train(const TrainArgs& a) {
  const ExperimentConfig cfg = config_from(a);
  const auto samples = nno::harness::sample_training_set(cfg);
  try {
    nno::fnn::EpochCallback progress;
    if (a.log_every > 0)
      progress = [&](int epoch, const nno::fnn::Network& net) {
        if (epoch % a.log_every == 0 || epoch == cfg.train.epochs)
          std::printf("epoch %5d  mse %.8g\n", epoch, nno::fnn::mse(net, samples));
      };
    const auto net = nno::harness::train_network(cfg, progress);
    nno::io::ModelFile m;
    m.variant = cfg.variant;
    m.abstraction = nno::harness::abstraction_for(cfg.variant, cfg.n);
    m.comparator = nno::harness::comparator_for(cfg.variant, 0);
    m.scaling = cfg.scaling;
    m.train = cfg.train;
    m.data_seed = cfg.data_seed;
    m.weight_seed = cfg.weight_seed;
    m.train_count = cfg.train_count;
    m.hidden_neurons = cfg.hidden_neurons;
    m.mse_final = nno::fnn::mse(net, samples);
    m.network = net;
    nno::io::save(a.out, m);
    std::printf("final mse %.8g, model written to %s\n", m.mse_final, a.out.c_str());
    return kExitOk;
  } catch (const nno::fnn::TrainingDiverged& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDiverged;
  } catch (const nno::io::ModelIoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitModelIo;
  }
}

void print_report(const nno::harness::EvaluationReport& rep) {
  std::printf("variant %s  n=%d  A=%d  mse_final=%.8g\n",
              nno::harness::to_string(rep.config.variant).c_str(), rep.config.n,
              rep.config.aggressiveness, rep.mse_final);
  std::printf("true positive rate  %6.2f %%  (erroneous executions rejected)\n", rep.tp_rate);
  std::printf("false positive rate %6.2f %%  (sigma %.2f)\n", rep.fp_rate, rep.fp_sigma);
  std::printf("%-8s %10s %12s\n", "mutant", "tp_rate", "fp_sigma");
  for (int id = 1; id <= nno::subject::kMutantCount; ++id)
    std::printf("M%-7d %9.2f%% %11.2f%%\n", id, rep.per_mutant_tp[id - 1],
                rep.per_mutant_fp_sigma[id - 1]);
}

int cmd_eval(const std::string& model_path, int aggressiveness, const std::string& csv_path,
             bool fp_on_training) {
  nno::io::ModelFile m;
  try {
    m = nno::io::load(model_path);
  } catch (const nno::io::ModelIoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitModelIo;
  }
  ExperimentConfig cfg = nno::io::experiment_config(m, aggressiveness);
  cfg.fp_on_training_inputs = fp_on_training;
  auto cspec = m.comparator;
  cspec.aggressiveness = aggressiveness;
  const auto judge = nno::harness::oracle_judge(m.network, m.abstraction, cspec, m.scaling);
  const auto report = nno::harness::evaluate_with(judge, cfg, m.mse_final);
  print_report(report);
  if (!csv_path.empty()) {
    nno::harness::SweepResult row;
    row.point = {nno::harness::to_string(cfg.variant), cfg};
    row.report = report;
    std::ofstream out(csv_path, std::ios::binary);
    out << nno::harness::csv_header() << "\n" << nno::harness::csv_row(row) << "\n";
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", csv_path.c_str());
      return kExitModelIo;
    }
    std::printf("csv written to %s\n", csv_path.c_str());
  }
  return kExitOk;
}

// One TP and one FP chart per sweep; series grouping depends on the preset.
void write_charts(const std::string& preset, const std::vector<nno::harness::SweepResult>& rows,
                  const std::string& dir) {
  namespace chart = nno::chart;
  auto path = [&](const std::string& name) { return dir + "/" + name; };
  if (preset == "fig3") {
    std::map<std::string, chart::Series> tp, fp;
    for (const auto& r : rows) {
      if (!r.report) continue;
      const auto v = nno::harness::to_string(r.point.config.variant);
      tp[v].name = v;
      fp[v].name = v;
      tp[v].x.push_back(r.point.config.n);
      tp[v].y.push_back(r.report->tp_rate);
      fp[v].x.push_back(r.point.config.n);
      fp[v].y.push_back(r.report->fp_rate);
    }
    std::vector<chart::Series> tps, fps;
    for (auto& [_, s] : tp) tps.push_back(s);
    for (auto& [_, s] : fp) fps.push_back(s);
    std::ofstream(path("fig3_tp.svg")) << chart::line_chart("true positive rate (%) vs N", "N", tps);
    std::ofstream(path("fig3_fp.svg")) << chart::line_chart("false positive rate (%) vs N", "N", fps);
  } else if (preset == "fig4") {
    std::vector<std::string> labels;
    for (int id = 1; id <= nno::subject::kMutantCount; ++id) labels.push_back("M" + std::to_string(id));
    std::vector<chart::BarSeries> tps, fps;
    for (const auto& r : rows) {
      if (!r.report) continue;
      chart::BarSeries t{r.point.label, {}, {}}, f{r.point.label, {}, {}};
      for (int i = 0; i < nno::subject::kMutantCount; ++i) {
        t.values.push_back(r.report->per_mutant_tp[i]);
        f.values.push_back(r.report->fp_rate);
        f.sigmas.push_back(r.report->per_mutant_fp_sigma[i]);
      }
      tps.push_back(std::move(t));
      fps.push_back(std::move(f));
    }
    std::ofstream(path("fig4_tp.svg")) << chart::bar_chart("per-mutant true positive rate (%)", labels, tps);
    std::ofstream(path("fig4_fp.svg")) << chart::bar_chart("false positive rate (%) with bagged sigma", labels, fps);
  } else {  // fig2 and custom grids: rate vs aggressiveness per series label
    std::map<std::string, chart::Series> tp, fp;
    for (const auto& r : rows) {
      if (!r.report) continue;
      tp[r.point.label].name = r.point.label;
      fp[r.point.label].name = r.point.label;
      tp[r.point.label].x.push_back(r.point.config.aggressiveness);
      tp[r.point.label].y.push_back(r.report->tp_rate);
      fp[r.point.label].x.push_back(r.point.config.aggressiveness);
      fp[r.point.label].y.push_back(r.report->fp_rate);
    }
    std::vector<chart::Series> tps, fps;
    for (auto& [_, s] : tp) tps.push_back(s);
    for (auto& [_, s] : fp) fps.push_back(s);
    std::ofstream(path(preset + "_tp.svg"))
        << chart::line_chart("true positive rate (%) vs aggressiveness", "A", tps);
    std::ofstream(path(preset + "_fp.svg"))
        << chart::line_chart("false positive rate (%) vs aggressiveness", "A", fps);
  }
}

int cmd_sweep(const std::string& preset, const std::string& out_dir, std::uint64_t data_seed,
              std::uint64_t weight_seed, int threads) {
  std::vector<nno::harness::SweepPoint> points = nno::harness::preset_grid(preset);
  for (auto& p : points) {
    p.config.data_seed = data_seed;
    p.config.weight_seed = weight_seed;
  }
  std::filesystem::create_directories(out_dir);
  const auto results = nno::harness::run_sweep(points, threads);
  const std::string csv_path = out_dir + "/" + preset + ".csv";
  std::ofstream csv(csv_path, std::ios::binary);
  csv << nno::harness::to_csv(results);
  csv.close();
  write_charts(preset, results, out_dir);
  int failures = 0;
  for (const auto& r : results)
    if (!r.report) {
      ++failures;
      std::fprintf(stderr, "point %s failed: %s\n", r.point.label.c_str(), r.error.c_str());
    }
  std::printf("%zu points, %d failed; results in %s\n", results.size(), failures,
              out_dir.c_str());
  return kExitOk;
}

int cmd_mutants() {
  std::printf("%-5s %-5s %-28s %s\n", "id", "line", "original", "mutation");
  for (const auto& m : nno::subject::mutant_table())
    std::printf("M%-4d %-5d %-28s %s\n", m.id, m.line, m.original, m.replacement);
  return kExitOk;
}

// Record stream: one JSON object per line with the 8 input fields plus
// "amount" (see docs/record.schema.json).
int cmd_check(const std::string& model_path, int aggressiveness, const std::string& input_path) {
  nno::io::ModelFile m;
  try {
    m = nno::io::load(model_path);
  } catch (const nno::io::ModelIoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitModelIo;
  }
  auto cspec = m.comparator;
  cspec.aggressiveness = aggressiveness;

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input_path.empty() && input_path != "-") {
    file.open(input_path);
    if (!file) {
      std::fprintf(stderr, "error: cannot open %s\n", input_path.c_str());
      return kExitUsage;
    }
    in = &file;
  }

  long long accepted = 0, rejected = 0, parse_errors = 0, line_no = 0;
  std::string line;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nno::subject::CustomerRecord x;
    int amount = 0;
    try {
      const auto j = nlohmann::json::parse(line);
      x.citizenship = j.at("citizenship").get<int>();
      x.state = j.at("state").get<int>();
      x.region = j.at("region").get<int>();
      x.sex = j.at("sex").get<int>();
      x.age = j.at("age").get<int>();
      x.marital = j.at("marital").get<int>();
      x.dependents = j.at("dependents").get<int>();
      x.income = j.at("income").get<int>();
      amount = j.at("amount").get<int>();
      if (!nno::subject::in_domain(x))
        throw std::domain_error("record field out of range");
      if (amount < 0 || amount > static_cast<int>(m.abstraction.y_max))
        throw std::domain_error("amount out of range");
    } catch (const std::exception& e) {
      std::printf("line %lld: parse error: %s\n", line_no, e.what());
      ++parse_errors;
      continue;
    }
    const Vector out = nno::fnn::forward(m.network, nno::encode::normalize_input(x, m.scaling));
    nno::oracle::Judgment judgment;
    std::string detail;
    if (cspec.kind == nno::oracle::Comparator::Euclidean) {
      judgment = nno::oracle::judge_euclidean(cspec, out[0], amount / m.abstraction.y_max);
      char buf[64];
      std::snprintf(buf, sizeof buf, "obs=%.4f net=%.4f", amount / m.abstraction.y_max, out[0]);
      detail = buf;
    } else {
      const Vector z_obs = nno::encode::encode_output(m.abstraction, amount);
      judgment = nno::oracle::judge_categorical(cspec, z_obs, out);
      detail = "obs_winner=" + std::to_string(nno::encode::winner(z_obs)) +
               " net_winner=" + std::to_string(nno::encode::winner(out));
    }
    const bool ok = judgment.verdict == nno::oracle::Verdict::Accept;
    (ok ? accepted : rejected) += 1;
    std::printf("line %lld: %s %s %s\n", line_no, nno::oracle::to_string(judgment.verdict).c_str(),
                nno::oracle::to_string(judgment.reason).c_str(), detail.c_str());
  }
  std::printf("summary: %lld accepted, %lld rejected, %lld parse errors\n", accepted, rejected,
              parse_errors);
  if (parse_errors > 0) return kExitParseErrors;
  return rejected > 0 ? kExitRejections : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feed-forward networks as learned test oracles for a credit-approval subject"};
  app.require_subcommand(1);

  TrainArgs targs;
  auto* train = app.add_subcommand("train", "train a network and write a model file");
  train->add_option("--variant", targs.variant, "direct|uni|unimin|lower|center")
      ->check(CLI::IsMember({"direct", "uni", "unimin", "lower", "center"}));
  train->add_option("--n", targs.n, "abstraction granularity (ignored for direct)");
  train->add_option("--mode", targs.mode, "incremental|batch")
      ->check(CLI::IsMember({"incremental", "batch"}));
  train->add_option("--lr", targs.lr, "learning rate (default per variant)");
  train->add_option("--epochs", targs.epochs, "epoch count (default per variant)");
  train->add_option("--seed,--data-seed", targs.data_seed, "training set seed");
  train->add_option("--weight-seed", targs.weight_seed, "weight init seed");
  train->add_option("--hidden", targs.hidden, "hidden layer width");
  train->add_option("--train-count", targs.train_count, "training sample count");
  train->add_flag("--identity-inputs", targs.identity_inputs, "feed raw field values");
  train->add_flag("--shuffle", targs.shuffle, "reshuffle sample order each epoch");
  train->add_option("--log-every", targs.log_every, "epochs between MSE log lines (0 = off)");
  train->add_option("--out", targs.out, "output model path")->required();

  std::string model_path, csv_path, input_path;
  int aggressiveness = 0;
  bool fp_on_training = false;
  auto* eval = app.add_subcommand("eval", "evaluate a model over the 21 mutants");
  eval->add_option("--model", model_path, "model file")->required();
  eval->add_option("--aggressiveness,-A", aggressiveness, "0..5")->check(CLI::Range(0, 5));
  eval->add_option("--csv", csv_path, "also write a CSV row here");
  eval->add_flag("--fp-on-training", fp_on_training,
                 "measure false positives on the training inputs");

  std::string preset, out_dir = "sweep_out";
  std::uint64_t sweep_data_seed = 1, sweep_weight_seed = 1;
  int threads = 0;
  auto* sweep = app.add_subcommand("sweep", "run a preset grid, write CSV + SVG charts");
  sweep->add_option("--preset", preset, "fig2|fig3|fig4")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
  sweep->add_option("--out-dir", out_dir, "output directory");
  sweep->add_option("--data-seed", sweep_data_seed, "data seed for every point");
  sweep->add_option("--weight-seed", sweep_weight_seed, "weight seed for every point");
  sweep->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* check = app.add_subcommand("check", "judge externally produced execution records");
  check->add_option("--model", model_path, "model file")->required();
  check->add_option("--aggressiveness,-A", aggressiveness, "0..5")->check(CLI::Range(0, 5));
  check->add_option("--in", input_path, "record stream file ('-' or omit for stdin)");

  app.add_subcommand("mutants", "list the 21 mutants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  }

  try {
    if (train->parsed()) return cmd_train(targs);
    if (eval->parsed()) return cmd_eval(model_path, aggressiveness, csv_path, fp_on_training);
    if (sweep->parsed())
      return cmd_sweep(preset, out_dir, sweep_data_seed, sweep_weight_seed, threads);
    if (check->parsed()) return cmd_check(model_path, aggressiveness, input_path);
    return cmd_mutants();
  } catch (const nno::fnn::TrainingDiverged& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDiverged;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
