#include "nnoracle/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nno::io {

using nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

std::string mode_name(fnn::LearningMode m) {
  return m == fnn::LearningMode::Incremental ? "incremental" : "batch";
}

fnn::LearningMode mode_from(const std::string& s) {
  if (s == "incremental") return fnn::LearningMode::Incremental;
  if (s == "batch") return fnn::LearningMode::Batch;
  throw ModelIoError("model: unknown learning mode '" + s + "'");
}

ordered_json weights_to_json(const fnn::Network& net) {
  ordered_json layers = ordered_json::array();
  for (const Matrix& w : net.weights) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index c = 0; c < w.cols(); ++c) row.push_back(w(r, c));
      rows.push_back(std::move(row));
    }
    layers.push_back(std::move(rows));
  }
  return layers;
}

}  // namespace

harness::ExperimentConfig experiment_config(const ModelFile& m, int aggressiveness) {
  harness::ExperimentConfig cfg;
  cfg.variant = m.variant;
  cfg.n = m.abstraction.output_dim() == 1 ? 30 : m.abstraction.n;
  cfg.aggressiveness = aggressiveness;
  cfg.train = m.train;
  cfg.train_count = m.train_count;
  cfg.data_seed = m.data_seed;
  cfg.weight_seed = m.weight_seed;
  cfg.scaling = m.scaling;
  cfg.hidden_neurons = m.hidden_neurons;
  return cfg;
}

std::string serialize(const ModelFile& m) {
  ordered_json j;
  j["format_version"] = m.format_version;
  j["variant"] = harness::to_string(m.variant);
  j["abstraction"] = {{"kind", encode::to_string(m.abstraction.kind)},
                      {"n", m.abstraction.n},
                      {"y_max", m.abstraction.y_max},
                      {"k_low", m.abstraction.k_low},
                      {"a_low", m.abstraction.a_low},
                      {"m_ctr", m.abstraction.m_ctr},
                      {"a_ctr", m.abstraction.a_ctr}};
  j["comparator"] = {{"kind", m.comparator.kind == oracle::Comparator::Euclidean
                                  ? "euclidean"
                                  : "categorical"},
                     {"aggressiveness", m.comparator.aggressiveness},
                     {"eps_max", m.comparator.eps_max},
                     {"th_low", m.comparator.th_low},
                     {"th_high", m.comparator.th_high}};
  j["input_scaling"] =
      m.scaling == encode::InputScaling::MaxNormalized ? "max_normalized" : "identity";
  j["training"] = {{"mode", mode_name(m.train.mode)},
                   {"learning_rate", m.train.learning_rate},
                   {"epochs", m.train.epochs},
                   {"init_half_range", m.train.init_half_range},
                   {"shuffle_each_epoch", m.train.shuffle_each_epoch},
                   {"data_seed", m.data_seed},
                   {"weight_seed", m.weight_seed},
                   {"train_count", m.train_count},
                   {"hidden_neurons", m.hidden_neurons},
                   {"mse_final", m.mse_final}};
  j["layer_sizes"] = m.network.layer_sizes;
  j["weights"] = weights_to_json(m.network);
  return j.dump(2) + "\n";
}

ModelFile parse(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ModelIoError(std::string("model: not valid JSON: ") + e.what());
  }
  try {
    ModelFile m;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != kFormatVersion)
      throw ModelIoError("model: unsupported format_version " +
                         std::to_string(m.format_version));
    m.variant = harness::variant_from_string(j.at("variant").get<std::string>());
    const auto& ja = j.at("abstraction");
    m.abstraction.kind = encode::abstraction_from_string(ja.at("kind").get<std::string>());
    m.abstraction.n = ja.at("n").get<int>();
    m.abstraction.y_max = ja.at("y_max").get<double>();
    m.abstraction.k_low = ja.at("k_low").get<double>();
    m.abstraction.a_low = ja.at("a_low").get<double>();
    m.abstraction.m_ctr = ja.at("m_ctr").get<double>();
    m.abstraction.a_ctr = ja.at("a_ctr").get<double>();
    const auto& jc = j.at("comparator");
    m.comparator.kind = jc.at("kind").get<std::string>() == "euclidean"
                            ? oracle::Comparator::Euclidean
                            : oracle::Comparator::Categorical;
    m.comparator.aggressiveness = jc.at("aggressiveness").get<int>();
    m.comparator.eps_max = jc.at("eps_max").get<double>();
    m.comparator.th_low = jc.at("th_low").get<double>();
    m.comparator.th_high = jc.at("th_high").get<double>();
    m.scaling = j.at("input_scaling").get<std::string>() == "identity"
                    ? encode::InputScaling::Identity
                    : encode::InputScaling::MaxNormalized;
    const auto& jt = j.at("training");
    m.train.mode = mode_from(jt.at("mode").get<std::string>());
    m.train.learning_rate = jt.at("learning_rate").get<double>();
    m.train.epochs = jt.at("epochs").get<int>();
    m.train.init_half_range = jt.at("init_half_range").get<double>();
    m.train.shuffle_each_epoch = jt.at("shuffle_each_epoch").get<bool>();
    m.data_seed = jt.at("data_seed").get<std::uint64_t>();
    m.weight_seed = jt.at("weight_seed").get<std::uint64_t>();
    m.train.seed = m.weight_seed;
    m.train_count = jt.at("train_count").get<int>();
    m.hidden_neurons = jt.at("hidden_neurons").get<int>();
    m.mse_final = jt.at("mse_final").get<double>();
    m.network.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
    if (m.network.layer_sizes.size() < 2)
      throw ModelIoError("model: needs at least two layers");
    const auto& jw = j.at("weights");
    if (jw.size() != m.network.layer_sizes.size() - 1)
      throw ModelIoError("model: weight layer count does not match layer_sizes");
    for (std::size_t l = 0; l + 1 < m.network.layer_sizes.size(); ++l) {
      const auto rows = static_cast<std::size_t>(m.network.layer_sizes[l + 1]);
      const auto cols = static_cast<std::size_t>(m.network.layer_sizes[l]) + 1;
      const auto& jrows = jw.at(l);
      if (jrows.size() != rows) throw ModelIoError("model: weight row count mismatch");
      Matrix w(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto& jrow = jrows.at(r);
        if (jrow.size() != cols) throw ModelIoError("model: weight column count mismatch");
        for (std::size_t c = 0; c < cols; ++c)
          w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
              jrow.at(c).get<double>();
      }
      m.network.weights.push_back(std::move(w));
    }
    return m;
  } catch (const ModelIoError&) {
    throw;
  } catch (const std::exception& e) {
    throw ModelIoError(std::string("model: malformed document: ") + e.what());
  }
}

void save(const std::string& path, const ModelFile& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelIoError("model: cannot open '" + path + "' for writing");
  out << serialize(m);
  if (!out) throw ModelIoError("model: write to '" + path + "' failed");
}

ModelFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelIoError("model: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace nno::io
