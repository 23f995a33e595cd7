#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nnoracle/encode.hpp"
#include "nnoracle/fnn.hpp"
#include "nnoracle/harness.hpp"
#include "nnoracle/oracle.hpp"

namespace nno::io {

struct ModelIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything needed to re-run a trained oracle: the network weights plus the
// abstraction, comparator defaults and training provenance. Serialized as
// versioned JSON text; doubles round-trip exactly and serialization is
// deterministic, so save -> load -> save is byte-identical.
struct ModelFile {
  int format_version = 1;
  harness::Variant variant = harness::Variant::Uni;
  encode::AbstractionSpec abstraction;
  oracle::ComparatorSpec comparator;
  encode::InputScaling scaling = encode::InputScaling::MaxNormalized;
  fnn::TrainConfig train;
  std::uint64_t data_seed = 1;
  std::uint64_t weight_seed = 1;
  int train_count = 500;
  int hidden_neurons = 24;
  double mse_final = 0.0;
  fnn::Network network;
};

// Builds the experiment config a loaded model corresponds to.
harness::ExperimentConfig experiment_config(const ModelFile& m, int aggressiveness);

std::string serialize(const ModelFile& m);
ModelFile parse(const std::string& text);

void save(const std::string& path, const ModelFile& m);
ModelFile load(const std::string& path);

}  // namespace nno::io
