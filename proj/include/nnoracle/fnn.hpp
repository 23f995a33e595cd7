#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnoracle/types.hpp"

namespace nno::fnn {

// Fully-connected feed-forward network with logistic units. Weights for
// layer l form a (sizes[l+1] x (sizes[l]+1)) matrix whose last column is the
// bias weight; the bias input is fixed at 1.
struct Network {
  std::vector<int> layer_sizes;
  std::vector<Matrix> weights;

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
};

enum class LearningMode { Incremental, Batch };

struct TrainConfig {
  LearningMode mode = LearningMode::Incremental;
  double learning_rate = 0.5;
  int epochs = 1500;
  double init_half_range = 0.5;  // weights start uniform in [-r, r]
  std::uint64_t seed = 0;        // weight initialization stream
  bool shuffle_each_epoch = false;
};

struct Sample {
  Vector input;
  Vector target;
};

struct TrainingDiverged : std::runtime_error {
  explicit TrainingDiverged(int at_epoch)
      : std::runtime_error("training diverged (non-finite loss) at epoch " +
                           std::to_string(at_epoch)),
        epoch(at_epoch) {}
  int epoch;
};

// Called once per epoch when set; `epoch` counts from 1.
using EpochCallback = std::function<void(int epoch, const Network& net)>;

// Every weight drawn uniformly from [-half_range, half_range].
Network init(const std::vector<int>& layer_sizes, std::uint64_t seed,
             double half_range = 0.5);

// Logistic activation 1/(1+e^-t).
double activation(double t);

Vector forward(const Network& net, const VectorRef& input);

// Gradient of (1/2)*||forward(input) - target||^2 w.r.t. every weight,
// shaped like net.weights.
std::vector<Matrix> gradient(const Network& net, const Sample& sample);

// Plain gradient descent on the halved squared error. Incremental mode
// updates after every sample, in the data's stored order unless
// shuffle_each_epoch is set; batch mode applies one update per epoch using
// the gradient averaged over all samples. Throws TrainingDiverged if the
// epoch loss stops being finite.
Network train(Network net, std::span<const Sample> data, const TrainConfig& cfg,
              const EpochCallback& on_epoch = {});

// Mean over samples and output components of the squared error.
double mse(const Network& net, std::span<const Sample> data);

}  // namespace nno::fnn
