#include "nnoracle/fnn.hpp"

#include <cmath>
#include <numeric>

#include "nnoracle/rng.hpp"

namespace nno::fnn {

Network init(const std::vector<int>& layer_sizes, std::uint64_t seed, double half_range) {
  if (layer_sizes.size() < 2)
    throw std::invalid_argument("fnn: a network needs at least input and output layers");
  for (int s : layer_sizes)
    if (s < 1) throw std::invalid_argument("fnn: every layer needs at least one neuron");
  Network net;
  net.layer_sizes = layer_sizes;
  Rng rng(seed);
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    Matrix w(layer_sizes[l + 1], layer_sizes[l] + 1);
    // Draw order is fixed (neuron-major, bias last) so a seed fully
    // determines the network independent of Eigen's storage layout.
    for (Eigen::Index r = 0; r < w.rows(); ++r)
      for (Eigen::Index c = 0; c < w.cols(); ++c)
        w(r, c) = uniform_range(rng, -half_range, half_range);
    net.weights.push_back(std::move(w));
  }
  return net;
}

double activation(double t) { return 1.0 / (1.0 + std::exp(-t)); }

namespace {

void check_input(const Network& net, const VectorRef& input) {
  if (input.size() != net.input_size())
    throw std::domain_error("fnn: input size does not match the input layer");
}

// Activations for all layers; acts[0] is the input, acts.back() the output.
void forward_into(const Network& net, const VectorRef& input, std::vector<Vector>& acts) {
  acts.resize(net.weights.size() + 1);
  acts[0] = input;
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    const Matrix& w = net.weights[l];
    const auto in = w.cols() - 1;
    Vector& z = acts[l + 1];
    z.noalias() = w.leftCols(in) * acts[l];
    z += w.col(in);
    z = (1.0 + (-z.array()).exp()).inverse();
  }
}

// Output-to-input sweep of deltas for the halved squared error;
// deltas[l] pairs with net.weights[l].
void backward_into(const Network& net, const std::vector<Vector>& acts, const Vector& target,
                   std::vector<Vector>& deltas) {
  const std::size_t layers = net.weights.size();
  deltas.resize(layers);
  const Vector& out = acts[layers];
  deltas[layers - 1] =
      (out - target).cwiseProduct(out.cwiseProduct(Vector::Ones(out.size()) - out));
  for (std::size_t l = layers - 1; l > 0; --l) {
    const Matrix& w = net.weights[l];
    const auto in = w.cols() - 1;
    const Vector& a = acts[l];
    deltas[l - 1].noalias() = w.leftCols(in).transpose() * deltas[l];
    deltas[l - 1].array() *= a.array() * (1.0 - a.array());
  }
}

}  // namespace

Vector forward(const Network& net, const VectorRef& input) {
  check_input(net, input);
  std::vector<Vector> acts;
  forward_into(net, input, acts);
  return acts.back();
}

std::vector<Matrix> gradient(const Network& net, const Sample& sample) {
  check_input(net, sample.input);
  std::vector<Vector> acts, deltas;
  forward_into(net, sample.input, acts);
  backward_into(net, acts, sample.target, deltas);
  std::vector<Matrix> grads(net.weights.size());
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    const auto in = net.weights[l].cols() - 1;
    grads[l].resize(net.weights[l].rows(), net.weights[l].cols());
    grads[l].leftCols(in).noalias() = deltas[l] * acts[l].transpose();
    grads[l].col(in) = deltas[l];  // the bias input is 1
  }
  return grads;
}

Network train(Network net, std::span<const Sample> data, const TrainConfig& cfg,
              const EpochCallback& on_epoch) {
  if (data.empty()) throw std::invalid_argument("fnn: empty training set");
  if (cfg.epochs < 1) throw std::invalid_argument("fnn: epochs must be >= 1");
  if (!(cfg.learning_rate > 0.0)) throw std::invalid_argument("fnn: learning rate must be > 0");
  for (const Sample& s : data) check_input(net, s.input);

  const std::size_t layers = net.weights.size();
  std::vector<Vector> acts, deltas;
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  Rng shuffle_rng(mix_seed(cfg.seed, 0x501));

  std::vector<Matrix> grad_sum;
  if (cfg.mode == LearningMode::Batch) {
    grad_sum.resize(layers);
    for (std::size_t l = 0; l < layers; ++l)
      grad_sum[l].resize(net.weights[l].rows(), net.weights[l].cols());
  }

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    if (cfg.shuffle_each_epoch) {
      for (std::size_t i = order.size() - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(shuffle_rng, i + 1)]);
    }
    double epoch_loss = 0.0;
    if (cfg.mode == LearningMode::Incremental) {
      for (std::size_t idx : order) {
        const Sample& s = data[idx];
        forward_into(net, s.input, acts);
        epoch_loss += 0.5 * (acts[layers] - s.target).squaredNorm();
        backward_into(net, acts, s.target, deltas);
        for (std::size_t l = 0; l < layers; ++l) {
          Matrix& w = net.weights[l];
          const auto in = w.cols() - 1;
          w.leftCols(in).noalias() -= cfg.learning_rate * (deltas[l] * acts[l].transpose());
          w.col(in).noalias() -= cfg.learning_rate * deltas[l];
        }
      }
    } else {
      for (Matrix& g : grad_sum) g.setZero();
      for (std::size_t idx : order) {
        const Sample& s = data[idx];
        forward_into(net, s.input, acts);
        epoch_loss += 0.5 * (acts[layers] - s.target).squaredNorm();
        backward_into(net, acts, s.target, deltas);
        for (std::size_t l = 0; l < layers; ++l) {
          const auto in = grad_sum[l].cols() - 1;
          grad_sum[l].leftCols(in).noalias() += deltas[l] * acts[l].transpose();
          grad_sum[l].col(in).noalias() += deltas[l];
        }
      }
      const double scale = cfg.learning_rate / static_cast<double>(data.size());
      for (std::size_t l = 0; l < layers; ++l) net.weights[l] -= scale * grad_sum[l];
    }
    if (!std::isfinite(epoch_loss)) throw TrainingDiverged(epoch);
    if (on_epoch) on_epoch(epoch, net);
  }
  return net;
}

double mse(const Network& net, std::span<const Sample> data) {
  if (data.empty()) throw std::invalid_argument("fnn: mse over empty set");
  std::vector<Vector> acts;
  double sum = 0.0;
  for (const Sample& s : data) {
    forward_into(net, s.input, acts);
    sum += (acts.back() - s.target).squaredNorm();
  }
  return sum / (static_cast<double>(data.size()) * net.output_size());
}

}  // namespace nno::fnn
