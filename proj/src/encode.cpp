#include "nnoracle/encode.hpp"

#include <cmath>
#include <stdexcept>

namespace nno::encode {

Vector normalize_input(const subject::CustomerRecord& x, InputScaling scaling) {
  Vector v(8);
  v << x.citizenship, x.state, x.region, x.sex, x.age, x.marital, x.dependents, x.income;
  if (scaling == InputScaling::MaxNormalized) {
    for (int i = 0; i < 8; ++i) v[i] /= subject::kFieldMax[static_cast<std::size_t>(i)];
  }
  return v;
}

double stretch_low(double y, double k, double a) {
  if (y < 0.0) throw std::domain_error("encode: stretch_low needs y >= 0");
  return k * std::log(1.0 + y / a);
}

double stretch_center(double y, double m, double a) {
  return m / (1.0 + std::exp(-a * (y - 0.5 * m)));
}

int interval_index(const AbstractionSpec& spec, double y) {
  if (spec.kind == Abstraction::Direct)
    throw std::invalid_argument("encode: Direct has no intervals");
  if (!(y >= 0.0 && y <= spec.y_max))
    throw std::domain_error("encode: amount outside [0, y_max]");
  double s = y, lo = 0.0, hi = spec.y_max;
  switch (spec.kind) {
    case Abstraction::Uniform:
      break;
    case Abstraction::LowStretch:
      s = stretch_low(y, spec.k_low, spec.a_low);
      lo = stretch_low(0.0, spec.k_low, spec.a_low);
      hi = stretch_low(spec.y_max, spec.k_low, spec.a_low);
      break;
    case Abstraction::CenterStretch:
      // The stretched image of [0, y_max] does not start at 0, so the
      // partition spans [s(0), s(y_max)]; otherwise the lowest intervals
      // would be unreachable.
      s = stretch_center(y, spec.m_ctr, spec.a_ctr);
      lo = stretch_center(0.0, spec.m_ctr, spec.a_ctr);
      hi = stretch_center(spec.y_max, spec.m_ctr, spec.a_ctr);
      break;
    case Abstraction::Direct:
      break;
  }
  const int k = static_cast<int>((s - lo) * spec.n / (hi - lo));
  return std::min(k, spec.n - 1);
}

Vector encode_output(const AbstractionSpec& spec, double y) {
  if (!(y >= 0.0 && y <= spec.y_max))
    throw std::domain_error("encode: amount outside [0, y_max]");
  if (spec.kind == Abstraction::Direct) {
    Vector v(1);
    v[0] = y / spec.y_max;
    return v;
  }
  Vector v = Vector::Zero(spec.n);
  v[interval_index(spec, y)] = 1.0;
  return v;
}

int winner(const VectorRef& v) {
  if (v.size() == 0) throw std::domain_error("encode: winner of empty vector");
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

std::string to_string(Abstraction kind) {
  switch (kind) {
    case Abstraction::Direct: return "direct";
    case Abstraction::Uniform: return "uniform";
    case Abstraction::LowStretch: return "low";
    case Abstraction::CenterStretch: return "center";
  }
  return "?";
}

Abstraction abstraction_from_string(const std::string& name) {
  if (name == "direct") return Abstraction::Direct;
  if (name == "uniform") return Abstraction::Uniform;
  if (name == "low") return Abstraction::LowStretch;
  if (name == "center") return Abstraction::CenterStretch;
  throw std::invalid_argument("encode: unknown abstraction '" + name + "'");
}

}  // namespace nno::encode
