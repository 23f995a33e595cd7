#pragma once

#include <string>

#include "nnoracle/subject.hpp"
#include "nnoracle/types.hpp"

namespace nno::encode {

// Output abstractions: the raw amount scaled to [0,1] (Direct), or a one-hot
// vector over n intervals of the amount range, with the partition optionally
// warped by a monotone stretch that refines the low or the center region.
enum class Abstraction { Direct, Uniform, LowStretch, CenterStretch };

struct AbstractionSpec {
  Abstraction kind = Abstraction::Uniform;
  int n = 30;              // interval count; ignored for Direct
  double y_max = 18000.0;  // amount range is [0, y_max]
  double k_low = 8000.0;   // low-stretch scale
  double a_low = 100.0;    // low-stretch knee
  double m_ctr = 18000.0;  // center-stretch ceiling
  double a_ctr = 0.0006;   // center-stretch steepness

  int output_dim() const { return kind == Abstraction::Direct ? 1 : n; }
  bool operator==(const AbstractionSpec&) const = default;
};

// How a CustomerRecord becomes the 8 network inputs. MaxNormalized divides
// each field by its domain maximum; Identity passes raw values through.
enum class InputScaling { MaxNormalized, Identity };

Vector normalize_input(const subject::CustomerRecord& x,
                       InputScaling scaling = InputScaling::MaxNormalized);

// k * ln(1 + y/a); strictly increasing, finer near 0.
double stretch_low(double y, double k = 8000.0, double a = 100.0);
// m / (1 + e^(-a*(y - m/2))); strictly increasing, finer mid-range.
double stretch_center(double y, double m = 18000.0, double a = 0.0006);

// Interval index of y under the spec's (possibly stretched) partition.
int interval_index(const AbstractionSpec& spec, double y);

// Direct: [y / y_max]. Otherwise a one-hot vector of length n.
Vector encode_output(const AbstractionSpec& spec, double y);

// Index of the largest component; ties break toward the lowest index.
int winner(const VectorRef& v);

std::string to_string(Abstraction kind);
Abstraction abstraction_from_string(const std::string& name);

}  // namespace nno::encode
