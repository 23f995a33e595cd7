#pragma once

#include <Eigen/Core>

namespace nno {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

}  // namespace nno
