#pragma once

#include <Eigen/Dense>

namespace mhscg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index  = Eigen::Index;

}  // namespace mhscg
