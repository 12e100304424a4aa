// Copyright 2026 The convlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVLAB_DELTA_HPP
#define CONVLAB_DELTA_HPP

#include <Eigen/Dense>
#include <functional>

#include "convlab/gaussian_limit.hpp"

namespace convlab {

// A C^1 map R^k -> R^m with a closed-form Jacobian or a central
// finite-difference fallback (step h = cbrt(eps) * max(1,|theta_j|)).
struct SmoothMap {
  std::size_t in_dim = 1;
  std::size_t out_dim = 1;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> eval;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian_closed;

  Eigen::MatrixXd jacobian_at(const Eigen::VectorXd& theta) const;
  Eigen::MatrixXd jacobian_fd(const Eigen::VectorXd& theta) const;

  static SmoothMap scalar(std::function<double(double)> g,
                          std::function<double(double)> g_prime);
  static SmoothMap scalar_fd(std::function<double(double)> g);
};

// N(0, sigma2) pushed through a scalar map: N(0, g'(theta)^2 sigma2).
GaussianLimit delta_uni(const GaussianLimit& limit, double theta,
                        const SmoothMap& g);

// N(0, Sigma) pushed through g: R^k -> R: N(0, grad^T Sigma grad).
GaussianLimit delta_grad(const GaussianLimit& limit,
                         const Eigen::VectorXd& theta, const SmoothMap& g);

// N(0, Sigma) pushed through g: R^k -> R^m: N(0, J Sigma J^T).
GaussianLimit delta_jac(const GaussianLimit& limit,
                        const Eigen::VectorXd& theta, const SmoothMap& g);

}  // namespace convlab

#endif  // CONVLAB_DELTA_HPP
