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

#include "convlab/delta.hpp"

#include <cmath>
#include <limits>

#include "convlab/law.hpp"

namespace convlab {

Eigen::MatrixXd SmoothMap::jacobian_fd(const Eigen::VectorXd& theta) const {
  if (!eval) throw DomainError("SmoothMap: eval unavailable");
  const double cbrt_eps =
      std::cbrt(std::numeric_limits<double>::epsilon());
  Eigen::MatrixXd jac(static_cast<long>(out_dim), static_cast<long>(in_dim));
  Eigen::VectorXd probe = theta;
  for (long j = 0; j < static_cast<long>(in_dim); ++j) {
    const double h = cbrt_eps * std::max(1.0, std::abs(theta(j)));
    probe(j) = theta(j) + h;
    const Eigen::VectorXd up = eval(probe);
    probe(j) = theta(j) - h;
    const Eigen::VectorXd down = eval(probe);
    probe(j) = theta(j);
    jac.col(j) = (up - down) / (2.0 * h);
  }
  return jac;
}

Eigen::MatrixXd SmoothMap::jacobian_at(const Eigen::VectorXd& theta) const {
  if (jacobian_closed) return jacobian_closed(theta);
  return jacobian_fd(theta);
}

SmoothMap SmoothMap::scalar(std::function<double(double)> g,
                            std::function<double(double)> g_prime) {
  SmoothMap m;
  m.in_dim = m.out_dim = 1;
  m.eval = [g = std::move(g)](const Eigen::VectorXd& x) {
    Eigen::VectorXd out(1);
    out(0) = g(x(0));
    return out;
  };
  m.jacobian_closed = [gp = std::move(g_prime)](const Eigen::VectorXd& x) {
    Eigen::MatrixXd jac(1, 1);
    jac(0, 0) = gp(x(0));
    return jac;
  };
  return m;
}

SmoothMap SmoothMap::scalar_fd(std::function<double(double)> g) {
  SmoothMap m;
  m.in_dim = m.out_dim = 1;
  m.eval = [g = std::move(g)](const Eigen::VectorXd& x) {
    Eigen::VectorXd out(1);
    out(0) = g(x(0));
    return out;
  };
  return m;
}

namespace {

void check_dims(const GaussianLimit& limit, const SmoothMap& g,
                std::size_t expected_out) {
  if (limit.dim() != g.in_dim) {
    throw DomainError("delta: limit dimension does not match map input");
  }
  if (expected_out != 0 && g.out_dim != expected_out) {
    throw DomainError("delta: map output dimension mismatch");
  }
}

}  // namespace

GaussianLimit delta_uni(const GaussianLimit& limit, double theta,
                        const SmoothMap& g) {
  check_dims(limit, g, 1);
  Eigen::VectorXd t(1);
  t(0) = theta;
  const double slope = g.jacobian_at(t)(0, 0);
  Eigen::MatrixXd cov(1, 1);
  cov(0, 0) = slope * slope * limit.cov(0, 0);
  return GaussianLimit::centered(std::move(cov), CovProvenance::Formula);
}

GaussianLimit delta_grad(const GaussianLimit& limit,
                         const Eigen::VectorXd& theta, const SmoothMap& g) {
  check_dims(limit, g, 1);
  const Eigen::MatrixXd jac = g.jacobian_at(theta);  // 1 x k
  Eigen::MatrixXd cov(1, 1);
  cov(0, 0) = (jac * limit.cov * jac.transpose())(0, 0);
  if (cov(0, 0) < 0.0 && cov(0, 0) > -1e-12) cov(0, 0) = 0.0;
  return GaussianLimit::centered(std::move(cov), CovProvenance::Formula);
}

GaussianLimit delta_jac(const GaussianLimit& limit,
                        const Eigen::VectorXd& theta, const SmoothMap& g) {
  check_dims(limit, g, 0);
  const Eigen::MatrixXd jac = g.jacobian_at(theta);  // m x k
  Eigen::MatrixXd cov = jac * limit.cov * jac.transpose();
  cov = 0.5 * (cov + cov.transpose());
  return GaussianLimit::centered(std::move(cov), CovProvenance::Formula);
}

}  // namespace convlab
