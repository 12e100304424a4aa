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

#include "convlab/gaussian_limit.hpp"

namespace convlab {

GaussianLimit GaussianLimit::centered(Eigen::MatrixXd cov, CovProvenance tag) {
  GaussianLimit g;
  g.mean = Eigen::VectorXd::Zero(cov.rows());
  g.cov = std::move(cov);
  g.provenance.assign(static_cast<std::size_t>(g.cov.size()), tag);
  return g;
}

CovProvenance GaussianLimit::provenance_at(std::size_t i, std::size_t j) const {
  const auto k = dim();
  if (provenance.size() != k * k) return CovProvenance::Formula;
  return provenance[i * k + j];
}

double GaussianLimit::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (cov + cov.transpose()));
  return es.eigenvalues().minCoeff();
}

bool GaussianLimit::is_psd(double tol) const {
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  return min_eigenvalue() >= -tol;
}

}  // namespace convlab
