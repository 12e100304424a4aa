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

#ifndef CONVLAB_GAUSSIAN_LIMIT_HPP
#define CONVLAB_GAUSSIAN_LIMIT_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace convlab {

enum class CovProvenance : std::uint8_t { Formula, Estimated };

// Mean vector and covariance matrix of a weak limit, with per-entry
// provenance of the covariance.
struct GaussianLimit {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  std::vector<CovProvenance> provenance;  // row-major, dim*dim entries

  static GaussianLimit centered(Eigen::MatrixXd cov,
                                CovProvenance tag = CovProvenance::Formula);

  std::size_t dim() const { return static_cast<std::size_t>(mean.size()); }
  CovProvenance provenance_at(std::size_t i, std::size_t j) const;
  double min_eigenvalue() const;
  bool is_psd(double tol = 1e-10) const;
};

}  // namespace convlab

#endif  // CONVLAB_GAUSSIAN_LIMIT_HPP
