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

#ifndef CONVLAB_ORDERSTATS_HPP
#define CONVLAB_ORDERSTATS_HPP

#include <functional>
#include <vector>

#include "convlab/rng.hpp"

namespace convlab {

struct OrderedSample {
  enum class Origin { SortedIid, RenyiExponential, Transform };
  std::vector<double> values;  // non-decreasing
  Origin origin = Origin::SortedIid;
};

// Uniform order statistics as partial sums of n+1 iid standard
// exponentials divided by the total: (S_1/S_{n+1}, ..., S_n/S_{n+1}).
OrderedSample uniform_os_renyi(std::size_t n, RngStream& rng);

// Reference path: sort n iid uniforms (stable).
OrderedSample uniform_os_sorted(std::size_t n, RngStream& rng);

// (-log U_{n,n}, ..., -log U_{1,n}), ascending; distributed as the order
// statistics of n standard exponentials.
OrderedSample exp_os_from_uniform(const OrderedSample& u_os);

// With a_i = -log(1 - U_{i,n}) and a_0 = 0, returns
// ((n-i+1) * (a_i - a_{i-1}))_{i=1..n}: iid standard exponentials.
std::vector<double> normalized_spacings(const OrderedSample& u_os);

// (i * log(U_{i+1,n} / U_{i,n}))_{i=1..n} with U_{n+1,n} = 1: iid standard
// exponentials.
std::vector<double> malmquist_ratios(const OrderedSample& u_os);

// Joint density of the order statistics (Z_{n_1,n}, ..., Z_{n_r,n}) of n
// iid copies of an absolutely continuous law with density h and cdf H,
// evaluated at z.  Zero off the ordered region.
double os_joint_density(const std::function<double(double)>& h,
                        const std::function<double(double)>& H, std::size_t n,
                        const std::vector<std::size_t>& indices,
                        const std::vector<double>& z);

}  // namespace convlab

#endif  // CONVLAB_ORDERSTATS_HPP
