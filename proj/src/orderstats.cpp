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

#include "convlab/orderstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "convlab/law.hpp"

namespace convlab {

OrderedSample uniform_os_renyi(std::size_t n, RngStream& rng) {
  if (n < 1) throw DomainError("uniform_os_renyi: n must be >= 1");
  OrderedSample os;
  os.origin = OrderedSample::Origin::RenyiExponential;
  os.values.resize(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += rng.next_exponential();
    os.values[i] = s;  // S_1, ..., S_n
  }
  const double total = s + rng.next_exponential();  // S_{n+1}
  for (auto& v : os.values) v /= total;
  return os;
}

OrderedSample uniform_os_sorted(std::size_t n, RngStream& rng) {
  OrderedSample os;
  os.origin = OrderedSample::Origin::SortedIid;
  rng.fill_uniform(os.values, n);
  std::stable_sort(os.values.begin(), os.values.end());
  return os;
}

OrderedSample exp_os_from_uniform(const OrderedSample& u_os) {
  OrderedSample out;
  out.origin = OrderedSample::Origin::Transform;
  const auto n = u_os.values.size();
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_os.values[n - 1 - i];
    if (!(u > 0.0 && u < 1.0)) {
      throw DomainError("exp_os_from_uniform: values must lie in (0,1)");
    }
    out.values[i] = -std::log(u);
  }
  return out;
}

std::vector<double> normalized_spacings(const OrderedSample& u_os) {
  const auto n = u_os.values.size();
  std::vector<double> out(n);
  double alpha_prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_os.values[i];
    if (!(u < 1.0)) {
      throw DomainError("normalized_spacings: values must be < 1");
    }
    const double alpha = -std::log1p(-u);
    out[i] = static_cast<double>(n - i) * (alpha - alpha_prev);
    alpha_prev = alpha;
  }
  return out;
}

std::vector<double> malmquist_ratios(const OrderedSample& u_os) {
  const auto n = u_os.values.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u_i = u_os.values[i];
    const double u_next = (i + 1 < n) ? u_os.values[i + 1] : 1.0;
    if (!(u_i > 0.0)) {
      throw DomainError("malmquist_ratios: values must be > 0");
    }
    out[i] = static_cast<double>(i + 1) * std::log(u_next / u_i);
  }
  return out;
}

double os_joint_density(const std::function<double(double)>& h,
                        const std::function<double(double)>& H, std::size_t n,
                        const std::vector<std::size_t>& indices,
                        const std::vector<double>& z) {
  const auto r = indices.size();
  if (r == 0 || r > n) {
    throw DomainError("os_joint_density: index list invalid");
  }
  for (std::size_t i = 0; i < r; ++i) {
    const bool in_range = indices[i] >= 1 && indices[i] <= n;
    const bool increasing = i == 0 || indices[i - 1] < indices[i];
    if (!in_range || !increasing) {
      throw DomainError("os_joint_density: index list invalid");
    }
  }
  if (z.size() != r) {
    throw DomainError("os_joint_density: z has wrong length");
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (!(z[i - 1] < z[i])) return 0.0;
  }

  // Density factors at the r selected points; cdf-increment factors over
  // the r+1 gaps with H(-inf)=0, H(+inf)=1.
  double log_value = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::size_t j = 0; j < r; ++j) {
    const double hz = h(z[j]);
    if (!(hz > 0.0)) return 0.0;
    log_value += std::log(hz);
  }
  std::size_t prev_index = 0;
  double prev_cdf = 0.0;
  for (std::size_t j = 0; j <= r; ++j) {
    const std::size_t cur_index = (j < r) ? indices[j] : n + 1;
    const double cur_cdf = (j < r) ? H(z[j]) : 1.0;
    const auto gap = cur_index - prev_index - 1;
    if (gap > 0) {
      const double dH = cur_cdf - prev_cdf;
      if (!(dH > 0.0)) return 0.0;
      log_value += static_cast<double>(gap) * std::log(dH) -
                   std::lgamma(static_cast<double>(gap) + 1.0);
    }
    prev_index = cur_index;
    prev_cdf = cur_cdf;
  }
  return std::exp(log_value);
}

}  // namespace convlab
