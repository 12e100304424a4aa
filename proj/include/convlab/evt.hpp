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

#ifndef CONVLAB_EVT_HPP
#define CONVLAB_EVT_HPP

#include "convlab/law.hpp"

namespace convlab {

// The three extreme-value limit laws.
ScalarLaw gumbel_limit_law();                // cdf exp(-e^{-x})
ScalarLaw frechet_limit_law(double alpha);   // cdf exp(-x^{-alpha}), x >= 0
ScalarLaw weibull_limit_law(double beta);    // cdf exp(-(-x)^beta), x <= 0

// Exact laws of the normalized maxima at finite sample size:
//   gumbel:  M_n - log n          for iid standard exponentials
//   frechet: n^{-1/alpha} M_n     for iid Pareto(alpha)
//   weibull: n (M_n - 1)          for iid Uniform(0,1)
ScalarLaw gumbel_finite_law(std::size_t n);
ScalarLaw frechet_finite_law(std::size_t n, double alpha);
ScalarLaw weibull_finite_law(std::size_t n);

}  // namespace convlab

#endif  // CONVLAB_EVT_HPP
