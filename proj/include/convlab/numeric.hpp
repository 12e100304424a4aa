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

#ifndef CONVLAB_NUMERIC_HPP
#define CONVLAB_NUMERIC_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace convlab {

// Standard normal distribution function, Phi(x) = erfc(-x/sqrt(2))/2.
// Absolute error is a few ulp (< 1e-15), well inside the 1e-12 contract.
double standard_normal_cdf(double x);

double standard_normal_pdf(double x);

// Standard normal quantile: rational initial guess (Acklam's algorithm)
// polished by two Halley steps on erfc; absolute error below 1e-13.
double standard_normal_quantile(double p);

// Smallest x with eval(x) >= u, located by bisection for a non-decreasing
// eval.  Requires eval(lo) < u <= eval(hi).  Returns the upper end of the
// final bracket, so eval(result) >= u always holds.
double bisect_monotone(const std::function<double(double)>& eval, double lo,
                       double hi, double u, double rel_tol);

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bisect_monotone with automatic bracket expansion: the hints are doubled
// outward (at most 60 times, i.e. up to +-2^60) until eval(lo) < u <=
// eval(hi); throws BracketError when expansion fails.
double geninv_bisect(const std::function<double(double)>& eval,
                     double lo_hint, double hi_hint, double u,
                     double rel_tol);

// sup |f - g| over [lo, hi]: coarse scan followed by golden-section
// refinement around the best local maxima.  Both functions must be
// continuous on the interval.
double sup_abs_diff(const std::function<double(double)>& f,
                    const std::function<double(double)>& g, double lo,
                    double hi, std::size_t coarse_points = 4001);

// Order-statistic quantile: k-th smallest with k = ceil(q * n), clamped to
// [1, n].  Sorts a copy.
double empirical_quantile(std::vector<double> values, double q);

double sample_mean(const std::vector<double>& values);
double sample_variance(const std::vector<double>& values);  // 1/n convention

}  // namespace convlab

#endif  // CONVLAB_NUMERIC_HPP
