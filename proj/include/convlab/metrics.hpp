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

#ifndef CONVLAB_METRICS_HPP
#define CONVLAB_METRICS_HPP

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "convlab/gaussian_limit.hpp"
#include "convlab/law.hpp"
#include "convlab/rng.hpp"

namespace convlab {

struct AtomPointError : DomainError {
  using DomainError::DomainError;
};

// Exact Kolmogorov distance between the empirical cdf of a sample and an
// analytic cdf, evaluating both one-sided values at every jump.  The
// function form assumes a continuous cdf (sample ties then have measure
// zero); the law form also handles atoms of a discrete law exactly.
double ks_distance_empirical(std::vector<double> sample,
                             const std::function<double(double)>& cdf);
double ks_distance_empirical(std::vector<double> sample,
                             const ScalarLaw& law);

// Exact two-sample Kolmogorov distance.
double ks_distance_two_sample(std::vector<double> a, std::vector<double> b);

// max |F1 - F2| over a non-empty grid (both cdfs analytic).
double ks_distance_grid(const std::function<double(double)>& f1,
                        const std::function<double(double)>& f2,
                        const std::vector<double>& grid);

// Exact sup |F_std - G| for a standardized lattice law: the sup is
// attained at a jump of F_std, where both one-sided values are checked.
// F_std is the cdf of (X - center)/scale.
double ks_lattice_vs_cdf(const ScalarLaw& law, double center, double scale,
                         const std::function<double(double)>& limit_cdf);

struct TvResult {
  double tv = 0.0;
  // Maximizing atom set from the exhaustive subset search, present when
  // the union support has at most 20 atoms.
  std::optional<std::vector<double>> witness;
};

// 1/2 sum |p - q| over the union support; for small supports the result
// is cross-checked against the exhaustive sup over all subsets.
TvResult tv_discrete(const MassTable& p, const MassTable& q);

struct QuadratureScheme {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double tol = 1e-9;
  unsigned max_depth = 30;
};

// 1/2 integral |p1 - p2|; throws when the quadrature error estimate
// exceeds 1e-6.
double tv_continuous(const std::function<double(double)>& p1,
                     const std::function<double(double)>& p2,
                     const QuadratureScheme& scheme);

// max over the grid of |cf_n(u) - cf(u)|.
double cf_distance(const ScalarLaw& law_n, const ScalarLaw& law,
                   const std::vector<double>& grid);
std::vector<double> default_cf_grid(double radius = 10.0, double step = 0.1);

// |F_n(t) - F(t)| per point; points must be continuity points of the
// limit (an atom of the limit raises AtomPointError naming the point).
std::vector<double> cdf_continuity_check(const ScalarLaw& law_n,
                                         const ScalarLaw& limit,
                                         const std::vector<double>& points);

// Smallest M on a refined geometric grid with
// min over laws of P([-M, M]) >= 1 - eps.
double tightness_radius(const std::vector<ScalarLaw>& laws, double eps);

enum class OrderMode { SmallO, BigO };

struct StochOrderResult {
  bool pass = false;
  std::vector<std::size_t> index_values;
  std::vector<double> q99;  // empirical 99%-quantile of |X_n| / a_n
};

// Small-o: the quantile trace is non-increasing and ends below tol.
// Big-O: the trace stays within a factor 3 band.
StochOrderResult stoch_order_check(
    const std::map<std::size_t, std::vector<double>>& samples_by_n,
    const std::function<double(std::size_t)>& rate, OrderMode mode,
    double tol);

struct WoldDirectionResult {
  Eigen::VectorXd direction;
  double variance = 0.0;   // a^T Sigma a
  bool degenerate = false;
  double ks = 0.0;         // vs N(0, variance); meaningful when !degenerate
  double q99_abs = 0.0;    // 99%-quantile of |projection| when degenerate
};

// Projects the replicates on every direction and compares with the
// matching one-dimensional Gaussian.  Requires >= 8 directions.
std::vector<WoldDirectionResult> wold_test(
    const std::vector<Eigen::VectorXd>& replicates, const GaussianLimit& limit,
    const std::vector<Eigen::VectorXd>& directions);

// The k canonical axes followed by random unit vectors, total directions.
std::vector<Eigen::VectorXd> wold_directions(std::size_t k, std::size_t total,
                                             RngStream& rng);

}  // namespace convlab

#endif  // CONVLAB_METRICS_HPP
