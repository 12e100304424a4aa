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

#ifndef CONVLAB_FEP_HPP
#define CONVLAB_FEP_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convlab/gaussian_limit.hpp"
#include "convlab/law.hpp"

namespace convlab {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n points in R^d, row-major flat storage.
struct Sample {
  std::vector<double> data;
  std::size_t n = 0;
  std::size_t dim = 1;

  static Sample from_scalars(std::vector<double> values);
  static Sample from_pairs(const std::vector<double>& xs,
                           const std::vector<double>& ys);

  std::span<const double> point(std::size_t i) const {
    return {data.data() + i * dim, dim};
  }
};

// Real measurable function of a sample point, with optional exact moments
// under the working law.
struct FnHandle {
  std::string label;
  std::function<double(std::span<const double>)> eval;
  std::optional<double> mean_hint;
  std::optional<double> second_moment_hint;
};

FnHandle coordinate_fn(std::size_t index, std::string label = "");
FnHandle constant_fn(double c);
FnHandle indicator_leq(double threshold);  // 1_{x_0 <= t}
FnHandle linear_combination(double a, const FnHandle& f, double b,
                            const FnHandle& g);
FnHandle scaled_fn(double a, const FnHandle& f);

enum class MeanMode { Analytic, PlugIn };

// n^{-1/2} * sum_i (f(Z_i) - m); m is the mean hint in Analytic mode and
// the sample mean in PlugIn mode (identically-constant f gives exactly 0).
double gn_eval(const Sample& sample, const FnHandle& f, MeanMode mode);

// Covariance functional: integral of (f - Pf)(g - Pg) dP, evaluated by
// lattice summation or adaptive Gauss-Kronrod quadrature under a catalog
// law, or by the plug-in estimate on a sample.
double gamma_cov(const FnHandle& f, const FnHandle& g, const ScalarLaw& law);
double gamma_cov(const FnHandle& f, const FnHandle& g, const Sample& sample);

// Centered Gaussian limit of (G_n(f_1), ..., G_n(f_k)).
GaussianLimit fd_limit(const std::vector<FnHandle>& fs, const ScalarLaw& law);

// A statistic A_n = A + n^{-1/2} G_n(L) + o_P(n^{-1/2}).
struct InfluenceExpansion {
  double center = 0.0;
  FnHandle influence;
};

InfluenceExpansion constant_expansion(double c);
InfluenceExpansion exp_add(const InfluenceExpansion& a,
                           const InfluenceExpansion& b);
InfluenceExpansion exp_mul(const InfluenceExpansion& a,
                           const InfluenceExpansion& b);
InfluenceExpansion exp_div(const InfluenceExpansion& a,
                           const InfluenceExpansion& b);
InfluenceExpansion exp_scale(double c, const InfluenceExpansion& a);
InfluenceExpansion exp_map(const std::function<double(double)>& g,
                           const std::function<double(double)>& g_prime,
                           const InfluenceExpansion& a);

// Central moments feeding the asymptotic variance of the empirical
// correlation coefficient; mu_pq = E[(X-mu_x)^p (Y-mu_y)^q].
struct CentralMomentRecord {
  double sigma2_x = 1.0;
  double sigma2_y = 1.0;
  double rho = 0.0;
  double mu22 = 1.0;
  double mu4x = 3.0;
  double mu4y = 3.0;
  double mu31 = 0.0;
  double mu13 = 0.0;
};

// Asymptotic variance of sqrt(n) (rho_n - rho).
double corr_sigma2(const CentralMomentRecord& m);

// Exact moment record of a standardized bivariate Gaussian pair with
// correlation rho (fourth moments by the Gaussian product-moment rules).
CentralMomentRecord gaussian_moment_record(double rho);

// Plug-in correlation coefficient of a 2-d sample (1/n moments everywhere).
double pearson_rho(const Sample& pairs);

struct CorrPipelineResult {
  double rho_hat = 0.0;
  InfluenceExpansion expansion;
  double sigma2_hat = 0.0;
};

// Plug-in rho_n, its influence expansion built from the expansion algebra
// in standardized coordinates (constants frozen at the full-sample
// estimates), and the plug-in estimate of the asymptotic variance.
CorrPipelineResult corr_pipeline(const Sample& pairs);

}  // namespace convlab

#endif  // CONVLAB_FEP_HPP
