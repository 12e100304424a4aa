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

#ifndef CONVLAB_QUANTILE_HPP
#define CONVLAB_QUANTILE_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "convlab/law.hpp"
#include "convlab/rng.hpp"

namespace convlab {

// A non-decreasing right-continuous map with search bounds and codomain
// bounds.  bracket endpoints may be infinite; gen_inv expands outward.
struct MonotoneMap {
  std::function<double(double)> eval;
  double bracket_lo = -1.0;
  double bracket_hi = 1.0;
  double range_lo = 0.0;
  double range_hi = 1.0;
};

MonotoneMap monotone_from_cdf(const ScalarLaw& law);

// inf{x : F(x) >= u} by bracket expansion + bisection, relative tolerance
// 1e-12.  The returned point x* satisfies F(x*) >= u.  Throws DomainError
// when u is outside (range_lo, range_hi], BracketError when expansion to
// +-2^60 fails to straddle u.
double gen_inv(const MonotoneMap& map, double u);

// Non-increasing maps are handled by the same kernel through a negation
// wrapper: inf{x : F(x) <= y} == inf{x : -F(x) >= -y}.
double gen_inv_nonincreasing(const MonotoneMap& map, double y);

// Evaluates the generalized inverse either by bisection on the source map
// or through a closed-form/lattice-exact override.
class GeneralizedInverse {
 public:
  static GeneralizedInverse bisection(MonotoneMap map, double tol = 1e-12);
  static GeneralizedInverse with_override(MonotoneMap map,
                                          std::function<double(double)> exact);

  double operator()(double u) const;
  const MonotoneMap& source() const { return map_; }

 private:
  GeneralizedInverse() = default;
  MonotoneMap map_;
  std::function<double(double)> exact_;
  double tol_ = 1e-12;
};

// Closed-form override when the law provides one (Uniform, Exponential,
// Pareto, and the lattice-exact search of discrete laws), cdf bisection
// otherwise.
GeneralizedInverse quantile_of(const ScalarLaw& law);

// Truth values of both sides of the duality (F^{-1}(u) <= t) <=> (u <= F(t)).
std::pair<bool, bool> galois_check(const GeneralizedInverse& inv, double u,
                                   double t);
std::pair<bool, bool> galois_check(const MonotoneMap& map, double u, double t);

// X_i = F^{-1}(U_i) for iid uniforms.
std::vector<double> inv_cdf_sample(const ScalarLaw& law, RngStream& rng,
                                   std::size_t n);

// Rows of quantile transforms of one shared uniform stream: one column per
// approximating law, then the limit law.
struct CoupledTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  void write_csv(std::ostream& os) const;
};

CoupledTable skorohod_couple(const std::vector<ScalarLaw>& laws,
                             const ScalarLaw& limit, RngStream& rng,
                             std::size_t n);

}  // namespace convlab

#endif  // CONVLAB_QUANTILE_HPP
