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

#include "convlab/evt.hpp"

#include <cmath>
#include <limits>

namespace convlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ScalarLaw continuous_law(std::string name,
                         std::map<std::string, double> params, double lo,
                         double hi, std::function<double(double)> cdf,
                         std::function<double(double)> pdf,
                         std::function<double(double)> quantile) {
  ScalarLaw law;
  law.name = std::move(name);
  law.params = std::move(params);
  law.kind = MassKind::Continuous;
  law.support = {Support::Kind::Interval, {}, lo, hi, 1.0};
  law.cdf = std::move(cdf);
  law.mass_or_density = std::move(pdf);
  law.exact_quantile = std::move(quantile);
  law.sampler = [q = law.exact_quantile](RngStream& rng, std::size_t n,
                                         std::vector<double>& out) {
    out.resize(n);
    for (auto& v : out) v = q(rng.next_uniform());
  };
  return law;
}

}  // namespace

ScalarLaw gumbel_limit_law() {
  return continuous_law(
      "GumbelLimit", {}, -kInf, kInf,
      [](double x) { return std::exp(-std::exp(-x)); },
      [](double x) { return std::exp(-x - std::exp(-x)); },
      [](double u) { return -std::log(-std::log(u)); });
}

ScalarLaw frechet_limit_law(double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("Frechet: alpha must be > 0");
  return continuous_law(
      "FrechetLimit", {{"alpha", alpha}}, 0.0, kInf,
      [alpha](double x) {
        return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -alpha));
      },
      [alpha](double x) {
        if (x <= 0.0) return 0.0;
        return alpha * std::pow(x, -alpha - 1.0) *
               std::exp(-std::pow(x, -alpha));
      },
      [alpha](double u) { return std::pow(-std::log(u), -1.0 / alpha); });
}

ScalarLaw weibull_limit_law(double beta) {
  if (!(beta > 0.0)) throw ParameterError("Weibull: beta must be > 0");
  return continuous_law(
      "WeibullLimit", {{"beta", beta}}, -kInf, 0.0,
      [beta](double x) {
        return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, beta));
      },
      [beta](double x) {
        if (x >= 0.0) return 0.0;
        return beta * std::pow(-x, beta - 1.0) * std::exp(-std::pow(-x, beta));
      },
      [beta](double u) { return -std::pow(-std::log(u), 1.0 / beta); });
}

ScalarLaw gumbel_finite_law(std::size_t n) {
  if (n < 1) throw ParameterError("gumbel_finite_law: n must be >= 1");
  const double dn = static_cast<double>(n);
  const double left = -std::log(dn);
  return continuous_law(
      "GumbelFinite", {{"n", dn}}, left, kInf,
      [dn, left](double x) {
        if (x <= left) return 0.0;
        return std::exp(dn * std::log1p(-std::exp(-x) / dn));
      },
      [dn, left](double x) {
        if (x <= left) return 0.0;
        return std::exp((dn - 1.0) * std::log1p(-std::exp(-x) / dn) - x);
      },
      [dn](double u) {
        // (1 - e^{-x}/n)^n = u  =>  x = -log(-n expm1(log(u)/n))
        return -std::log(-dn * std::expm1(std::log(u) / dn));
      });
}

ScalarLaw frechet_finite_law(std::size_t n, double alpha) {
  if (n < 1) throw ParameterError("frechet_finite_law: n must be >= 1");
  if (!(alpha > 0.0)) {
    throw ParameterError("frechet_finite_law: alpha must be > 0");
  }
  const double dn = static_cast<double>(n);
  const double left = std::pow(dn, -1.0 / alpha);  // support edge: M_n >= 1
  return continuous_law(
      "FrechetFinite", {{"n", dn}, {"alpha", alpha}}, left, kInf,
      [dn, alpha, left](double x) {
        if (x <= left) return 0.0;
        return std::exp(dn * std::log1p(-std::pow(x, -alpha) / dn));
      },
      [dn, alpha, left](double x) {
        if (x <= left) return 0.0;
        return std::exp((dn - 1.0) * std::log1p(-std::pow(x, -alpha) / dn)) *
               alpha * std::pow(x, -alpha - 1.0);
      },
      [dn, alpha](double u) {
        return std::pow(-dn * std::expm1(std::log(u) / dn), -1.0 / alpha);
      });
}

ScalarLaw weibull_finite_law(std::size_t n) {
  if (n < 1) throw ParameterError("weibull_finite_law: n must be >= 1");
  const double dn = static_cast<double>(n);
  return continuous_law(
      "WeibullFinite", {{"n", dn}}, -dn, 0.0,
      [dn](double x) {
        if (x >= 0.0) return 1.0;
        if (x <= -dn) return 0.0;
        return std::exp(dn * std::log1p(x / dn));
      },
      [dn](double x) {
        if (x >= 0.0 || x <= -dn) return 0.0;
        return std::exp((dn - 1.0) * std::log1p(x / dn));
      },
      [dn](double u) { return dn * std::expm1(std::log(u) / dn); });
}

}  // namespace convlab
