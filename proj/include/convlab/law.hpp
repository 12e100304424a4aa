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

#ifndef CONVLAB_LAW_HPP
#define CONVLAB_LAW_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convlab/rng.hpp"

namespace convlab {

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownLawError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MassKind { Discrete, Continuous };

struct Support {
  enum class Kind { Atoms, Lattice, Interval } kind = Kind::Interval;
  std::vector<double> atoms;  // Kind::Atoms, sorted
  double lo = 0.0;            // Lattice first point / interval left end
  double hi = 0.0;            // Lattice last point (may be +inf) / right end
  double step = 1.0;          // lattice spacing
};

// Atom positions, masses and running sums of a discrete law, truncated
// where the remaining tail is negligible (see law.cpp; far below 1e-12).
struct DiscreteTable {
  std::vector<double> xs;
  std::vector<double> ps;
  std::vector<double> cum;
};

// A probability law on the real line, fully described by evaluators.
// All evaluators are pure; a constructed law is immutable and safe to
// share across threads.  Samplers draw from an explicit RngStream owned
// by exactly one caller at a time.
struct ScalarLaw {
  std::string name;
  std::map<std::string, double> params;
  Support support;
  MassKind kind = MassKind::Continuous;

  std::function<double(double)> cdf;
  std::function<double(double)> mass_or_density;
  std::function<std::complex<double>(double)> cf;  // may be empty
  std::function<double(double)> mgf;               // may be empty
  std::function<bool(double)> mgf_domain;          // set alongside mgf

  // Exact generalized inverse of the cdf when one is known in closed form
  // (Uniform, Exponential, Pareto) or by lattice search (discrete laws).
  // Empty for the Gaussian, whose sampler falls back to cdf bisection.
  std::function<double(double)> exact_quantile;

  std::function<void(RngStream&, std::size_t, std::vector<double>&)> sampler;

  std::shared_ptr<const DiscreteTable> table;  // discrete laws only
};

struct VectorLaw {
  std::string name;
  std::size_t dim = 0;
  std::function<std::complex<double>(const Eigen::VectorXd&)> cf;
  std::function<void(RngStream&, std::size_t, std::vector<Eigen::VectorXd>&)>
      sampler;
  std::optional<Eigen::VectorXd> mean;
  std::optional<Eigen::MatrixXd> cov;
};

// Catalog: Bernoulli(p), Binomial(n,p), Hypergeometric(N,M,n),
// Poisson(lambda), Geometric(p), NegativeBinomial(k,p), Uniform,
// Exponential, Pareto(alpha), Gaussian(mu,sigma2).
ScalarLaw make_law(const std::string& name,
                   const std::map<std::string, double>& params);

VectorLaw multinomial_law(long trials, const std::vector<double>& p);
VectorLaw gaussian_vector_law(const Eigen::VectorXd& mean,
                              const Eigen::MatrixXd& cov);

std::complex<double> cf_eval(const ScalarLaw& law, double u);
std::complex<double> cf_eval(const VectorLaw& law, const Eigen::VectorXd& u);

double mgf_eval(const ScalarLaw& law, double t);

std::vector<double> sample_iid(const ScalarLaw& law, RngStream& rng,
                               std::size_t n);
std::vector<Eigen::VectorXd> sample_iid(const VectorLaw& law, RngStream& rng,
                                        std::size_t n);

// Point mass at x (0 for continuous laws and off-atom points).
double mass_at(const ScalarLaw& law, double x);

// F(x-) = F(x) - P(X = x).
double cdf_left_limit(const ScalarLaw& law, double x);

// P(a <= X <= b).
double interval_mass(const ScalarLaw& law, double a, double b);

// Atom/mass pairs covering all but at most tail_eps of the law's mass.
using MassTable = std::vector<std::pair<double, double>>;
MassTable mass_table(const ScalarLaw& law, double tail_eps = 1e-12);

// JSON-compatible descriptor round trip: {"name": ..., "params": {...}}.
std::string law_descriptor(const ScalarLaw& law);
ScalarLaw law_from_descriptor(const std::string& json_text);

}  // namespace convlab

#endif  // CONVLAB_LAW_HPP
