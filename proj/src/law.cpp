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

#include "convlab/law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convlab/numeric.hpp"
#include "json.hpp"

namespace convlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lchoose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::complex<double> cpow_int(std::complex<double> base, long e) {
  std::complex<double> r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Walks outward from the mode with the pmf ratio recurrence; atoms whose
// mass falls below 1e-22 of the modal mass are dropped, so the truncated
// tail is far below every test tolerance.
DiscreteTable build_lattice_table(long k_lo, long k_hi, long mode,
                                  const std::function<double(long)>& log_pmf,
                                  const std::function<double(long)>& ratio) {
  mode = std::clamp(mode, k_lo, k_hi);
  const double p_mode = std::exp(log_pmf(mode));
  const double cutoff = p_mode * 1e-22;

  std::vector<std::pair<long, double>> right;
  double p = p_mode;
  for (long k = mode; k < k_hi;) {
    p *= ratio(k);
    ++k;
    if (!(p > cutoff)) break;
    right.emplace_back(k, p);
  }
  std::vector<std::pair<long, double>> left;
  p = p_mode;
  for (long k = mode; k > k_lo;) {
    p /= ratio(k - 1);
    --k;
    if (!(p > cutoff)) break;
    left.emplace_back(k, p);
  }

  DiscreteTable t;
  t.xs.reserve(left.size() + right.size() + 1);
  t.ps.reserve(t.xs.capacity());
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    t.xs.push_back(static_cast<double>(it->first));
    t.ps.push_back(it->second);
  }
  t.xs.push_back(static_cast<double>(mode));
  t.ps.push_back(p_mode);
  for (const auto& [k, pk] : right) {
    t.xs.push_back(static_cast<double>(k));
    t.ps.push_back(pk);
  }
  t.cum.resize(t.ps.size());
  double c = 0.0;
  for (std::size_t i = 0; i < t.ps.size(); ++i) {
    c += t.ps[i];
    t.cum[i] = c;
  }
  return t;
}

double table_cdf(const DiscreteTable& t, double x) {
  if (x < t.xs.front()) return 0.0;
  if (x >= t.xs.back()) return 1.0;
  const auto it = std::upper_bound(t.xs.begin(), t.xs.end(), x);
  return t.cum[static_cast<std::size_t>(it - t.xs.begin()) - 1];
}

double table_pmf(const DiscreteTable& t, double x) {
  const double tol = 1e-9 * std::max(1.0, std::abs(x));
  auto it = std::lower_bound(t.xs.begin(), t.xs.end(), x - tol);
  if (it != t.xs.end() && std::abs(*it - x) <= tol) {
    return t.ps[static_cast<std::size_t>(it - t.xs.begin())];
  }
  return 0.0;
}

double table_quantile(const DiscreteTable& t, double u) {
  const auto it = std::lower_bound(t.cum.begin(), t.cum.end(), u);
  if (it == t.cum.end()) return t.xs.back();
  return t.xs[static_cast<std::size_t>(it - t.cum.begin())];
}

std::function<void(RngStream&, std::size_t, std::vector<double>&)>
quantile_sampler(std::function<double(double)> q) {
  return [q = std::move(q)](RngStream& rng, std::size_t n,
                            std::vector<double>& out) {
    out.resize(n);
    for (auto& v : out) v = q(rng.next_uniform());
  };
}

// Shared skeleton for table-backed discrete laws.
void attach_table(ScalarLaw& law, DiscreteTable table) {
  auto t = std::make_shared<const DiscreteTable>(std::move(table));
  law.table = t;
  law.kind = MassKind::Discrete;
  law.cdf = [t](double x) { return table_cdf(*t, x); };
  law.mass_or_density = [t](double x) { return table_pmf(*t, x); };
  law.exact_quantile = [t](double u) { return table_quantile(*t, u); };
  law.sampler = quantile_sampler(law.exact_quantile);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, const std::string& law) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ParameterError(law + ": missing parameter '" + key + "'");
  }
  return it->second;
}

long get_int_param(const std::map<std::string, double>& params,
                   const std::string& key, const std::string& law) {
  const double v = get_param(params, key, law);
  if (std::floor(v) != v) {
    throw ParameterError(law + ": parameter '" + key + "' must be an integer");
  }
  return static_cast<long>(v);
}

ScalarLaw bernoulli_law(double p) {
  require(p > 0.0 && p < 1.0, "Bernoulli: parameter 'p' must be in (0,1)");
  ScalarLaw law;
  law.name = "Bernoulli";
  law.params = {{"p", p}};
  law.support = {Support::Kind::Atoms, {0.0, 1.0}, 0.0, 1.0, 1.0};
  DiscreteTable t;
  t.xs = {0.0, 1.0};
  t.ps = {1.0 - p, p};
  t.cum = {1.0 - p, 1.0};
  attach_table(law, std::move(t));
  law.cf = [p](double u) {
    return (1.0 - p) + p * std::exp(std::complex<double>(0.0, u));
  };
  law.mgf = [p](double s) { return (1.0 - p) + p * std::exp(s); };
  law.mgf_domain = [](double) { return true; };
  return law;
}

ScalarLaw binomial_law(long n, double p) {
  require(n >= 1, "Binomial: parameter 'n' must be >= 1");
  require(p > 0.0 && p < 1.0, "Binomial: parameter 'p' must be in (0,1)");
  const double q = 1.0 - p;
  ScalarLaw law;
  law.name = "Binomial";
  law.params = {{"n", static_cast<double>(n)}, {"p", p}};
  law.support = {Support::Kind::Lattice, {}, 0.0, static_cast<double>(n), 1.0};
  const double dn = static_cast<double>(n);
  auto log_pmf = [dn, p, q](long k) {
    const double dk = static_cast<double>(k);
    return lchoose(dn, dk) + dk * std::log(p) + (dn - dk) * std::log(q);
  };
  auto ratio = [dn, p, q](long k) {
    const double dk = static_cast<double>(k);
    return (dn - dk) / (dk + 1.0) * (p / q);
  };
  const long mode = static_cast<long>(std::floor((dn + 1.0) * p));
  attach_table(law, build_lattice_table(0, n, mode, log_pmf, ratio));
  law.cf = [p, q, n](double u) {
    return cpow_int(q + p * std::exp(std::complex<double>(0.0, u)), n);
  };
  law.mgf = [p, q, n](double s) {
    return std::pow(q + p * std::exp(s), static_cast<double>(n));
  };
  law.mgf_domain = [](double) { return true; };
  return law;
}

ScalarLaw hypergeometric_law(long N, long M, long n) {
  require(N >= 1, "Hypergeometric: parameter 'N' must be >= 1");
  require(M >= 0 && M <= N, "Hypergeometric: parameter 'M' must be in [0,N]");
  require(n >= 0 && n <= N, "Hypergeometric: parameter 'n' must be in [0,N]");
  ScalarLaw law;
  law.name = "Hypergeometric";
  law.params = {{"N", static_cast<double>(N)},
                {"M", static_cast<double>(M)},
                {"n", static_cast<double>(n)}};
  const long k_lo = std::max(0l, n - (N - M));
  const long k_hi = std::min(n, M);
  DiscreteTable t;
  double c = 0.0;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double lp = lchoose(static_cast<double>(M), static_cast<double>(k)) +
                      lchoose(static_cast<double>(N - M),
                              static_cast<double>(n - k)) -
                      lchoose(static_cast<double>(N), static_cast<double>(n));
    const double p = std::exp(lp);
    t.xs.push_back(static_cast<double>(k));
    t.ps.push_back(p);
    c += p;
    t.cum.push_back(c);
  }
  law.support = {Support::Kind::Atoms, t.xs, t.xs.front(), t.xs.back(), 1.0};
  attach_table(law, std::move(t));
  // cf left empty: evaluated by summation over the atom table.
  auto tbl = law.table;
  law.mgf = [tbl](double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < tbl->xs.size(); ++i) {
      acc += tbl->ps[i] * std::exp(s * tbl->xs[i]);
    }
    return acc;
  };
  law.mgf_domain = [](double) { return true; };
  return law;
}

ScalarLaw poisson_law(double lambda) {
  require(lambda > 0.0, "Poisson: parameter 'lambda' must be > 0");
  ScalarLaw law;
  law.name = "Poisson";
  law.params = {{"lambda", lambda}};
  law.support = {Support::Kind::Lattice, {}, 0.0, kInf, 1.0};
  auto log_pmf = [lambda](long k) {
    const double dk = static_cast<double>(k);
    return -lambda + dk * std::log(lambda) - std::lgamma(dk + 1.0);
  };
  auto ratio = [lambda](long k) {
    return lambda / (static_cast<double>(k) + 1.0);
  };
  const long mode = static_cast<long>(std::floor(lambda));
  const long cap = mode + 100000000l;
  attach_table(law, build_lattice_table(0, cap, mode, log_pmf, ratio));
  law.cf = [lambda](double u) {
    return std::exp(lambda * (std::exp(std::complex<double>(0.0, u)) - 1.0));
  };
  law.mgf = [lambda](double s) {
    return std::exp(lambda * (std::exp(s) - 1.0));
  };
  law.mgf_domain = [](double) { return true; };
  return law;
}

// Number of Bernoulli(p) trials needed for `successes` successes; support
// starts at `successes`.  Geometric == NegativeBinomial with one success.
ScalarLaw negative_binomial_law(long successes, double p,
                                const std::string& display_name) {
  require(successes >= 1,
          display_name + ": parameter 'k' must be >= 1");
  require(p > 0.0 && p < 1.0,
          display_name + ": parameter 'p' must be in (0,1)");
  const double q = 1.0 - p;
  ScalarLaw law;
  law.name = display_name;
  if (display_name == "Geometric") {
    law.params = {{"p", p}};
  } else {
    law.params = {{"k", static_cast<double>(successes)}, {"p", p}};
  }
  law.support = {Support::Kind::Lattice, {}, static_cast<double>(successes),
                 kInf, 1.0};
  const double r = static_cast<double>(successes);
  auto log_pmf = [r, p, q](long j) {
    const double dj = static_cast<double>(j);
    return lchoose(dj - 1.0, r - 1.0) + r * std::log(p) +
           (dj - r) * std::log(q);
  };
  auto ratio = [r, q](long j) {
    const double dj = static_cast<double>(j);
    return dj / (dj - r + 1.0) * q;
  };
  const long mode = std::max(successes, static_cast<long>(std::floor(r / p)));
  const long cap = mode + 100000000l;
  attach_table(law, build_lattice_table(successes, cap, mode, log_pmf, ratio));
  law.cf = [p, q, successes](double u) {
    const auto e = std::exp(std::complex<double>(0.0, u));
    return cpow_int(p * e / (1.0 - q * e), successes);
  };
  const double t_max = -std::log(q);
  law.mgf = [p, q, r](double s) {
    return std::pow(p * std::exp(s) / (1.0 - q * std::exp(s)), r);
  };
  law.mgf_domain = [t_max](double s) { return s < t_max; };
  return law;
}

ScalarLaw uniform_law() {
  ScalarLaw law;
  law.name = "Uniform";
  law.kind = MassKind::Continuous;
  law.support = {Support::Kind::Interval, {}, 0.0, 1.0, 1.0};
  law.cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  law.mass_or_density = [](double x) {
    return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
  };
  law.cf = [](double u) {
    if (std::abs(u) < 1e-8) {
      return std::complex<double>(1.0 - u * u / 6.0, u / 2.0);
    }
    const std::complex<double> iu(0.0, u);
    return (std::exp(iu) - 1.0) / iu;
  };
  law.mgf = [](double s) {
    return std::abs(s) < 1e-12 ? 1.0 : (std::exp(s) - 1.0) / s;
  };
  law.mgf_domain = [](double) { return true; };
  law.exact_quantile = [](double u) { return u; };
  law.sampler = quantile_sampler(law.exact_quantile);
  return law;
}

ScalarLaw exponential_law() {
  ScalarLaw law;
  law.name = "Exponential";
  law.kind = MassKind::Continuous;
  law.support = {Support::Kind::Interval, {}, 0.0, kInf, 1.0};
  law.cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); };
  law.mass_or_density = [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); };
  law.cf = [](double u) {
    return 1.0 / std::complex<double>(1.0, -u);
  };
  law.mgf = [](double s) { return 1.0 / (1.0 - s); };
  law.mgf_domain = [](double s) { return s < 1.0; };
  law.exact_quantile = [](double u) { return -std::log1p(-u); };
  law.sampler = quantile_sampler(law.exact_quantile);
  return law;
}

ScalarLaw pareto_law(double alpha) {
  require(alpha > 0.0, "Pareto: parameter 'alpha' must be > 0");
  ScalarLaw law;
  law.name = "Pareto";
  law.params = {{"alpha", alpha}};
  law.kind = MassKind::Continuous;
  law.support = {Support::Kind::Interval, {}, 1.0, kInf, 1.0};
  law.cdf = [alpha](double x) {
    return x < 1.0 ? 0.0 : 1.0 - std::pow(x, -alpha);
  };
  law.mass_or_density = [alpha](double x) {
    return x < 1.0 ? 0.0 : alpha * std::pow(x, -alpha - 1.0);
  };
  law.exact_quantile = [alpha](double u) {
    return std::pow(1.0 - u, -1.0 / alpha);
  };
  law.sampler = quantile_sampler(law.exact_quantile);
  return law;
}

ScalarLaw gaussian_law(double mu, double sigma2) {
  require(sigma2 > 0.0, "Gaussian: parameter 'sigma2' must be > 0");
  const double s = std::sqrt(sigma2);
  ScalarLaw law;
  law.name = "Gaussian";
  law.params = {{"mu", mu}, {"sigma2", sigma2}};
  law.kind = MassKind::Continuous;
  law.support = {Support::Kind::Interval, {}, -kInf, kInf, 1.0};
  law.cdf = [mu, s](double x) { return standard_normal_cdf((x - mu) / s); };
  law.mass_or_density = [mu, s](double x) {
    return standard_normal_pdf((x - mu) / s) / s;
  };
  law.cf = [mu, sigma2](double u) {
    return std::exp(std::complex<double>(-0.5 * sigma2 * u * u, mu * u));
  };
  law.mgf = [mu, sigma2](double t) {
    return std::exp(mu * t + 0.5 * sigma2 * t * t);
  };
  law.mgf_domain = [](double) { return true; };
  // No closed-form inverse: the sampler goes through cdf bisection.
  auto cdf = law.cdf;
  law.sampler = [cdf, mu, s](RngStream& rng, std::size_t n,
                             std::vector<double>& out) {
    out.resize(n);
    for (auto& v : out) {
      v = geninv_bisect(cdf, mu - 8.0 * s, mu + 8.0 * s, rng.next_uniform(),
                        1e-12);
    }
  };
  return law;
}

}  // namespace

ScalarLaw make_law(const std::string& name,
                   const std::map<std::string, double>& params) {
  if (name == "Bernoulli") return bernoulli_law(get_param(params, "p", name));
  if (name == "Binomial") {
    return binomial_law(get_int_param(params, "n", name),
                        get_param(params, "p", name));
  }
  if (name == "Hypergeometric") {
    return hypergeometric_law(get_int_param(params, "N", name),
                              get_int_param(params, "M", name),
                              get_int_param(params, "n", name));
  }
  if (name == "Poisson") return poisson_law(get_param(params, "lambda", name));
  if (name == "Geometric") {
    return negative_binomial_law(1, get_param(params, "p", name), name);
  }
  if (name == "NegativeBinomial") {
    return negative_binomial_law(get_int_param(params, "k", name),
                                 get_param(params, "p", name), name);
  }
  if (name == "Uniform") return uniform_law();
  if (name == "Exponential") return exponential_law();
  if (name == "Pareto") return pareto_law(get_param(params, "alpha", name));
  if (name == "Gaussian") {
    return gaussian_law(get_param(params, "mu", name),
                        get_param(params, "sigma2", name));
  }
  throw UnknownLawError("make_law: unknown law name '" + name + "'");
}

VectorLaw multinomial_law(long trials, const std::vector<double>& p) {
  require(trials >= 1, "Multinomial: parameter 'n' must be >= 1");
  require(p.size() >= 2, "Multinomial: parameter 'p' needs >= 2 entries");
  double total = 0.0;
  for (double pi : p) {
    require(pi > 0.0, "Multinomial: every entry of 'p' must be > 0");
    total += pi;
  }
  require(std::abs(total - 1.0) <= 1e-12,
          "Multinomial: parameter 'p' must sum to 1");
  const auto k = p.size();
  std::vector<double> cum(k);
  double c = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    c += p[i];
    cum[i] = c;
  }
  cum.back() = 1.0;

  VectorLaw law;
  law.name = "Multinomial";
  law.dim = k;
  Eigen::VectorXd mean(k);
  Eigen::MatrixXd cov(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    mean(static_cast<long>(i)) = static_cast<double>(trials) * p[i];
    for (std::size_t j = 0; j < k; ++j) {
      const double cij = (i == j) ? p[i] * (1.0 - p[i]) : -p[i] * p[j];
      cov(static_cast<long>(i), static_cast<long>(j)) =
          static_cast<double>(trials) * cij;
    }
  }
  law.mean = mean;
  law.cov = cov;
  law.cf = [p, trials](const Eigen::VectorXd& u) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < p.size(); ++i) {
      s += p[i] * std::exp(std::complex<double>(0.0, u(static_cast<long>(i))));
    }
    return cpow_int(s, trials);
  };
  law.sampler = [cum, k, trials](RngStream& rng, std::size_t n,
                                 std::vector<Eigen::VectorXd>& out) {
    out.assign(n, Eigen::VectorXd::Zero(static_cast<long>(k)));
    for (std::size_t r = 0; r < n; ++r) {
      for (long t = 0; t < trials; ++t) {
        const double u = rng.next_uniform();
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        const auto idx = static_cast<long>(it - cum.begin());
        out[r](std::min<long>(idx, static_cast<long>(k) - 1)) += 1.0;
      }
    }
  };
  return law;
}

VectorLaw gaussian_vector_law(const Eigen::VectorXd& mean,
                              const Eigen::MatrixXd& cov) {
  const auto k = mean.size();
  require(cov.rows() == k && cov.cols() == k,
          "GaussianVector: 'cov' must be k x k");
  require((cov - cov.transpose()).cwiseAbs().maxCoeff() <= 1e-10,
          "GaussianVector: 'cov' must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (cov + cov.transpose()));
  require(es.eigenvalues().minCoeff() >= -1e-10,
          "GaussianVector: 'cov' must be positive semidefinite");
  Eigen::VectorXd sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXd root =
      es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();

  VectorLaw law;
  law.name = "GaussianVector";
  law.dim = static_cast<std::size_t>(k);
  law.mean = mean;
  law.cov = 0.5 * (cov + cov.transpose());
  law.cf = [mean, c = *law.cov](const Eigen::VectorXd& u) {
    const double quad = u.dot(c * u);
    return std::exp(std::complex<double>(-0.5 * quad, mean.dot(u)));
  };
  law.sampler = [mean, root, k](RngStream& rng, std::size_t n,
                                std::vector<Eigen::VectorXd>& out) {
    out.assign(n, Eigen::VectorXd(k));
    Eigen::VectorXd z(k);
    for (std::size_t r = 0; r < n; ++r) {
      for (long i = 0; i < k; ++i) {
        z(i) = standard_normal_quantile(rng.next_uniform());
      }
      out[r] = mean + root * z;
    }
  };
  return law;
}

std::complex<double> cf_eval(const ScalarLaw& law, double u) {
  if (law.cf) return law.cf(u);
  if (law.kind == MassKind::Discrete && law.table) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < law.table->xs.size(); ++i) {
      acc += law.table->ps[i] *
             std::exp(std::complex<double>(0.0, u * law.table->xs[i]));
    }
    return acc;
  }
  throw UnsupportedError("cf_eval: law '" + law.name +
                         "' has no characteristic-function route");
}

std::complex<double> cf_eval(const VectorLaw& law, const Eigen::VectorXd& u) {
  if (static_cast<std::size_t>(u.size()) != law.dim) {
    throw DomainError("cf_eval: argument dimension mismatch");
  }
  if (!law.cf) {
    throw UnsupportedError("cf_eval: vector law '" + law.name +
                           "' has no characteristic-function route");
  }
  return law.cf(u);
}

double mgf_eval(const ScalarLaw& law, double t) {
  if (!law.mgf) {
    throw UnsupportedError("mgf_eval: law '" + law.name + "' has no mgf");
  }
  if (law.mgf_domain && !law.mgf_domain(t)) {
    throw DomainError("mgf_eval: t=" + std::to_string(t) +
                      " outside the finiteness domain of '" + law.name + "'");
  }
  return law.mgf(t);
}

std::vector<double> sample_iid(const ScalarLaw& law, RngStream& rng,
                               std::size_t n) {
  std::vector<double> out;
  law.sampler(rng, n, out);
  return out;
}

std::vector<Eigen::VectorXd> sample_iid(const VectorLaw& law, RngStream& rng,
                                        std::size_t n) {
  std::vector<Eigen::VectorXd> out;
  law.sampler(rng, n, out);
  return out;
}

double mass_at(const ScalarLaw& law, double x) {
  return law.kind == MassKind::Discrete ? law.mass_or_density(x) : 0.0;
}

double cdf_left_limit(const ScalarLaw& law, double x) {
  return law.cdf(x) - mass_at(law, x);
}

double interval_mass(const ScalarLaw& law, double a, double b) {
  if (b < a) return 0.0;
  return law.cdf(b) - cdf_left_limit(law, a);
}

MassTable mass_table(const ScalarLaw& law, double tail_eps) {
  if (law.kind != MassKind::Discrete || !law.table) {
    throw UnsupportedError("mass_table: law '" + law.name +
                           "' is not discrete");
  }
  MassTable out;
  const auto& t = *law.table;
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    out.emplace_back(t.xs[i], t.ps[i]);
    if (1.0 - t.cum[i] <= tail_eps) break;
  }
  return out;
}

std::string law_descriptor(const ScalarLaw& law) {
  nlohmann::ordered_json j;
  j["name"] = law.name;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : law.params) j["params"][k] = v;
  return j.dump();
}

ScalarLaw law_from_descriptor(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  std::map<std::string, double> params;
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) {
      params[k] = v.get<double>();
    }
  }
  return make_law(j.at("name").get<std::string>(), params);
}

}  // namespace convlab
