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

#include "convlab/scenarios.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <thread>

#include "convlab/evt.hpp"
#include "convlab/fep.hpp"
#include "convlab/law.hpp"
#include "convlab/metrics.hpp"
#include "convlab/numeric.hpp"

namespace convlab {

namespace {

using nlohmann::json;

struct Ctx {
  json params;
  McConfig mc;
  std::uint64_t seed = 0;
  std::uint64_t tag = 0;  // hash of the scenario id
};

double jget(const json& p, const char* key, double def) {
  if (!p.contains(key)) return def;
  if (!p.at(key).is_number()) {
    throw ParameterError(std::string("parameter '") + key +
                         "' must be a number");
  }
  return p.at(key).get<double>();
}

std::vector<double> jget_vec(const json& p, const char* key,
                             std::vector<double> def) {
  if (!p.contains(key)) return def;
  if (!p.at(key).is_array()) {
    throw ParameterError(std::string("parameter '") + key +
                         "' must be an array");
  }
  std::vector<double> out;
  for (const auto& v : p.at(key)) {
    if (!v.is_number()) {
      throw ParameterError(std::string("parameter '") + key +
                           "' must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<double> ladder_or(const Ctx& c, std::vector<double> def) {
  return c.mc.index_ladder.empty() ? def : c.mc.index_ladder;
}

// Replicate r always draws from substream (subtag, r) of the run seed, so
// results do not depend on how replicates are spread over workers.
template <typename T, typename Fn>
std::vector<T> run_replicates(const Ctx& c, std::uint64_t subtag,
                              std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const RngStream base(c.seed);
  const std::size_t workers = std::max<std::size_t>(1, c.mc.workers);
  if (workers == 1 || count < 2) {
    for (std::size_t r = 0; r < count; ++r) {
      RngStream rng = base.substream(subtag, r);
      out[r] = fn(rng);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t r = next.fetch_add(1);
        if (r >= count) break;
        RngStream rng = base.substream(subtag, r);
        out[r] = fn(rng);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

RngStream aux_stream(const Ctx& c, std::uint64_t which) {
  return RngStream(c.seed).substream(c.tag, 0xA0000000'00000000ull + which);
}

std::uint64_t ladder_tag(const Ctx& c, double index_value) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(index_value));
  std::memcpy(&bits, &index_value, sizeof(bits));
  return mix64(c.tag ^ bits);
}

double wold_tolerance(std::size_t replicates) {
  return 1.63 / std::sqrt(static_cast<double>(replicates)) * 1.5;
}

double ks_noise_band(std::size_t replicates) {
  return 0.3 / std::sqrt(static_cast<double>(replicates));
}

Eigen::MatrixXd replicate_covariance(
    const std::vector<Eigen::VectorXd>& reps) {
  const auto k = reps.front().size();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(k);
  for (const auto& v : reps) mean += v;
  mean /= static_cast<double>(reps.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(k, k);
  for (const auto& v : reps) {
    const Eigen::VectorXd d = v - mean;
    cov += d * d.transpose();
  }
  return cov / static_cast<double>(reps.size());
}

double max_nondegenerate_ks(const std::vector<WoldDirectionResult>& dirs) {
  double best = 0.0;
  for (const auto& d : dirs) {
    if (!d.degenerate) best = std::max(best, d.ks);
  }
  return best;
}

std::string format_series(const char* label, const std::vector<double>& v) {
  std::string s = label;
  s += "=[";
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.6g", v[i]);
    if (i) s += ", ";
    s += buf;
  }
  s += "]";
  return s;
}

ConvergenceReport base_report(const Ctx& c, const std::string& id,
                              const std::string& metric,
                              std::vector<double> ladder,
                              std::vector<double> values, double tol) {
  ConvergenceReport rep;
  rep.scenario = id;
  rep.index_values = std::move(ladder);
  rep.metric = metric;
  rep.values = std::move(values);
  rep.mc = {c.seed, c.mc.replicates, rep.index_values};
  rep.tolerance = tol;
  return rep;
}

// ---------------------------------------------------------------------
// Exact discrete scenarios.
// ---------------------------------------------------------------------

void lattice_overlay(ScenarioResult& res, const ScalarLaw& law_n,
                     const ScalarLaw& limit, double center, double scale) {
  const auto table = mass_table(law_n, 1e-12);
  const std::size_t stride = std::max<std::size_t>(1, table.size() / 2000);
  for (std::size_t i = 0; i < table.size(); i += stride) {
    const double x = table[i].first;
    const double z = (x - center) / scale;
    res.cdf_overlay.push_back({z, law_n.cdf(x), limit.cdf(z)});
  }
}

ScenarioResult scenario_hyp2bin(const Ctx& c) {
  const double draws = jget(c.params, "n", 5);
  const double ratio = jget(c.params, "ratio", 0.5);
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ParameterError("HYP2BIN: 'ratio' must be in (0,1)");
  }
  const auto ladder = ladder_or(c, {100, 1000, 10000});
  ScenarioResult res;
  std::vector<double> values;
  ScalarLaw hyper, bin;
  for (const double dN : ladder) {
    const double N = std::round(dN);
    const double M = std::round(N * ratio);
    hyper = make_law("Hypergeometric", {{"N", N}, {"M", M}, {"n", draws}});
    bin = make_law("Binomial", {{"n", draws}, {"p", M / N}});
    values.push_back(tv_discrete(mass_table(hyper), mass_table(bin)).tv);
  }
  res.report = base_report(c, "HYP2BIN", "tv_discrete", ladder, values, 1e-2);
  res.report.pass = exact_trace_pass(values, res.report.tolerance);
  res.report.notes = format_series("tv", values);
  lattice_overlay(res, hyper, bin, 0.0, 1.0);
  return res;
}

ScenarioResult scenario_bin2pois(const Ctx& c) {
  const double lambda = jget(c.params, "lambda", 3.0);
  if (!(lambda > 0.0)) throw ParameterError("BIN2POIS: 'lambda' must be > 0");
  const auto ladder = ladder_or(c, {100, 1000, 10000});
  const ScalarLaw pois = make_law("Poisson", {{"lambda", lambda}});
  ScenarioResult res;
  std::vector<double> values;
  ScalarLaw bin;
  for (const double dn : ladder) {
    const double n = std::round(dn);
    if (!(lambda / n < 1.0)) {
      throw ParameterError("BIN2POIS: requires lambda/n < 1");
    }
    bin = make_law("Binomial", {{"n", n}, {"p", lambda / n}});
    values.push_back(tv_discrete(mass_table(bin), mass_table(pois)).tv);
  }
  res.report = base_report(c, "BIN2POIS", "tv_discrete", ladder, values, 1e-3);
  res.report.pass = exact_trace_pass(values, res.report.tolerance);
  const double cf_final = cf_distance(bin, pois, default_cf_grid());
  res.stats["cf_distance_final"] = cf_final;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "; cf_distance_final=%.6g", cf_final);
  res.report.notes = format_series("tv", values) + buf;
  lattice_overlay(res, bin, pois, 0.0, 1.0);
  return res;
}

// Shared by the three exact standardized-lattice scenarios.
ScenarioResult standardized_lattice_scenario(
    const Ctx& c, const std::string& id, std::vector<double> ladder,
    double tol,
    const std::function<void(double, ScalarLaw&, double&, double&)>& build) {
  ScenarioResult res;
  std::vector<double> values;
  ScalarLaw law;
  double center = 0.0, scale = 1.0;
  for (const double idx : ladder) {
    build(idx, law, center, scale);
    values.push_back(
        ks_lattice_vs_cdf(law, center, scale, standard_normal_cdf));
  }
  res.report = base_report(c, id, "ks_exact_lattice", ladder, values, tol);
  res.report.pass = exact_trace_pass(values, res.report.tolerance);
  res.report.notes = format_series("ks", values);
  const ScalarLaw gauss = make_law("Gaussian", {{"mu", 0.0}, {"sigma2", 1.0}});
  lattice_overlay(res, law, gauss, center, scale);
  return res;
}

ScenarioResult scenario_pois2gauss(const Ctx& c) {
  return standardized_lattice_scenario(
      c, "POIS2GAUSS", ladder_or(c, {100, 1000, 10000}), 5e-3,
      [](double idx, ScalarLaw& law, double& center, double& scale) {
        law = make_law("Poisson", {{"lambda", idx}});
        center = idx;
        scale = std::sqrt(idx);
      });
}

ScenarioResult scenario_bin_clt(const Ctx& c) {
  const double p = jget(c.params, "p", 0.5);
  if (!(p > 0.0 && p < 1.0)) {
    throw ParameterError("BIN_CLT: 'p' must be in (0,1)");
  }
  return standardized_lattice_scenario(
      c, "BIN_CLT", ladder_or(c, {100, 1000, 10000}), 6e-3,
      [p](double idx, ScalarLaw& law, double& center, double& scale) {
        const double n = std::round(idx);
        law = make_law("Binomial", {{"n", n}, {"p", p}});
        center = n * p;
        scale = std::sqrt(n * p * (1.0 - p));
      });
}

ScenarioResult scenario_negbin_clt(const Ctx& c) {
  const double p = jget(c.params, "p", 0.5);
  if (!(p > 0.0 && p < 1.0)) {
    throw ParameterError("NEGBIN_CLT: 'p' must be in (0,1)");
  }
  // Z_k = p (Y_k - k/p) / sqrt(q k).
  return standardized_lattice_scenario(
      c, "NEGBIN_CLT", ladder_or(c, {100, 1000, 10000}), 6e-3,
      [p](double idx, ScalarLaw& law, double& center, double& scale) {
        const double k = std::round(idx);
        law = make_law("NegativeBinomial", {{"k", k}, {"p", p}});
        center = k / p;
        scale = std::sqrt((1.0 - p) * k) / p;
      });
}

// ---------------------------------------------------------------------
// Extreme-value scenarios: exact sup-distance plus Monte Carlo maxima.
// ---------------------------------------------------------------------

ScenarioResult evt_scenario(const Ctx& c, const std::string& id,
                            const ScalarLaw& limit,
                            const std::function<ScalarLaw(std::size_t)>& at_n,
                            double grid_lo, double grid_hi) {
  const auto ladder = ladder_or(c, {100, 1000, 10000});
  const std::size_t reps = c.mc.replicates;
  ScenarioResult res;
  std::vector<double> values;
  std::vector<double> mc_ks;
  bool mc_ok = true;
  ScalarLaw finite;
  for (const double dn : ladder) {
    const auto n = static_cast<std::size_t>(std::round(dn));
    finite = at_n(n);
    const double sup =
        sup_abs_diff(finite.cdf, limit.cdf, grid_lo, grid_hi, 4001);
    values.push_back(sup);
    // Monte Carlo maxima drawn through the finite-n quantile.
    auto draws = run_replicates<double>(c, ladder_tag(c, dn), reps,
                                        [&finite](RngStream& rng) {
                                          return finite.exact_quantile(
                                              rng.next_uniform());
                                        });
    const double ks = ks_distance_empirical(std::move(draws), limit.cdf);
    mc_ks.push_back(ks);
    if (!(ks < wold_tolerance(reps) + sup)) mc_ok = false;
  }
  res.report = base_report(c, id, "evt_sup_exact", ladder, values, 5e-3);
  res.report.pass =
      exact_trace_pass(values, res.report.tolerance) && mc_ok;
  res.report.notes =
      format_series("sup", values) + "; " + format_series("mc_ks", mc_ks);
  res.stats["mc_ks_final"] = mc_ks.back();
  const int overlay_points = 400;
  for (int i = 0; i <= overlay_points; ++i) {
    const double x =
        grid_lo + (grid_hi - grid_lo) * i / static_cast<double>(overlay_points);
    res.cdf_overlay.push_back({x, finite.cdf(x), limit.cdf(x)});
  }
  return res;
}

ScenarioResult scenario_evt_gumbel(const Ctx& c) {
  return evt_scenario(
      c, "EVT_GUMBEL", gumbel_limit_law(),
      [](std::size_t n) { return gumbel_finite_law(n); }, -6.0, 12.0);
}

ScenarioResult scenario_evt_frechet(const Ctx& c) {
  const double alpha = jget(c.params, "alpha", 2.0);
  if (!(alpha > 0.0)) {
    throw ParameterError("EVT_FRECHET: 'alpha' must be > 0");
  }
  return evt_scenario(
      c, "EVT_FRECHET", frechet_limit_law(alpha),
      [alpha](std::size_t n) { return frechet_finite_law(n, alpha); }, 1e-6,
      30.0);
}

ScenarioResult scenario_evt_weibull(const Ctx& c) {
  return evt_scenario(
      c, "EVT_WEIBULL", weibull_limit_law(1.0),
      [](std::size_t n) { return weibull_finite_law(n); }, -12.0, 0.0);
}

// ---------------------------------------------------------------------
// Monte Carlo Gaussian-limit scenarios (Wold projections).
// ---------------------------------------------------------------------

ScenarioResult gaussian_fidi_scenario(
    const Ctx& c, const std::string& id, const GaussianLimit& limit,
    std::vector<Eigen::VectorXd> directions, const std::vector<double>& ladder,
    const std::function<Eigen::VectorXd(std::size_t, RngStream&)>& draw) {
  const std::size_t reps = c.mc.replicates;
  ScenarioResult res;
  std::vector<double> values;
  std::vector<Eigen::VectorXd> final_reps;
  for (std::size_t li = 0; li < ladder.size(); ++li) {
    const double dn = ladder[li];
    const auto n = static_cast<std::size_t>(std::round(dn));
    auto replicate = [n, &draw](RngStream& rng) { return draw(n, rng); };
    auto rep_vectors = run_replicates<Eigen::VectorXd>(
        c, ladder_tag(c, dn), reps, replicate);
    const auto dirs = wold_test(rep_vectors, limit, directions);
    values.push_back(max_nondegenerate_ks(dirs));
    for (const auto& d : dirs) {
      if (d.degenerate) res.stats["degenerate_q99"] = d.q99_abs;
    }
    if (li + 1 == ladder.size()) final_reps = std::move(rep_vectors);
  }
  res.emp_cov = replicate_covariance(final_reps);
  res.target_cov = limit.cov;
  res.stats["cov_err_max"] =
      (res.emp_cov - res.target_cov).cwiseAbs().maxCoeff();
  res.report = base_report(c, id, "wold_max_ks", ladder, values,
                           wold_tolerance(reps));
  res.report.pass =
      mc_trace_pass(values, res.report.tolerance, ks_noise_band(reps));
  char buf[96];
  std::snprintf(buf, sizeof(buf), "; cov_err_max=%.6g",
                res.stats["cov_err_max"]);
  res.report.notes = format_series("max_ks", values) + buf;
  return res;
}

ScenarioResult scenario_clt_rk(const Ctx& c) {
  std::vector<std::vector<double>> sigma_rows;
  if (c.params.contains("sigma")) {
    if (!c.params.at("sigma").is_array()) {
      throw ParameterError("CLT_RK: 'sigma' must be a matrix");
    }
    for (const auto& row : c.params.at("sigma")) {
      sigma_rows.push_back(row.get<std::vector<double>>());
    }
  } else {
    sigma_rows = {{1.0, 0.5}, {0.5, 1.0}};
  }
  const auto k = static_cast<long>(sigma_rows.size());
  Eigen::MatrixXd sigma(k, k);
  for (long i = 0; i < k; ++i) {
    if (static_cast<long>(sigma_rows[static_cast<std::size_t>(i)].size()) !=
        k) {
      throw ParameterError("CLT_RK: 'sigma' must be square");
    }
    for (long j = 0; j < k; ++j) {
      sigma(i, j) = sigma_rows[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)];
    }
  }
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ParameterError("CLT_RK: 'sigma' must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw ParameterError("CLT_RK: 'sigma' must be positive semidefinite");
  }
  const Eigen::MatrixXd root = es.eigenvectors() *
                               es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                               es.eigenvectors().transpose();
  const GaussianLimit limit = GaussianLimit::centered(sigma);
  RngStream dir_rng = aux_stream(c, 1);
  auto dirs = wold_directions(static_cast<std::size_t>(k), 8, dir_rng);
  // Base vectors: symmetric-root transform of centered standard
  // exponentials, so the summands have covariance exactly sigma.
  auto draw = [root, k](std::size_t n, RngStream& rng) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (long j = 0; j < k; ++j) {
        acc(j) += rng.next_exponential() - 1.0;
      }
    }
    return Eigen::VectorXd(root * acc / std::sqrt(static_cast<double>(n)));
  };
  return gaussian_fidi_scenario(c, "CLT_RK", limit, std::move(dirs),
                                ladder_or(c, {100, 1000, 10000}), draw);
}

ScenarioResult scenario_multinom_clt(const Ctx& c) {
  const auto p = jget_vec(c.params, "p", {0.2, 0.3, 0.5});
  double total = 0.0;
  for (double pi : p) {
    if (!(pi > 0.0)) {
      throw ParameterError("MULTINOM_CLT: entries of 'p' must be > 0");
    }
    total += pi;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("MULTINOM_CLT: 'p' must sum to 1");
  }
  const auto k = static_cast<long>(p.size());
  Eigen::MatrixXd sigma(k, k);
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) {
      sigma(i, j) = (i == j)
                        ? 1.0 - p[static_cast<std::size_t>(i)]
                        : -std::sqrt(p[static_cast<std::size_t>(i)] *
                                     p[static_cast<std::size_t>(j)]);
    }
  }
  const GaussianLimit limit = GaussianLimit::centered(sigma);
  RngStream dir_rng = aux_stream(c, 1);
  auto dirs = wold_directions(static_cast<std::size_t>(k), 8, dir_rng);
  // The sqrt(p) direction is a null eigenvector of the limit covariance.
  Eigen::VectorXd sqrt_p(k);
  for (long i = 0; i < k; ++i) {
    sqrt_p(i) = std::sqrt(p[static_cast<std::size_t>(i)]);
  }
  dirs.push_back(sqrt_p);
  auto draw = [p, k](std::size_t n, RngStream& rng) {
    std::vector<double> cum(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      cum[i] = acc;
    }
    cum.back() = 1.0;
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
    for (std::size_t t = 0; t < n; ++t) {
      const double u = rng.next_uniform();
      const auto it = std::lower_bound(cum.begin(), cum.end(), u);
      counts(std::min<long>(static_cast<long>(it - cum.begin()), k - 1)) +=
          1.0;
    }
    const double dn = static_cast<double>(n);
    Eigen::VectorXd z(k);
    for (long i = 0; i < k; ++i) {
      const double npi = dn * p[static_cast<std::size_t>(i)];
      z(i) = (counts(i) - npi) / std::sqrt(npi);
    }
    return z;
  };
  return gaussian_fidi_scenario(c, "MULTINOM_CLT", limit, std::move(dirs),
                                ladder_or(c, {100, 500, 2000}), draw);
}

std::vector<double> checked_time_grid(const json& params, const char* id,
                                      bool allow_one) {
  std::vector<double> ts = jget_vec(params, "t", {0.25, 0.5, 0.75});
  const double upper = allow_one ? 1.0 + 1e-15 : 1.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const bool ordered = i == 0 || ts[i - 1] < ts[i];
    if (!(ts[i] > 0.0) || !(ts[i] < upper) || !ordered) {
      throw ParameterError(std::string(id) +
                           ": 't' must be strictly increasing inside (0,1)");
    }
  }
  return ts;
}

ScenarioResult scenario_ep_findim(const Ctx& c) {
  const auto ts = checked_time_grid(c.params, "EP_FINDIM", false);
  const auto k = static_cast<long>(ts.size());
  Eigen::MatrixXd sigma(k, k);
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) {
      const double ti = ts[static_cast<std::size_t>(i)];
      const double tj = ts[static_cast<std::size_t>(j)];
      sigma(i, j) = std::min(ti, tj) - ti * tj;
    }
  }
  const GaussianLimit limit = GaussianLimit::centered(sigma);
  RngStream dir_rng = aux_stream(c, 1);
  auto dirs = wold_directions(static_cast<std::size_t>(k), 8, dir_rng);
  auto draw = [ts, k](std::size_t n, RngStream& rng) {
    std::vector<double> u;
    rng.fill_uniform(u, n);
    std::sort(u.begin(), u.end());
    const double root_n = std::sqrt(static_cast<double>(n));
    Eigen::VectorXd alpha(k);
    for (long j = 0; j < k; ++j) {
      const double t = ts[static_cast<std::size_t>(j)];
      const auto count = std::upper_bound(u.begin(), u.end(), t) - u.begin();
      alpha(j) = root_n * (static_cast<double>(count) /
                               static_cast<double>(n) -
                           t);
    }
    return alpha;
  };
  return gaussian_fidi_scenario(c, "EP_FINDIM", limit, std::move(dirs),
                                ladder_or(c, {100, 500, 2000}), draw);
}

ScenarioResult scenario_invar_princ(const Ctx& c) {
  const auto ts = checked_time_grid(c.params, "INVAR_PRINC", true);
  const auto k = static_cast<long>(ts.size());
  Eigen::MatrixXd sigma(k, k);
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) {
      sigma(i, j) = std::min(ts[static_cast<std::size_t>(i)],
                             ts[static_cast<std::size_t>(j)]);
    }
  }
  const GaussianLimit limit = GaussianLimit::centered(sigma);
  RngStream dir_rng = aux_stream(c, 1);
  auto dirs = wold_directions(static_cast<std::size_t>(k), 8, dir_rng);
  // Centered standard exponentials; S_[nt]/sqrt(n) at the requested times.
  auto draw = [ts, k](std::size_t n, RngStream& rng) {
    std::vector<std::size_t> pos(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
      pos[j] = static_cast<std::size_t>(
          std::floor(static_cast<double>(n) * ts[j]));
    }
    Eigen::VectorXd v(k);
    const double root_n = std::sqrt(static_cast<double>(n));
    double s = 0.0;
    long next = 0;
    while (next < k && pos[static_cast<std::size_t>(next)] == 0) {
      v(next) = 0.0;  // [nt] = 0: the empty partial sum
      ++next;
    }
    for (std::size_t i = 1; i <= n && next < k; ++i) {
      s += rng.next_exponential() - 1.0;
      while (next < k && pos[static_cast<std::size_t>(next)] == i) {
        v(next) = s / root_n;
        ++next;
      }
    }
    return v;
  };
  return gaussian_fidi_scenario(c, "INVAR_PRINC", limit, std::move(dirs),
                                ladder_or(c, {100, 500, 2000}), draw);
}

ScenarioResult scenario_corr_coef(const Ctx& c) {
  const double rho = jget(c.params, "rho", 0.0);
  if (!(rho > -1.0 && rho < 1.0)) {
    throw ParameterError("CORR_COEF: 'rho' must be in (-1,1)");
  }
  const auto ladder = ladder_or(c, {20, 100, 500});
  const std::size_t reps = c.mc.replicates;
  const double target = corr_sigma2(gaussian_moment_record(rho));
  const double comp = std::sqrt(1.0 - rho * rho);
  ScenarioResult res;
  std::vector<double> values;
  std::vector<double> variances;
  for (const double dn : ladder) {
    const auto n = static_cast<std::size_t>(std::round(dn));
    auto draws = run_replicates<double>(
        c, ladder_tag(c, dn), reps, [n, rho, comp](RngStream& rng) {
          double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
          for (std::size_t i = 0; i < n; ++i) {
            const double z1 = standard_normal_quantile(rng.next_uniform());
            const double z2 = standard_normal_quantile(rng.next_uniform());
            const double x = z1;
            const double y = rho * z1 + comp * z2;
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
          }
          const double dn2 = static_cast<double>(n);
          const double mx = sx / dn2, my = sy / dn2;
          const double vx = sxx / dn2 - mx * mx;
          const double vy = syy / dn2 - my * my;
          const double r = (sxy / dn2 - mx * my) / std::sqrt(vx * vy);
          return std::sqrt(dn2) * (r - rho);
        });
    const double var = sample_variance(draws);
    variances.push_back(var);
    values.push_back(std::abs(var - target));
  }
  res.report =
      base_report(c, "CORR_COEF", "corr_var_gap", ladder, values, 0.06);
  const double band =
      std::max(0.01, target * std::sqrt(2.0 / static_cast<double>(reps)));
  res.report.pass = mc_trace_pass(values, res.report.tolerance, band);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "; sigma2_target=%.6g", target);
  res.report.notes = format_series("var", variances) + buf;
  res.stats["sigma2_target"] = target;
  res.stats["var_final"] = variances.back();
  return res;
}

// ---------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------

struct Entry {
  ScenarioResult (*fn)(const Ctx&);
  const char* summary;
  const char* reference;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = {
      {"BIN2POIS",
       {scenario_bin2pois,
        "Binomial(n, lambda/n) against Poisson(lambda), exact total "
        "variation and characteristic functions",
        "law of rare events"}},
      {"BIN_CLT",
       {scenario_bin_clt,
        "standardized Binomial against N(0,1), exact lattice Kolmogorov "
        "distance",
        "de Moivre-Laplace central limit theorem"}},
      {"CLT_RK",
       {scenario_clt_rk,
        "normalized iid vector sums against N(0, Sigma), Wold projections",
        "multivariate central limit theorem"}},
      {"CORR_COEF",
       {scenario_corr_coef,
        "replicate variance of sqrt(n)(rho_n - rho) against the influence "
        "variance",
        "asymptotic normality of the empirical correlation coefficient"}},
      {"EP_FINDIM",
       {scenario_ep_findim,
        "finite-dimensional laws of the uniform empirical process against "
        "N(0, min(s,t)-st)",
        "empirical-process finite-dimensional limit"}},
      {"EVT_FRECHET",
       {scenario_evt_frechet,
        "n^{-1/alpha} max of Pareto(alpha) samples against the Frechet law",
        "Frechet maxima limit"}},
      {"EVT_GUMBEL",
       {scenario_evt_gumbel,
        "max - log n of exponential samples against the Gumbel law",
        "Gumbel maxima limit"}},
      {"EVT_WEIBULL",
       {scenario_evt_weibull,
        "n(max - 1) of uniform samples against the Weibull law",
        "Weibull maxima limit"}},
      {"HYP2BIN",
       {scenario_hyp2bin,
        "Hypergeometric(N, N/2, n) against Binomial(n, 1/2), exact total "
        "variation",
        "sampling without replacement to with-replacement limit"}},
      {"INVAR_PRINC",
       {scenario_invar_princ,
        "partial sums S_[nt]/sqrt(n) against N(0, min(s,t))",
        "invariance principle, finite-dimensional step"}},
      {"MULTINOM_CLT",
       {scenario_multinom_clt,
        "standardized multinomial counts against the singular Gaussian "
        "limit",
        "multinomial central limit theorem"}},
      {"NEGBIN_CLT",
       {scenario_negbin_clt,
        "standardized Negative Binomial against N(0,1), exact lattice "
        "Kolmogorov distance",
        "waiting-time central limit theorem"}},
      {"POIS2GAUSS",
       {scenario_pois2gauss,
        "standardized Poisson against N(0,1), exact lattice Kolmogorov "
        "distance",
        "Poisson central limit behaviour for large mean"}},
  };
  return reg;
}

}  // namespace

ScenarioResult run_scenario_detailed(const std::string& id,
                                     const nlohmann::json& params,
                                     const McConfig& mc, std::uint64_t seed) {
  const auto it = registry().find(id);
  if (it == registry().end()) {
    throw UnknownLawError("run_scenario: unknown scenario '" + id + "'");
  }
  if (mc.replicates < 1000) {
    throw ParameterError("run_scenario: mc.replicates must be >= 1000");
  }
  Ctx ctx{params, mc, seed, fnv1a64(id.data(), id.size())};
  return it->second.fn(ctx);
}

ConvergenceReport run_scenario(const std::string& id,
                               const nlohmann::json& params,
                               const McConfig& mc, std::uint64_t seed) {
  return run_scenario_detailed(id, params, mc, seed).report;
}

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const auto& [id, entry] : registry()) {
    out.push_back({id, entry.summary, entry.reference});
  }
  return out;
}

}  // namespace convlab
