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

#include "convlab/metrics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "convlab/fep.hpp"
#include "convlab/numeric.hpp"

namespace convlab {

double ks_distance_empirical(std::vector<double> sample,
                             const std::function<double(double)>& cdf) {
  if (sample.empty()) throw DomainError("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double dn = static_cast<double>(sample.size());
  double best = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    best = std::max(best, std::abs(static_cast<double>(i + 1) / dn - f));
    best = std::max(best, std::abs(static_cast<double>(i) / dn - f));
  }
  return best;
}

double ks_distance_empirical(std::vector<double> sample,
                             const ScalarLaw& law) {
  if (law.kind != MassKind::Discrete) {
    return ks_distance_empirical(std::move(sample), law.cdf);
  }
  if (sample.empty()) throw DomainError("ks_distance: empty sample");
  // Both step functions change only at law atoms; compare both one-sided
  // values there.
  std::sort(sample.begin(), sample.end());
  const auto& t = *law.table;
  const double dn = static_cast<double>(sample.size());
  double best = 0.0;
  double cum_prev = 0.0;
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    const double x = t.xs[i];
    const auto below =
        std::lower_bound(sample.begin(), sample.end(), x) - sample.begin();
    const auto at_or_below =
        std::upper_bound(sample.begin(), sample.end(), x) - sample.begin();
    best = std::max(best, std::abs(static_cast<double>(below) / dn - cum_prev));
    best = std::max(
        best, std::abs(static_cast<double>(at_or_below) / dn - t.cum[i]));
    cum_prev = t.cum[i];
  }
  return best;
}

double ks_distance_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_distance: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double best = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / na -
                                   static_cast<double>(j) / nb));
  }
  return best;
}

double ks_distance_grid(const std::function<double(double)>& f1,
                        const std::function<double(double)>& f2,
                        const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("ks_distance_grid: empty grid");
  double best = 0.0;
  for (double x : grid) best = std::max(best, std::abs(f1(x) - f2(x)));
  return best;
}

double ks_lattice_vs_cdf(const ScalarLaw& law, double center, double scale,
                         const std::function<double(double)>& limit_cdf) {
  if (law.kind != MassKind::Discrete || !law.table) {
    throw DomainError("ks_lattice_vs_cdf: law must be discrete");
  }
  const auto& t = *law.table;
  double best = 0.0;
  double below = 0.0;
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    const double z = (t.xs[i] - center) / scale;
    const double g = limit_cdf(z);
    const double above = (i + 1 == t.xs.size()) ? 1.0 : t.cum[i];
    best = std::max(best, std::abs(above - g));
    best = std::max(best, std::abs(below - g));
    below = t.cum[i];
  }
  return best;
}

namespace {

// Union support with masses from both tables; throws on negative mass.
std::vector<std::tuple<double, double, double>> merge_tables(
    const MassTable& p, const MassTable& q) {
  std::map<double, std::pair<double, double>> merged;
  for (const auto& [x, m] : p) {
    if (m < 0.0) throw DomainError("tv_discrete: negative mass in p");
    merged[x].first += m;
  }
  for (const auto& [x, m] : q) {
    if (m < 0.0) throw DomainError("tv_discrete: negative mass in q");
    merged[x].second += m;
  }
  std::vector<std::tuple<double, double, double>> out;
  out.reserve(merged.size());
  for (const auto& [x, pq] : merged) {
    out.emplace_back(x, pq.first, pq.second);
  }
  return out;
}

}  // namespace

TvResult tv_discrete(const MassTable& p, const MassTable& q) {
  const auto atoms = merge_tables(p, q);
  TvResult res;
  double l1 = 0.0;
  for (const auto& [x, mp, mq] : atoms) l1 += std::abs(mp - mq);
  res.tv = 0.5 * l1;

  if (atoms.size() <= 20) {
    // Exhaustive sup over all subsets; must agree with the half-L1 value.
    // The identity is exact for equal total masses, so the comparison
    // allows for half of any imbalance carried by the inputs.
    const std::size_t s = atoms.size();
    double total_p = 0.0, total_q = 0.0;
    for (const auto& [x, mp, mq] : atoms) {
      total_p += mp;
      total_q += mq;
    }
    double sup = 0.0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      double diff = 0.0;
      for (std::size_t i = 0; i < s; ++i) {
        if (mask & (1u << i)) {
          diff += std::get<1>(atoms[i]) - std::get<2>(atoms[i]);
        }
      }
      if (std::abs(diff) > sup) {
        sup = std::abs(diff);
        best_mask = mask;
      }
    }
    if (std::abs(sup - res.tv) > 1e-12 + 0.5 * std::abs(total_p - total_q)) {
      throw std::logic_error("tv_discrete: subset sup != half-L1 distance");
    }
    std::vector<double> witness;
    for (std::size_t i = 0; i < s; ++i) {
      if (best_mask & (1u << i)) witness.push_back(std::get<0>(atoms[i]));
    }
    res.witness = std::move(witness);
  }
  return res;
}

double tv_continuous(const std::function<double(double)>& p1,
                     const std::function<double(double)>& p2,
                     const QuadratureScheme& scheme) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto integrand = [&](double x) { return std::abs(p1(x) - p2(x)); };
  double err = 0.0, l1 = 0.0;
  const double v = Quad::integrate(integrand, scheme.lo, scheme.hi,
                                   scheme.max_depth, scheme.tol, &err, &l1);
  if (!(err < 1e-6)) {
    throw QuadratureError("tv_continuous: quadrature error above 1e-6");
  }
  return 0.5 * v;
}

double cf_distance(const ScalarLaw& law_n, const ScalarLaw& law,
                   const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("cf_distance: empty grid");
  double best = 0.0;
  for (double u : grid) {
    best = std::max(best, std::abs(cf_eval(law_n, u) - cf_eval(law, u)));
  }
  return best;
}

std::vector<double> default_cf_grid(double radius, double step) {
  std::vector<double> grid;
  const auto half = static_cast<long>(std::floor(radius / step));
  grid.reserve(2 * static_cast<std::size_t>(half) + 1);
  for (long i = -half; i <= half; ++i) {
    grid.push_back(static_cast<double>(i) * step);
  }
  return grid;
}

std::vector<double> cdf_continuity_check(const ScalarLaw& law_n,
                                         const ScalarLaw& limit,
                                         const std::vector<double>& points) {
  for (double t : points) {
    if (mass_at(limit, t) > 1e-12) {
      throw AtomPointError(
          "cdf_continuity_check: t=" + std::to_string(t) +
          " is an atom of the limit law; convergence is not asserted there");
    }
  }
  std::vector<double> diffs;
  diffs.reserve(points.size());
  for (double t : points) {
    diffs.push_back(std::abs(law_n.cdf(t) - limit.cdf(t)));
  }
  return diffs;
}

double tightness_radius(const std::vector<ScalarLaw>& laws, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError("tightness_radius: eps must be in (0,1)");
  }
  if (laws.empty()) throw DomainError("tightness_radius: empty family");
  auto covered = [&](double M) {
    for (const auto& law : laws) {
      if (interval_mass(law, -M, M) < 1.0 - eps) return false;
    }
    return true;
  };
  double hi = 1.0;
  while (!covered(hi)) {
    hi *= 2.0;
    if (hi > 0x1.0p60) {
      throw BracketError("tightness_radius: no M below 2^60 works");
    }
  }
  double lo = hi / 2.0;
  while (lo > 1e-9 && covered(lo)) {
    hi = lo;
    lo /= 2.0;
  }
  // Geometric refinement of [lo, hi] to 1e-3 relative resolution.
  while (hi / lo > 1.0 + 1e-3) {
    const double mid = std::sqrt(lo * hi);
    if (covered(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

StochOrderResult stoch_order_check(
    const std::map<std::size_t, std::vector<double>>& samples_by_n,
    const std::function<double(std::size_t)>& rate, OrderMode mode,
    double tol) {
  if (samples_by_n.size() < 3) {
    throw DomainError("stoch_order_check: need at least 3 index values");
  }
  StochOrderResult res;
  for (const auto& [n, values] : samples_by_n) {
    if (values.size() < 1000) {
      throw DomainError("stoch_order_check: insufficient replicates at n=" +
                        std::to_string(n));
    }
    const double a_n = rate(n);
    std::vector<double> scaled(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      scaled[i] = std::abs(values[i]) / a_n;
    }
    res.index_values.push_back(n);
    res.q99.push_back(empirical_quantile(std::move(scaled), 0.99));
  }
  if (mode == OrderMode::SmallO) {
    // Quantiles below a negligibility floor count as zero, so traces that
    // are zero up to round-off (e.g. X_n identically 0) pass the
    // monotonicity rule.
    const double floor = tol * 1e-6;
    auto eff = [floor](double v) { return v < floor ? 0.0 : v; };
    bool non_increasing = true;
    for (std::size_t i = 1; i < res.q99.size(); ++i) {
      if (eff(res.q99[i]) > eff(res.q99[i - 1]) * (1.0 + 1e-9) + 1e-12) {
        non_increasing = false;
      }
    }
    res.pass = non_increasing && res.q99.back() < tol;
  } else {
    const double lo = *std::min_element(res.q99.begin(), res.q99.end());
    const double hi = *std::max_element(res.q99.begin(), res.q99.end());
    res.pass = hi < 1e-12 || (lo > 0.0 && hi / lo < 3.0);
  }
  return res;
}

std::vector<WoldDirectionResult> wold_test(
    const std::vector<Eigen::VectorXd>& replicates, const GaussianLimit& limit,
    const std::vector<Eigen::VectorXd>& directions) {
  if (directions.size() < 8) {
    throw DomainError("wold_test: need at least 8 directions");
  }
  if (replicates.empty()) throw DomainError("wold_test: no replicates");
  std::vector<WoldDirectionResult> out;
  out.reserve(directions.size());
  for (const auto& a : directions) {
    if (a.size() != static_cast<long>(limit.dim())) {
      throw DomainError("wold_test: direction dimension mismatch");
    }
    WoldDirectionResult r;
    r.direction = a;
    r.variance = a.dot(limit.cov * a);
    std::vector<double> projs(replicates.size());
    for (std::size_t i = 0; i < replicates.size(); ++i) {
      projs[i] = a.dot(replicates[i]);
    }
    if (r.variance <= 1e-12) {
      // Degenerate direction: the projection is compared to the constant 0.
      r.degenerate = true;
      for (auto& v : projs) v = std::abs(v);
      r.q99_abs = empirical_quantile(std::move(projs), 0.99);
    } else {
      const double s = std::sqrt(r.variance);
      r.ks = ks_distance_empirical(std::move(projs), [s](double x) {
        return standard_normal_cdf(x / s);
      });
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Eigen::VectorXd> wold_directions(std::size_t k, std::size_t total,
                                             RngStream& rng) {
  std::vector<Eigen::VectorXd> dirs;
  dirs.reserve(total);
  for (std::size_t i = 0; i < k; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<long>(k));
    e(static_cast<long>(i)) = 1.0;
    dirs.push_back(std::move(e));
  }
  while (dirs.size() < total) {
    Eigen::VectorXd v(static_cast<long>(k));
    for (long i = 0; i < static_cast<long>(k); ++i) {
      v(i) = standard_normal_quantile(rng.next_uniform());
    }
    const double norm = v.norm();
    if (norm > 1e-12) dirs.push_back(v / norm);
  }
  return dirs;
}

}  // namespace convlab
