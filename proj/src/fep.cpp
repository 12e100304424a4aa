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

#include "convlab/fep.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

namespace convlab {

Sample Sample::from_scalars(std::vector<double> values) {
  Sample s;
  s.n = values.size();
  s.dim = 1;
  s.data = std::move(values);
  return s;
}

Sample Sample::from_pairs(const std::vector<double>& xs,
                          const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw DomainError("Sample::from_pairs: length mismatch");
  }
  Sample s;
  s.n = xs.size();
  s.dim = 2;
  s.data.resize(2 * s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.data[2 * i] = xs[i];
    s.data[2 * i + 1] = ys[i];
  }
  return s;
}

FnHandle coordinate_fn(std::size_t index, std::string label) {
  FnHandle f;
  f.label = label.empty() ? "pi_" + std::to_string(index + 1) : label;
  f.eval = [index](std::span<const double> p) { return p[index]; };
  return f;
}

FnHandle constant_fn(double c) {
  FnHandle f;
  f.label = "const(" + std::to_string(c) + ")";
  f.eval = [c](std::span<const double>) { return c; };
  f.mean_hint = c;
  f.second_moment_hint = c * c;
  return f;
}

FnHandle indicator_leq(double threshold) {
  FnHandle f;
  f.label = "1{x<=" + std::to_string(threshold) + "}";
  f.eval = [threshold](std::span<const double> p) {
    return p[0] <= threshold ? 1.0 : 0.0;
  };
  return f;
}

FnHandle linear_combination(double a, const FnHandle& f, double b,
                            const FnHandle& g) {
  FnHandle h;
  h.label = "(" + std::to_string(a) + "*" + f.label + " + " +
            std::to_string(b) + "*" + g.label + ")";
  h.eval = [a, fe = f.eval, b, ge = g.eval](std::span<const double> p) {
    return a * fe(p) + b * ge(p);
  };
  if (f.mean_hint && g.mean_hint) {
    h.mean_hint = a * *f.mean_hint + b * *g.mean_hint;
  }
  return h;
}

FnHandle scaled_fn(double a, const FnHandle& f) {
  FnHandle h;
  h.label = std::to_string(a) + "*" + f.label;
  h.eval = [a, fe = f.eval](std::span<const double> p) { return a * fe(p); };
  if (f.mean_hint) h.mean_hint = a * *f.mean_hint;
  if (f.second_moment_hint) h.second_moment_hint = a * a * *f.second_moment_hint;
  return h;
}

double gn_eval(const Sample& sample, const FnHandle& f, MeanMode mode) {
  if (sample.n == 0) throw DomainError("gn_eval: empty sample");
  const double root_n = std::sqrt(static_cast<double>(sample.n));
  if (mode == MeanMode::Analytic) {
    if (!f.mean_hint) {
      throw DomainError("gn_eval: analytic mode needs a mean hint for '" +
                        f.label + "'");
    }
    const double m = *f.mean_hint;
    double acc = 0.0;
    for (std::size_t i = 0; i < sample.n; ++i) {
      acc += f.eval(sample.point(i)) - m;
    }
    return acc / root_n;
  }
  std::vector<double> vals(sample.n);
  double tot = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < sample.n; ++i) {
    vals[i] = f.eval(sample.point(i));
    tot += vals[i];
    lo = std::min(lo, vals[i]);
    hi = std::max(hi, vals[i]);
  }
  if (lo == hi) return 0.0;  // G_n of a constant vanishes identically
  const double m = tot / static_cast<double>(sample.n);
  double acc = 0.0;
  for (double v : vals) acc += v - m;
  return acc / root_n;
}

namespace {

double integrate_against_law(const ScalarLaw& law,
                             const std::function<double(double)>& weight) {
  if (law.kind == MassKind::Discrete) {
    const auto& t = *law.table;
    double acc = 0.0;
    for (std::size_t i = 0; i < t.xs.size(); ++i) {
      acc += t.ps[i] * weight(t.xs[i]);
    }
    return acc;
  }
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto integrand = [&](double x) { return weight(x) * law.mass_or_density(x); };
  double err = 0.0, l1 = 0.0;
  const double v = Quad::integrate(integrand, law.support.lo, law.support.hi,
                                   30, 1e-10, &err, &l1);
  if (!(err <= 1e-6 * std::max(1.0, l1))) {
    throw QuadratureError("gamma_cov: quadrature failed for law '" +
                          law.name + "'");
  }
  return v;
}

double law_mean(const FnHandle& f, const ScalarLaw& law) {
  if (f.mean_hint) return *f.mean_hint;
  return integrate_against_law(
      law, [&f](double x) { return f.eval(std::span<const double>(&x, 1)); });
}

}  // namespace

double gamma_cov(const FnHandle& f, const FnHandle& g, const ScalarLaw& law) {
  const double mf = law_mean(f, law);
  const double mg = law_mean(g, law);
  return integrate_against_law(law, [&](double x) {
    const std::span<const double> p(&x, 1);
    return (f.eval(p) - mf) * (g.eval(p) - mg);
  });
}

double gamma_cov(const FnHandle& f, const FnHandle& g, const Sample& sample) {
  if (sample.n == 0) throw DomainError("gamma_cov: empty sample");
  const double dn = static_cast<double>(sample.n);
  double sf = 0.0, sg = 0.0;
  std::vector<double> fv(sample.n), gv(sample.n);
  for (std::size_t i = 0; i < sample.n; ++i) {
    fv[i] = f.eval(sample.point(i));
    gv[i] = g.eval(sample.point(i));
    sf += fv[i];
    sg += gv[i];
  }
  const double mf = sf / dn;
  const double mg = sg / dn;
  double acc = 0.0;
  for (std::size_t i = 0; i < sample.n; ++i) {
    acc += (fv[i] - mf) * (gv[i] - mg);
  }
  return acc / dn;
}

GaussianLimit fd_limit(const std::vector<FnHandle>& fs, const ScalarLaw& law) {
  const auto k = static_cast<long>(fs.size());
  Eigen::MatrixXd cov(k, k);
  for (long i = 0; i < k; ++i) {
    for (long j = i; j < k; ++j) {
      const double c = gamma_cov(fs[static_cast<std::size_t>(i)],
                                 fs[static_cast<std::size_t>(j)], law);
      cov(i, j) = c;
      cov(j, i) = c;
    }
  }
  return GaussianLimit::centered(std::move(cov), CovProvenance::Formula);
}

InfluenceExpansion constant_expansion(double c) {
  return {c, constant_fn(0.0)};
}

InfluenceExpansion exp_add(const InfluenceExpansion& a,
                           const InfluenceExpansion& b) {
  return {a.center + b.center,
          linear_combination(1.0, a.influence, 1.0, b.influence)};
}

InfluenceExpansion exp_mul(const InfluenceExpansion& a,
                           const InfluenceExpansion& b) {
  return {a.center * b.center,
          linear_combination(b.center, a.influence, a.center, b.influence)};
}

InfluenceExpansion exp_div(const InfluenceExpansion& a,
                           const InfluenceExpansion& b) {
  if (b.center == 0.0) {
    throw DomainError("exp_div: denominator expansion has zero center");
  }
  return {a.center / b.center,
          linear_combination(1.0 / b.center, a.influence,
                             -a.center / (b.center * b.center), b.influence)};
}

InfluenceExpansion exp_scale(double c, const InfluenceExpansion& a) {
  return exp_mul(constant_expansion(c), a);
}

InfluenceExpansion exp_map(const std::function<double(double)>& g,
                           const std::function<double(double)>& g_prime,
                           const InfluenceExpansion& a) {
  if (!g || !g_prime) {
    throw DomainError("exp_map: derivative unavailable");
  }
  return {g(a.center), scaled_fn(g_prime(a.center), a.influence)};
}

double corr_sigma2(const CentralMomentRecord& m) {
  if (!(m.sigma2_x > 0.0) || !(m.sigma2_y > 0.0)) {
    throw DomainError("corr_sigma2: degenerate variance");
  }
  const double sx2 = m.sigma2_x, sy2 = m.sigma2_y;
  const double sx = std::sqrt(sx2), sy = std::sqrt(sy2);
  const double rho = m.rho;
  const double term1 = (1.0 + 0.5 * rho * rho) * m.mu22 / (sx2 * sy2);
  const double term2 =
      rho * rho * (m.mu4x / (sx2 * sx2) + m.mu4y / (sy2 * sy2)) / 4.0;
  const double term3 =
      rho * (m.mu31 / (sx2 * sx * sy) + m.mu13 / (sx * sy2 * sy));
  return term1 + term2 - term3;
}

CentralMomentRecord gaussian_moment_record(double rho) {
  CentralMomentRecord m;
  m.rho = rho;
  m.mu22 = 1.0 + 2.0 * rho * rho;
  m.mu4x = 3.0;
  m.mu4y = 3.0;
  m.mu31 = 3.0 * rho;
  m.mu13 = 3.0 * rho;
  return m;
}

namespace {

struct PairMoments {
  std::size_t n = 0;
  double mean_x = 0, mean_y = 0, var_x = 0, var_y = 0, cov_xy = 0;
};

PairMoments pair_moments(const Sample& pairs) {
  if (pairs.dim != 2) throw DomainError("expected a 2-d sample");
  const auto n = pairs.n;
  if (n < 3) throw DomainError("need at least 3 pairs");
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = pairs.data[2 * i];
    const double y = pairs.data[2 * i + 1];
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  PairMoments m;
  m.n = n;
  m.mean_x = sx / dn;
  m.mean_y = sy / dn;
  m.var_x = sxx / dn - m.mean_x * m.mean_x;
  m.var_y = syy / dn - m.mean_y * m.mean_y;
  m.cov_xy = sxy / dn - m.mean_x * m.mean_y;
  if (!(m.var_x > 0.0) || !(m.var_y > 0.0)) {
    throw DomainError("degenerate sample: a coordinate has zero variance");
  }
  return m;
}

}  // namespace

double pearson_rho(const Sample& pairs) {
  const PairMoments m = pair_moments(pairs);
  const double rho = m.cov_xy / std::sqrt(m.var_x * m.var_y);
  return std::clamp(rho, -1.0, 1.0);
}

CorrPipelineResult corr_pipeline(const Sample& pairs) {
  const PairMoments m = pair_moments(pairs);
  const double s_x = std::sqrt(m.var_x);
  const double s_y = std::sqrt(m.var_y);
  const double rho = std::clamp(m.cov_xy / (s_x * s_y), -1.0, 1.0);

  // Standardized coordinates with constants frozen at the full-sample
  // estimates.
  FnHandle zx;
  zx.label = "x_std";
  zx.eval = [mx = m.mean_x, s_x](std::span<const double> p) {
    return (p[0] - mx) / s_x;
  };
  zx.mean_hint = 0.0;
  zx.second_moment_hint = 1.0;
  FnHandle zy;
  zy.label = "y_std";
  zy.eval = [my = m.mean_y, s_y](std::span<const double> p) {
    return (p[1] - my) / s_y;
  };
  zy.mean_hint = 0.0;
  zy.second_moment_hint = 1.0;
  FnHandle prod;
  prod.label = "xy_std";
  prod.eval = [fx = zx.eval, fy = zy.eval](std::span<const double> p) {
    return fx(p) * fy(p);
  };
  prod.mean_hint = rho;
  FnHandle zx2;
  zx2.label = "x_std^2";
  zx2.eval = [fx = zx.eval](std::span<const double> p) {
    const double v = fx(p);
    return v * v;
  };
  zx2.mean_hint = 1.0;
  FnHandle zy2;
  zy2.label = "y_std^2";
  zy2.eval = [fy = zy.eval](std::span<const double> p) {
    const double v = fy(p);
    return v * v;
  };
  zy2.mean_hint = 1.0;

  // Numerator: mean product minus product of means.
  const InfluenceExpansion mean_prod{rho, prod};
  const InfluenceExpansion mean_x{0.0, zx};
  const InfluenceExpansion mean_y{0.0, zy};
  const InfluenceExpansion numer =
      exp_add(mean_prod, exp_scale(-1.0, exp_mul(mean_x, mean_y)));

  // Denominator: sqrt of each centered second moment, then the product.
  auto sqrt_fn = [](double v) { return std::sqrt(v); };
  auto sqrt_prime = [](double v) { return 0.5 / std::sqrt(v); };
  const InfluenceExpansion var_x_exp =
      exp_add({1.0, zx2}, exp_scale(-1.0, exp_mul(mean_x, mean_x)));
  const InfluenceExpansion var_y_exp =
      exp_add({1.0, zy2}, exp_scale(-1.0, exp_mul(mean_y, mean_y)));
  const InfluenceExpansion sd_x = exp_map(sqrt_fn, sqrt_prime, var_x_exp);
  const InfluenceExpansion sd_y = exp_map(sqrt_fn, sqrt_prime, var_y_exp);
  const InfluenceExpansion denom = exp_mul(sd_x, sd_y);

  InfluenceExpansion rho_exp = exp_div(numer, denom);
  rho_exp.influence.label = "xy - (rho/2)(x^2+y^2) [std]";
  rho_exp.influence.mean_hint = 0.0;

  CorrPipelineResult out;
  out.rho_hat = rho;
  out.sigma2_hat = gamma_cov(rho_exp.influence, rho_exp.influence, pairs);
  out.expansion = std::move(rho_exp);
  return out;
}

}  // namespace convlab
