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

#include "convlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convlab {

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

double standard_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

double standard_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("standard_normal_quantile: p must be in (0,1)");
  }
  // Acklam's rational approximation, three branches.
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
          c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Two Halley refinements against erfc.
  for (int it = 0; it < 2; ++it) {
    const double e = standard_normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double bisect_monotone(const std::function<double(double)>& eval, double lo,
                       double hi, double u, double rel_tol) {
  if (!(lo < hi)) throw std::invalid_argument("bisect_monotone: empty bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eval(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= rel_tol * std::max(1.0, std::abs(hi))) break;
  }
  return hi;
}

double geninv_bisect(const std::function<double(double)>& eval,
                     double lo_hint, double hi_hint, double u,
                     double rel_tol) {
  double lo = lo_hint;
  double hi = hi_hint;
  const double kLimit = 0x1.0p60;
  if (!std::isfinite(lo)) lo = std::isfinite(hi) ? hi - 1.0 : -1.0;
  if (!std::isfinite(hi)) hi = lo + 1.0;
  int it = 0;
  for (; it < 60 && eval(hi) < u; ++it) {
    hi += std::max(1.0, std::abs(hi));
  }
  if (eval(hi) < u) {
    throw BracketError("geninv_bisect: no x <= 2^60 with eval(x) >= u");
  }
  for (it = 0; it < 60 && eval(lo) >= u; ++it) {
    lo -= std::max(1.0, std::abs(lo));
  }
  if (eval(lo) >= u) {
    throw BracketError("geninv_bisect: eval(-2^60) still >= u");
  }
  if (std::abs(lo) > kLimit || std::abs(hi) > kLimit) {
    throw BracketError("geninv_bisect: bracket exhausted");
  }
  return bisect_monotone(eval, lo, hi, u, rel_tol);
}

namespace {

// Golden-section search for the maximum of a unimodal slice.
double golden_max(const std::function<double(double)>& h, double lo,
                  double hi) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = h(x1), f2 = h(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-14 * std::max(1.0, std::abs(b));
       ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = h(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double sup_abs_diff(const std::function<double(double)>& f,
                    const std::function<double(double)>& g, double lo,
                    double hi, std::size_t coarse_points) {
  if (coarse_points < 3) coarse_points = 3;
  const double step = (hi - lo) / static_cast<double>(coarse_points - 1);
  auto h = [&](double x) { return std::abs(f(x) - g(x)); };
  std::vector<double> vals(coarse_points);
  for (std::size_t i = 0; i < coarse_points; ++i) {
    vals[i] = h(lo + step * static_cast<double>(i));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < coarse_points; ++i) {
    best = std::max(best, vals[i]);
    const bool local_max =
        (i == 0 || vals[i] >= vals[i - 1]) &&
        (i + 1 == coarse_points || vals[i] >= vals[i + 1]);
    if (local_max) {
      const double a =
          (i == 0) ? lo : lo + step * static_cast<double>(i - 1);
      const double b = (i + 1 == coarse_points)
                           ? hi
                           : lo + step * static_cast<double>(i + 1);
      best = std::max(best, golden_max(h, a, b));
    }
  }
  return best;
}

double empirical_quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw std::invalid_argument("empirical_quantile: empty sample");
  }
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  auto k = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(n)));
  k = std::clamp<std::size_t>(k, 1, n);
  return values[k - 1];
}

double sample_mean(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double sample_variance(const std::vector<double>& values) {
  const double m = sample_mean(values);
  double s = 0.0;
  for (double v : values) s += (v - m) * (v - m);
  return s / static_cast<double>(values.size());
}

}  // namespace convlab
