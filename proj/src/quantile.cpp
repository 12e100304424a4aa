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

#include "convlab/quantile.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "convlab/numeric.hpp"

namespace convlab {

MonotoneMap monotone_from_cdf(const ScalarLaw& law) {
  MonotoneMap m;
  m.eval = law.cdf;
  const double lo = law.support.lo;
  const double hi = law.support.hi;
  m.bracket_lo = std::isfinite(lo) ? lo : -1.0;
  m.bracket_hi = std::isfinite(hi) ? hi : std::max(1.0, m.bracket_lo + 1.0);
  m.range_lo = 0.0;
  m.range_hi = 1.0;
  return m;
}

namespace {

void check_u_range(const MonotoneMap& map, double u) {
  if (!(u > map.range_lo) || !(u <= map.range_hi)) {
    throw DomainError("gen_inv: u outside (" + std::to_string(map.range_lo) +
                      ", " + std::to_string(map.range_hi) + "]");
  }
}

}  // namespace

double gen_inv(const MonotoneMap& map, double u) {
  check_u_range(map, u);
  return geninv_bisect(map.eval, map.bracket_lo, map.bracket_hi, u, 1e-12);
}

double gen_inv_nonincreasing(const MonotoneMap& map, double y) {
  if (!(y >= map.range_lo) || !(y < map.range_hi)) {
    throw DomainError("gen_inv_nonincreasing: y outside [range_lo, range_hi)");
  }
  MonotoneMap flipped;
  flipped.eval = [eval = map.eval](double x) { return -eval(x); };
  flipped.bracket_lo = map.bracket_lo;
  flipped.bracket_hi = map.bracket_hi;
  flipped.range_lo = -map.range_hi;
  flipped.range_hi = -map.range_lo;
  return geninv_bisect(flipped.eval, flipped.bracket_lo, flipped.bracket_hi,
                       -y, 1e-12);
}

GeneralizedInverse GeneralizedInverse::bisection(MonotoneMap map, double tol) {
  GeneralizedInverse g;
  g.map_ = std::move(map);
  g.tol_ = tol;
  return g;
}

GeneralizedInverse GeneralizedInverse::with_override(
    MonotoneMap map, std::function<double(double)> exact) {
  GeneralizedInverse g;
  g.map_ = std::move(map);
  g.exact_ = std::move(exact);
  return g;
}

double GeneralizedInverse::operator()(double u) const {
  check_u_range(map_, u);
  if (exact_) return exact_(u);
  return geninv_bisect(map_.eval, map_.bracket_lo, map_.bracket_hi, u, tol_);
}

GeneralizedInverse quantile_of(const ScalarLaw& law) {
  MonotoneMap m = monotone_from_cdf(law);
  if (law.exact_quantile) {
    return GeneralizedInverse::with_override(std::move(m), law.exact_quantile);
  }
  return GeneralizedInverse::bisection(std::move(m));
}

std::pair<bool, bool> galois_check(const GeneralizedInverse& inv, double u,
                                   double t) {
  const bool lhs = inv(u) <= t;
  const bool rhs = u <= inv.source().eval(t);
  return {lhs, rhs};
}

std::pair<bool, bool> galois_check(const MonotoneMap& map, double u,
                                   double t) {
  const bool lhs = gen_inv(map, u) <= t;
  const bool rhs = u <= map.eval(t);
  return {lhs, rhs};
}

std::vector<double> inv_cdf_sample(const ScalarLaw& law, RngStream& rng,
                                   std::size_t n) {
  const GeneralizedInverse q = quantile_of(law);
  std::vector<double> out(n);
  for (auto& v : out) v = q(rng.next_uniform());
  return out;
}

void CoupledTable::write_csv(std::ostream& os) const {
  for (std::size_t j = 0; j < names.size(); ++j) {
    os << (j ? "," : "") << names[j];
  }
  os << '\n';
  char buf[40];
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
      os << (j ? "," : "") << buf;
    }
    os << '\n';
  }
}

CoupledTable skorohod_couple(const std::vector<ScalarLaw>& laws,
                             const ScalarLaw& limit, RngStream& rng,
                             std::size_t n) {
  CoupledTable table;
  std::vector<GeneralizedInverse> qs;
  qs.reserve(laws.size() + 1);
  for (std::size_t i = 0; i < laws.size(); ++i) {
    qs.push_back(quantile_of(laws[i]));
    table.names.push_back(laws[i].name + "_" + std::to_string(i + 1));
  }
  qs.push_back(quantile_of(limit));
  table.names.push_back("limit_" + limit.name);

  table.rows.assign(n, std::vector<double>(qs.size()));
  for (std::size_t r = 0; r < n; ++r) {
    const double u = rng.next_uniform();
    for (std::size_t j = 0; j < qs.size(); ++j) {
      table.rows[r][j] = qs[j](u);
    }
  }
  return table;
}

}  // namespace convlab
