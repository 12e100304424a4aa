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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>

#include "convlab/evt.hpp"
#include "convlab/metrics.hpp"
#include "convlab/numeric.hpp"
#include "convlab/report.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace convlab;

TEST_CASE("ks_distance basics") {
  const auto unif_cdf = [](double x) {
    return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
  };
  std::vector<double> grid;
  for (double x = -1.0; x <= 2.0; x += 0.01) grid.push_back(x);
  CHECK(ks_distance_grid(unif_cdf, unif_cdf, grid) == 0.0);
  CHECK_THROWS_AS(ks_distance_grid(unif_cdf, unif_cdf, {}), DomainError);

  // Point mass at 0.5 against Uniform(0,1): the sup is 0.5 at the jump.
  CHECK(ks_distance_empirical({0.5}, unif_cdf) == doctest::Approx(0.5));

  CHECK(ks_distance_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == 0.0);
  CHECK(ks_distance_two_sample({1.0, 2.0}, {5.0, 6.0}) == doctest::Approx(1.0));
}

TEST_CASE("lattice ks against the summation oracle") {
  const auto bin = make_law("Binomial", {{"n", 1000}, {"p", 0.003}});
  const auto pois = make_law("Poisson", {{"lambda", 3.0}});
  // Exact cdf summation oracle on the shared lattice.
  double cb = 0.0, cp = 0.0, oracle = 0.0;
  for (long k = 0; k <= 1000; ++k) {
    cb += bin.mass_or_density(static_cast<double>(k));
    cp += pois.mass_or_density(static_cast<double>(k));
    oracle = std::max(oracle, std::abs(cb - cp));
  }
  CHECK(oracle < 0.002);

  std::vector<double> grid;
  for (long k = 0; k <= 60; ++k) grid.push_back(static_cast<double>(k));
  const double lib = ks_distance_grid(bin.cdf, pois.cdf, grid);
  CHECK(lib == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("tv_discrete") {
  const MassTable p = {{0.0, 0.5}, {1.0, 0.5}};
  const auto same = tv_discrete(p, p);
  CHECK(same.tv == 0.0);
  REQUIRE(same.witness.has_value());
  CHECK(same.witness->empty());

  const MassTable q = {{0.0, 0.8}, {1.0, 0.2}};
  const auto res = tv_discrete(p, q);
  CHECK(res.tv == doctest::Approx(0.3));
  REQUIRE(res.witness.has_value());
  REQUIRE(res.witness->size() == 1);
  // The maximizing set is the atom where q exceeds p (or its complement).
  CHECK((*res.witness)[0] == 0.0);

  CHECK_THROWS_AS(tv_discrete({{0.0, -0.1}}, {{0.0, 1.0}}), DomainError);
}

TEST_CASE("tv_discrete matches the exhaustive sup for catalog laws") {
  const auto hyper =
      make_law("Hypergeometric", {{"N", 100}, {"M", 50}, {"n", 5}});
  const auto bin = make_law("Binomial", {{"n", 5}, {"p", 0.5}});
  const auto res = tv_discrete(mass_table(hyper), mass_table(bin));
  CHECK(res.witness.has_value());  // 6 atoms: exhaustive branch ran
  CHECK(res.tv > 0.0);
  CHECK(res.tv < 0.05);
}

TEST_CASE("scheffe identity on random mass tables") {
  RngStream rng(512);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s =
        3 + static_cast<std::size_t>(rng.next_uniform() * 10.0);  // <= 12
    MassTable p(s), q(s);
    double tp = 0.0, tq = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      p[i] = {static_cast<double>(i), rng.next_uniform()};
      q[i] = {static_cast<double>(i), rng.next_uniform()};
      tp += p[i].second;
      tq += q[i].second;
    }
    for (std::size_t i = 0; i < s; ++i) {
      p[i].second /= tp;
      q[i].second /= tq;
    }
    // The call itself cross-checks sup_B |P(B)-Q(B)| == tv within 1e-12.
    TvResult res;
    CHECK_NOTHROW(res = tv_discrete(p, q));
    CHECK(res.tv >= 0.0);
    CHECK(res.tv <= 1.0);
    CHECK(res.witness.has_value());
  }
}

TEST_CASE("tv_continuous closed forms") {
  const auto phi = [](double x) { return standard_normal_pdf(x); };
  QuadratureScheme scheme;
  scheme.lo = -12.0;
  scheme.hi = 12.0;
  CHECK(tv_continuous(phi, phi, scheme) == doctest::Approx(0.0));

  // N(0,1) vs N(0.1,1): tv = 2 Phi(0.05) - 1.
  const auto shifted = [](double x) { return standard_normal_pdf(x - 0.1); };
  const double target =
      2.0 * static_cast<double>(test::oracle_normal_cdf(0.05L)) - 1.0;
  CHECK(tv_continuous(phi, shifted, scheme) ==
        doctest::Approx(target).epsilon(1e-7));
  CHECK(target == doctest::Approx(0.03988).epsilon(1e-3));

  // Exp(1) vs Exp(2): single crossing at ln 2, analytic value 1/4.
  const auto e1 = [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); };
  const auto e2 = [](double x) {
    return x < 0.0 ? 0.0 : 2.0 * std::exp(-2.0 * x);
  };
  QuadratureScheme half_line;
  half_line.lo = 0.0;
  half_line.hi = 60.0;
  CHECK(tv_continuous(e1, e2, half_line) == doctest::Approx(0.25).epsilon(1e-7));

  // Starved quadrature must report failure instead of a bad value.
  QuadratureScheme starved;
  starved.lo = -12.0;
  starved.hi = 12.0;
  starved.max_depth = 0;
  starved.tol = 1e-14;
  const auto far = [](double x) { return standard_normal_pdf(x - 3.0); };
  CHECK_THROWS_AS(tv_continuous(phi, far, starved), QuadratureError);
}

TEST_CASE("cf_distance") {
  const auto pois = make_law("Poisson", {{"lambda", 3.0}});
  CHECK(cf_distance(pois, pois, default_cf_grid()) == 0.0);

  const auto bin = make_law("Binomial", {{"n", 10000}, {"p", 3e-4}});
  CHECK(cf_distance(bin, pois, default_cf_grid()) < 5e-4);

  CHECK(cf_distance(bin, pois, {0.0}) == 0.0);
  CHECK_THROWS_AS(cf_distance(bin, pois, {}), DomainError);
}

TEST_CASE("cdf_continuity_check") {
  const auto unif = make_law("Uniform", {});
  const auto bern = make_law("Bernoulli", {{"p", 0.5}});
  const auto gumbel10 = gumbel_finite_law(10);

  CHECK_NOTHROW(cdf_continuity_check(bern, unif, {0.5}));
  CHECK_THROWS_AS(cdf_continuity_check(unif, bern, {0.0}), AtomPointError);
  CHECK_THROWS_AS(cdf_continuity_check(unif, bern, {1.0}), AtomPointError);
  // Every off-atom point of a lattice limit is accepted.
  const auto pois = make_law("Poisson", {{"lambda", 3.0}});
  CHECK_NOTHROW(cdf_continuity_check(unif, pois, {0.5, 1.5, -0.3}));
  CHECK_THROWS_AS(cdf_continuity_check(unif, pois, {2.0}), AtomPointError);

  // Gumbel scenario at x = 0, n = 10: |0.9^10 - e^{-1}|.
  const auto diffs = cdf_continuity_check(gumbel10, gumbel_limit_law(), {0.0});
  const double expected =
      std::abs(std::pow(0.9, 10.0) - std::exp(-1.0));
  CHECK(diffs[0] == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.0192).epsilon(1e-2));
}

TEST_CASE("tightness_radius") {
  const auto unif = make_law("Uniform", {});
  const double m_unif = tightness_radius({unif}, 0.1);
  CHECK(m_unif <= 1.0 + 1e-3);
  CHECK(interval_mass(unif, -m_unif, m_unif) >= 0.9);
  CHECK(m_unif == doctest::Approx(0.9).epsilon(2e-3));

  const auto gauss = make_law("Gaussian", {{"mu", 0.0}, {"sigma2", 1.0}});
  const double m_gauss = tightness_radius({gauss}, 0.05);
  CHECK(m_gauss == doctest::Approx(1.959964).epsilon(2e-3));

  std::vector<ScalarLaw> family;
  for (int n = 1; n <= 10; ++n) {
    family.push_back(make_law(
        "Gaussian", {{"mu", 0.0}, {"sigma2", 1.0 + 1.0 / n}}));
  }
  const double m_family = tightness_radius(family, 0.05);
  CHECK(m_family ==
        doctest::Approx(1.959964 * std::sqrt(2.0)).epsilon(2e-3));

  CHECK_THROWS_AS(tightness_radius({unif}, 0.0), DomainError);
  CHECK_THROWS_AS(tightness_radius({unif}, 1.0), DomainError);
}

TEST_CASE("stoch_order_check rules") {
  std::map<std::size_t, std::vector<double>> zeros;
  for (std::size_t n : {10, 100, 1000}) {
    zeros[n] = std::vector<double>(1000, 0.0);
  }
  const auto rate = [](std::size_t n) {
    return 1.0 / std::sqrt(static_cast<double>(n));
  };
  CHECK(stoch_order_check(zeros, rate, OrderMode::SmallO, 0.1).pass);
  CHECK(stoch_order_check(zeros, rate, OrderMode::BigO, 0.1).pass);

  std::map<std::size_t, std::vector<double>> two_only = {
      {10, std::vector<double>(1000, 0.0)},
      {100, std::vector<double>(1000, 0.0)}};
  CHECK_THROWS_AS(stoch_order_check(two_only, rate, OrderMode::SmallO, 0.1),
                  DomainError);
  std::map<std::size_t, std::vector<double>> thin = {
      {10, std::vector<double>(10, 0.0)},
      {100, std::vector<double>(1000, 0.0)},
      {1000, std::vector<double>(1000, 0.0)}};
  CHECK_THROWS_AS(stoch_order_check(thin, rate, OrderMode::SmallO, 0.1),
                  DomainError);
}

TEST_CASE("wold_test on a genuinely gaussian vector") {
  Eigen::MatrixXd sigma(3, 3);
  sigma << 1.0, 0.4, 0.1, 0.4, 2.0, -0.3, 0.1, -0.3, 0.5;
  const auto law = gaussian_vector_law(Eigen::Vector3d::Zero(), sigma);
  RngStream rng(2025);
  const std::size_t reps = 10000;
  const auto samples = sample_iid(law, rng, reps);
  RngStream dir_rng(7);
  const auto dirs = wold_directions(3, 9, dir_rng);
  REQUIRE(dirs.size() == 9);
  const auto limit = GaussianLimit::centered(sigma);
  const auto results = wold_test(samples, limit, dirs);
  const double gate = 1.63 / std::sqrt(static_cast<double>(reps)) * 1.5;
  for (const auto& r : results) {
    CHECK_FALSE(r.degenerate);
    CHECK(r.ks < gate);
  }
  CHECK_THROWS_AS(wold_test(samples, limit, {dirs[0]}), DomainError);
}

TEST_CASE("wold_test flags degenerate directions") {
  Eigen::MatrixXd singular(2, 2);
  singular << 1.0, -1.0, -1.0, 1.0;  // null space spanned by (1,1)
  const auto law = gaussian_vector_law(Eigen::Vector2d::Zero(), singular);
  RngStream rng(77);
  const auto samples = sample_iid(law, rng, 5000);
  RngStream dir_rng(8);
  auto dirs = wold_directions(2, 8, dir_rng);
  dirs.push_back(Eigen::Vector2d(M_SQRT1_2, M_SQRT1_2));
  const auto limit = GaussianLimit::centered(singular);
  const auto results = wold_test(samples, limit, dirs);
  CHECK(results.back().degenerate);
  CHECK(results.back().q99_abs < 1e-10);
}

TEST_CASE("report serialization and verdict rules") {
  ConvergenceReport rep;
  rep.scenario = "DEMO";
  rep.index_values = {10, 100};
  rep.metric = "gap";
  rep.values = {0.25, 0.01};
  rep.mc = {42, 2000, {10, 100}};
  rep.tolerance = 0.05;
  rep.pass = true;
  rep.notes = "n/a";
  const auto j1 = report_to_json(rep);
  const auto j2 = report_to_json(rep);
  CHECK(j1 == j2);
  CHECK(j1.find("\"scenario\": \"DEMO\"") != std::string::npos);
  CHECK(j1.find("\"verdict\": \"pass\"") != std::string::npos);

  std::ostringstream os;
  report_write_csv(rep, os);
  CHECK(os.str() ==
        "scenario,index,value\nDEMO,10,0.25\nDEMO,100,0.01\n");

  CHECK(exact_trace_pass({0.3, 0.2, 0.1}, 0.15));
  CHECK_FALSE(exact_trace_pass({0.3, 0.3, 0.1}, 0.15));   // not strict
  CHECK_FALSE(exact_trace_pass({0.3, 0.2, 0.16}, 0.15));  // above tol
  CHECK(mc_trace_pass({0.3, 0.31, 0.1}, 0.15, 0.02));     // one inversion in band
  CHECK_FALSE(mc_trace_pass({0.3, 0.4, 0.1}, 0.15, 0.02));
  CHECK_FALSE(mc_trace_pass({0.3, 0.31, 0.30, 0.1}, 0.15, 0.02));
}
