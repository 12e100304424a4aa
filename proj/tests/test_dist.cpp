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
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>

#include "convlab/law.hpp"
#include "convlab/metrics.hpp"
#include "convlab/numeric.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace convlab;

namespace {

// Exact integer binomial coefficient, small arguments.
long double choose_exact(int n, int k) {
  long double v = 1.0L;
  for (int i = 0; i < k; ++i) {
    v = v * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  }
  return v;
}

}  // namespace

TEST_CASE("make_law point values") {
  const auto bin = make_law("Binomial", {{"n", 2}, {"p", 0.5}});
  CHECK(bin.mass_or_density(1.0) == doctest::Approx(0.5).epsilon(1e-12));

  const auto pareto = make_law("Pareto", {{"alpha", 1.0}});
  CHECK(pareto.cdf(2.0) == doctest::Approx(0.5).epsilon(1e-12));

  // Oracle: direct evaluation of the binomial-coefficient ratio
  // C(5,1) C(5,1) / C(10,2) = 25/45.
  const auto hyper =
      make_law("Hypergeometric", {{"N", 10}, {"M", 5}, {"n", 2}});
  const double expected = static_cast<double>(
      choose_exact(5, 1) * choose_exact(5, 1) / choose_exact(10, 2));
  CHECK(expected == doctest::Approx(25.0 / 45.0).epsilon(1e-15));
  CHECK(hyper.mass_or_density(1.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("make_law rejects bad input") {
  CHECK_THROWS_AS(make_law("Binomial", {{"n", 3}, {"p", 1.2}}),
                  ParameterError);
  CHECK_THROWS_AS(make_law("Pareto", {{"alpha", -1.0}}), ParameterError);
  CHECK_THROWS_AS(make_law("Gaussian", {{"mu", 0.0}, {"sigma2", 0.0}}),
                  ParameterError);
  CHECK_THROWS_AS(
      make_law("Hypergeometric", {{"N", 10}, {"M", 11}, {"n", 2}}),
      ParameterError);
  CHECK_THROWS_AS(make_law("Binomial", {{"p", 0.5}}), ParameterError);
  CHECK_THROWS_AS(make_law("Zeta", {{"s", 2.0}}), UnknownLawError);
  CHECK_THROWS_WITH_AS(make_law("Binomial", {{"n", 3.5}, {"p", 0.5}}),
                       "Binomial: parameter 'n' must be an integer",
                       ParameterError);
}

TEST_CASE("cf_eval") {
  for (const auto& law : test::catalog()) {
    if (law.name == "Pareto") {
      CHECK_THROWS_AS(cf_eval(law, 1.0), UnsupportedError);
      continue;
    }
    const auto at_zero = cf_eval(law, 0.0);
    CHECK(std::abs(at_zero - std::complex<double>(1.0, 0.0)) < 1e-12);
    for (double u = -10.0; u <= 10.0; u += 0.5) {
      CHECK(std::abs(cf_eval(law, u)) <= 1.0 + 1e-12);
    }
  }

  const auto pois = make_law("Poisson", {{"lambda", 3.0}});
  const auto v = cf_eval(pois, M_PI);
  CHECK(v.real() == doctest::Approx(std::exp(-6.0)).epsilon(1e-9));
  CHECK(std::abs(v.imag()) < 1e-9);

  // Two-term summation: 0.5 (1 + e^{i pi}) = 0.
  const auto bern = make_law("Bernoulli", {{"p", 0.5}});
  CHECK(std::abs(cf_eval(bern, M_PI)) < 1e-12);
}

TEST_CASE("cf of an independent sum factorizes") {
  const double p = 0.37;
  const auto bern = make_law("Bernoulli", {{"p", p}});
  for (int n : {2, 7, 23, 50}) {
    const auto bin = make_law("Binomial", {{"n", n}, {"p", p}});
    for (double u = -5.0; u <= 5.0; u += 0.25) {
      std::complex<double> prod{1.0, 0.0};
      for (int i = 0; i < n; ++i) prod *= cf_eval(bern, u);
      CHECK(std::abs(cf_eval(bin, u) - prod) < 1e-10);
    }
  }
}

TEST_CASE("mgf_eval") {
  for (const auto& law : test::catalog()) {
    if (law.name == "Pareto") {
      CHECK_THROWS_AS(mgf_eval(law, 0.0), UnsupportedError);
      continue;
    }
    CHECK(mgf_eval(law, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }

  const auto bin = make_law("Binomial", {{"n", 3}, {"p", 0.5}});
  CHECK(mgf_eval(bin, std::log(2.0)) == doctest::Approx(3.375).epsilon(1e-12));

  // Series oracle: sum_k e^{-2} 2^k e^k / k!.
  const auto pois = make_law("Poisson", {{"lambda", 2.0}});
  long double series = 0.0L, term = std::exp(-2.0L);
  for (int k = 0; term > 1e-22L || k < 5; ++k) {
    series += term;
    term *= 2.0L * std::exp(1.0L) / static_cast<long double>(k + 1);
    if (k > 400) break;
  }
  CHECK(mgf_eval(pois, 1.0) ==
        doctest::Approx(static_cast<double>(series)).epsilon(1e-10));

  const auto geo = make_law("Geometric", {{"p", 0.25}});
  const double t_edge = -std::log(0.75);
  CHECK_THROWS_AS(mgf_eval(geo, t_edge), DomainError);
  CHECK_THROWS_AS(mgf_eval(geo, t_edge + 1.0), DomainError);
  CHECK(mgf_eval(geo, t_edge - 1e-3) > 0.0);
}

TEST_CASE("cdf limits and monotonicity on a widening grid") {
  for (const auto& law : test::catalog()) {
    double prev = -1.0;
    for (int j = -12; j <= 12; ++j) {
      const double x = (j < 0 ? -1.0 : 1.0) * std::pow(2.0, std::abs(j));
      const double f = law.cdf(x);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      if (j > -12) CHECK(f >= prev - 1e-15);
      prev = f;
    }
    CHECK(law.cdf(-4096.0) < 1e-9);
    CHECK(law.cdf(4096.0) > 1.0 - 1e-6);
  }
}

TEST_CASE("mass sums to one") {
  for (const auto& law : test::catalog()) {
    if (law.kind == MassKind::Discrete) {
      double total = 0.0;
      for (const auto& [x, p] : mass_table(law, 0.0)) total += p;
      CHECK(std::abs(total - 1.0) < 1e-12);
    } else {
      using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
      double err = 0.0;
      const double total =
          Quad::integrate(law.mass_or_density, law.support.lo, law.support.hi,
                          25, 1e-12, &err);
      CHECK(std::abs(total - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("sampler matches cdf at the Dvoretzky-type gate") {
  // 3 sqrt(ln 2 / (2 * 1e5))
  const double gate = 3.0 * std::sqrt(std::log(2.0) / (2.0 * 1e5));
  const std::size_t n = 100000;
  for (const auto& law : test::catalog()) {
    for (std::uint64_t seed : {11u, 23u, 42u, 77u, 101u}) {
      RngStream rng(seed);
      auto draws = sample_iid(law, rng, n);
      const double ks = ks_distance_empirical(std::move(draws), law);
      INFO(law.name, " seed ", seed, " ks=", ks);
      CHECK(ks < gate);
    }
  }
}

TEST_CASE("sampling is bit-reproducible and n=0 gives an empty sample") {
  for (const auto& law : test::catalog()) {
    RngStream a(987654321);
    CHECK(sample_iid(law, a, 0).empty());
    RngStream a2(13), b2(13);
    const auto xs = sample_iid(law, a2, 257);
    const auto ys = sample_iid(law, b2, 257);
    REQUIRE(xs.size() == ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] == ys[i]);
  }
}

TEST_CASE("exponential sample mean lands in the 6-sigma band") {
  const auto expo = make_law("Exponential", {});
  RngStream rng(2026);
  const auto xs = sample_iid(expo, rng, 100000);
  CHECK(sample_mean(xs) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("multinomial draws partition the trial count") {
  const auto law = multinomial_law(100, {0.2, 0.3, 0.5});
  RngStream rng(5);
  for (const auto& v : sample_iid(law, rng, 50)) {
    CHECK(v.sum() == doctest::Approx(100.0));
    CHECK(v.minCoeff() >= 0.0);
  }
  CHECK_THROWS_AS(multinomial_law(10, {0.5, 0.4}), ParameterError);
}

TEST_CASE("gaussian vector law reproduces its covariance") {
  Eigen::MatrixXd cov(2, 2);
  cov << 2.0, 0.8, 0.8, 1.0;
  const auto law = gaussian_vector_law(Eigen::Vector2d(1.0, -1.0), cov);
  RngStream rng(99);
  const auto draws = sample_iid(law, rng, 50000);
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const auto& v : draws) mean += v;
  mean /= static_cast<double>(draws.size());
  Eigen::Matrix2d emp = Eigen::Matrix2d::Zero();
  for (const auto& v : draws) {
    emp += (v - mean) * (v - mean).transpose();
  }
  emp /= static_cast<double>(draws.size());
  CHECK(mean(0) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(mean(1) == doctest::Approx(-1.0).epsilon(0.05));
  CHECK((emp - cov).cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("gaussian cdf against the series oracle") {
  for (double x = -8.0; x <= 8.0; x += 0.177) {
    const double lib = standard_normal_cdf(x);
    const double oracle = static_cast<double>(test::oracle_normal_cdf(x));
    CHECK(std::abs(lib - oracle) < 1e-12);
  }
}

TEST_CASE("law descriptors round-trip") {
  for (const auto& law : test::catalog()) {
    const auto text = law_descriptor(law);
    const auto back = law_from_descriptor(text);
    CHECK(back.name == law.name);
    CHECK(back.params == law.params);
  }
}
