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

#include "convlab/delta.hpp"
#include "convlab/law.hpp"
#include "convlab/numeric.hpp"
#include "doctest.h"

using namespace convlab;

namespace {

GaussianLimit scalar_limit(double variance) {
  Eigen::MatrixXd cov(1, 1);
  cov(0, 0) = variance;
  return GaussianLimit::centered(std::move(cov));
}

}  // namespace

TEST_CASE("delta_uni") {
  const auto ident = SmoothMap::scalar([](double x) { return x; },
                                       [](double) { return 1.0; });
  CHECK(delta_uni(scalar_limit(1.7), 0.3, ident).cov(0, 0) ==
        doctest::Approx(1.7));

  const auto square = SmoothMap::scalar([](double x) { return x * x; },
                                        [](double x) { return 2.0 * x; });
  CHECK(delta_uni(scalar_limit(1.0), 1.0, square).cov(0, 0) ==
        doctest::Approx(4.0));
}

TEST_CASE("delta_uni agrees with Monte Carlo for the squared mean") {
  // sqrt(n)(Xbar^2 - 1) for standard exponentials: the delta output is 4.
  const auto square = SmoothMap::scalar([](double x) { return x * x; },
                                        [](double x) { return 2.0 * x; });
  const double predicted = delta_uni(scalar_limit(1.0), 1.0, square).cov(0, 0);
  REQUIRE(predicted == doctest::Approx(4.0));

  const std::size_t n = 10000, reps = 2000;
  std::vector<double> stats(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    RngStream rng = RngStream(31415).substream(9, r);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += rng.next_exponential();
    const double xbar = s / static_cast<double>(n);
    stats[r] = std::sqrt(static_cast<double>(n)) * (xbar * xbar - 1.0);
  }
  // ~6-sigma band for the variance estimator at 2000 replicates.
  CHECK(std::abs(sample_variance(stats) - predicted) < 0.55);
}

TEST_CASE("delta_grad") {
  Eigen::MatrixXd sigma(2, 2);
  sigma << 1.0, 0.5, 0.5, 1.0;
  const auto limit = GaussianLimit::centered(sigma);

  SmoothMap flat;
  flat.in_dim = 2;
  flat.out_dim = 1;
  flat.eval = [](const Eigen::VectorXd&) {
    return Eigen::VectorXd::Constant(1, 7.0);
  };
  CHECK(delta_grad(limit, Eigen::Vector2d(0.0, 0.0), flat).cov(0, 0) ==
        doctest::Approx(0.0).epsilon(1e-9));

  SmoothMap sum_map;
  sum_map.in_dim = 2;
  sum_map.out_dim = 1;
  sum_map.eval = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(1, x.sum());
  };
  sum_map.jacobian_closed = [](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Ones(1, 2);
  };
  const auto eye = GaussianLimit::centered(Eigen::MatrixXd::Identity(2, 2));
  CHECK(delta_grad(eye, Eigen::Vector2d(0.0, 0.0), sum_map).cov(0, 0) ==
        doctest::Approx(2.0));

  SmoothMap prod_map;
  prod_map.in_dim = 2;
  prod_map.out_dim = 1;
  prod_map.eval = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(1, x(0) * x(1));
  };
  prod_map.jacobian_closed = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd j(1, 2);
    j << x(1), x(0);
    return j;
  };
  const Eigen::Vector2d theta(1.0, 1.0);
  const double out = delta_grad(limit, theta, prod_map).cov(0, 0);
  // Brute-force quadratic form as the oracle.
  Eigen::MatrixXd grad = prod_map.jacobian_closed(theta);
  double brute = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      brute += grad(0, i) * sigma(i, j) * grad(0, j);
    }
  }
  CHECK(brute == doctest::Approx(3.0));
  CHECK(out == doctest::Approx(brute).epsilon(1e-12));

  SmoothMap mismatched;
  mismatched.in_dim = 3;
  mismatched.out_dim = 1;
  mismatched.eval = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(1, x.sum());
  };
  CHECK_THROWS_AS(delta_grad(limit, theta, mismatched), DomainError);
}

TEST_CASE("delta_jac") {
  Eigen::MatrixXd sigma(2, 2);
  sigma << 2.0, -0.3, -0.3, 1.0;
  const auto limit = GaussianLimit::centered(sigma);

  SmoothMap ident;
  ident.in_dim = 2;
  ident.out_dim = 2;
  ident.eval = [](const Eigen::VectorXd& x) { return x; };
  ident.jacobian_closed = [](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(2, 2);
  };
  const auto same = delta_jac(limit, Eigen::Vector2d(0, 0), ident);
  CHECK((same.cov - sigma).cwiseAbs().maxCoeff() < 1e-14);

  Eigen::MatrixXd a(3, 2);
  a << 1.0, 2.0, -1.0, 0.5, 0.0, 1.0;
  SmoothMap linear;
  linear.in_dim = 2;
  linear.out_dim = 3;
  linear.eval = [a](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(a * x);
  };
  linear.jacobian_closed = [a](const Eigen::VectorXd&) { return a; };
  const auto pushed = delta_jac(limit, Eigen::Vector2d(0, 0), linear);
  const Eigen::MatrixXd target = a * sigma * a.transpose();
  CHECK((pushed.cov - target).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(pushed.is_psd(1e-10));

  // Multinomial limit through the coordinate sum: the sqrt(p) direction is
  // null, so for p = (1/2, 1/2) the variance collapses to zero.
  Eigen::MatrixXd multinom(2, 2);
  multinom << 0.5, -0.5, -0.5, 0.5;
  SmoothMap coord_sum;
  coord_sum.in_dim = 2;
  coord_sum.out_dim = 1;
  coord_sum.eval = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(1, x.sum());
  };
  coord_sum.jacobian_closed = [](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Ones(1, 2);
  };
  const auto collapsed = delta_jac(GaussianLimit::centered(multinom),
                                   Eigen::Vector2d(0, 0), coord_sum);
  CHECK(collapsed.cov(0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  // Degenerate limits are returned as-is, not rejected.
  CHECK(collapsed.is_psd(1e-10));

  SmoothMap wrong;
  wrong.in_dim = 3;
  wrong.out_dim = 1;
  wrong.eval = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(1, x.sum());
  };
  CHECK_THROWS_AS(delta_jac(limit, Eigen::Vector2d(0, 0), wrong), DomainError);
}

TEST_CASE("finite differences match closed-form jacobians") {
  SmoothMap m;
  m.in_dim = 2;
  m.out_dim = 2;
  m.eval = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd out(2);
    out << std::exp(x(0)) * std::sin(x(1)), x(0) * x(0) * x(1);
    return out;
  };
  m.jacobian_closed = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd j(2, 2);
    j << std::exp(x(0)) * std::sin(x(1)), std::exp(x(0)) * std::cos(x(1)),
        2.0 * x(0) * x(1), x(0) * x(0);
    return j;
  };
  const double h = std::cbrt(std::numeric_limits<double>::epsilon());
  for (const auto& theta :
       {Eigen::Vector2d(0.2, -1.0), Eigen::Vector2d(1.5, 0.7)}) {
    const auto fd = m.jacobian_fd(theta);
    const auto cf = m.jacobian_closed(theta);
    // Central differences are second order: 10 h^2 per entry, scaled by
    // the (bounded) third derivatives of this map.
    CHECK((fd - cf).cwiseAbs().maxCoeff() < 10.0 * h * h * 10.0);
  }
}

TEST_CASE("composition consistency (chain rule)") {
  Eigen::MatrixXd sigma(2, 2);
  sigma << 1.0, 0.25, 0.25, 0.5;
  const auto limit = GaussianLimit::centered(sigma);
  const Eigen::Vector2d theta(0.8, -0.4);

  // h: R^2 -> R^2, g: R^2 -> R.
  SmoothMap h;
  h.in_dim = 2;
  h.out_dim = 2;
  h.eval = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd out(2);
    out << x(0) + x(1) * x(1), x(0) * x(1);
    return out;
  };
  h.jacobian_closed = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd j(2, 2);
    j << 1.0, 2.0 * x(1), x(1), x(0);
    return j;
  };
  SmoothMap g;
  g.in_dim = 2;
  g.out_dim = 1;
  g.eval = [](const Eigen::VectorXd& y) {
    return Eigen::VectorXd::Constant(1, std::sin(y(0)) + y(1));
  };
  g.jacobian_closed = [](const Eigen::VectorXd& y) {
    Eigen::MatrixXd j(1, 2);
    j << std::cos(y(0)), 1.0;
    return j;
  };

  SmoothMap composed;
  composed.in_dim = 2;
  composed.out_dim = 1;
  composed.eval = [&](const Eigen::VectorXd& x) { return g.eval(h.eval(x)); };
  composed.jacobian_closed = [&](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd(g.jacobian_closed(h.eval(x)) *
                           h.jacobian_closed(x));
  };

  const auto direct = delta_jac(limit, theta, composed);
  const auto through_h = delta_jac(limit, theta, h);
  const auto then_g = delta_jac(through_h, h.eval(theta), g);
  CHECK(std::abs(direct.cov(0, 0) - then_g.cov(0, 0)) < 1e-8);
}
