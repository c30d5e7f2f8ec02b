// Copyright 2026 The Text Friction Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "textfriction/analytics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "textfriction/error.hpp"

namespace tf = textfriction;

TEST_CASE("ols_fit recovers exact lines") {
  const std::vector<tf::Point> two{{0.0, -687.0}, {1000.0, -462.0}};
  const auto m = tf::ols_fit(two);
  CHECK(std::abs(m.slope - 0.225) < 1e-9);
  CHECK(std::abs(m.intercept + 687.0) < 1e-9);
  CHECK(m.r == doctest::Approx(1.0));
  CHECK(m.n == 2);

  const std::vector<tf::Point> flat{{1, 5}, {2, 5}, {3, 5}};
  const auto f = tf::ols_fit(flat);
  CHECK(f.slope == 0.0);
  CHECK(f.intercept == 5.0);
  CHECK(f.r == 0.0);
}

TEST_CASE("ols_fit errors") {
  CHECK_THROWS_AS(tf::ols_fit(std::vector<tf::Point>{{1, 2}}), tf::DomainError);
  CHECK_THROWS_AS(tf::ols_fit(std::vector<tf::Point>{{3, 1}, {3, 2}, {3, 9}}),
                  tf::DomainError);
}

TEST_CASE("ols_fit properties on random data") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mf(3300.0, 3700.0);
  std::normal_distribution<double> noise(0.0, 10.0);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<tf::Point> pts(32);
    for (auto& p : pts) {
      p.mean_friction = mf(rng);
      p.ease = -687.0 + 0.225 * p.mean_friction + noise(rng);
    }
    const auto m = tf::ols_fit(pts);
    CHECK(std::abs(m.r) <= 1.0);

    double residual_sum = 0.0;
    double scale = 0.0;
    double mx = 0.0;
    double my = 0.0;
    for (const auto& p : pts) {
      residual_sum += p.ease - tf::predict_ease(m, p.mean_friction);
      scale += std::abs(p.ease);
      mx += p.mean_friction;
      my += p.ease;
    }
    mx /= 32.0;
    my /= 32.0;
    CHECK(std::abs(residual_sum) <= 1e-9 * scale);
    CHECK(tf::predict_ease(m, mx) == doctest::Approx(my).epsilon(1e-9).scale(100.0));

    std::shuffle(pts.begin(), pts.end(), rng);
    const auto shuffled = tf::ols_fit(pts);
    for (double x : {3000.0, 3500.0, 4000.0}) {
      CHECK(tf::predict_ease(shuffled, x) == doctest::Approx(tf::predict_ease(m, x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("predict_ease with the reference model") {
  CHECK(tf::predict_ease(tf::kReferenceModel, 3500.0) == doctest::Approx(100.5).epsilon(1e-12));
  CHECK(std::abs(tf::predict_ease(tf::kReferenceModel, 3053.3)) < 0.01);
  CHECK(std::abs(tf::predict_ease(tf::kReferenceModel, 687.0 / 0.225)) < 1e-9);
  const tf::RegressionModel flat{0.0, 42.0, 0.0, 2};
  CHECK(tf::predict_ease(flat, -1e6) == 42.0);
  CHECK(tf::predict_ease(flat, 1e6) == 42.0);
}

TEST_CASE("histogram") {
  SUBCASE("extremes of the reported spread") {
    const auto h = tf::histogram(std::vector<double>{15.50, 28.61}, 5.0);
    REQUIRE(h.bins.size() == 3);
    CHECK(h.bins[0].lower == 15.0);
    CHECK(h.bins[0].count == 1);
    CHECK(h.bins[1].lower == 20.0);
    CHECK(h.bins[1].count == 0);
    CHECK(h.bins[2].lower == 25.0);
    CHECK(h.bins[2].count == 1);
  }
  SUBCASE("single bin") {
    const auto h = tf::histogram(std::vector<double>{10, 10, 10}, 1.0);
    REQUIRE(h.bins.size() == 1);
    CHECK(h.bins[0].lower == 10.0);
    CHECK(h.bins[0].count == 3);
  }
  SUBCASE("half-open bins") {
    const auto h = tf::histogram(std::vector<double>{2.0, 3.999, 4.0}, 2.0);
    REQUIRE(h.bins.size() == 2);
    CHECK(h.bins[0].count == 2);
    CHECK(h.bins[1].count == 1);
  }
  SUBCASE("conserves counts, edges increase") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> sd(10.0, 40.0);
    std::vector<double> v(500);
    for (auto& x : v) x = sd(rng);
    const auto h = tf::histogram(v);
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
      total += h.bins[i].count;
      if (i) CHECK(h.bins[i].lower > h.bins[i - 1].lower);
    }
    CHECK(total == v.size());
    CHECK(h.bin_width == tf::kDefaultBinWidth);
  }
  CHECK_THROWS_AS(tf::histogram(std::vector<double>{1.0}, 0.0), tf::DomainError);
  CHECK_THROWS_AS(tf::histogram(std::vector<double>{1.0}, -2.0), tf::DomainError);
  CHECK_THROWS_AS(tf::histogram(std::vector<double>{}, 1.0), tf::DomainError);
  CHECK_THROWS_AS(tf::histogram(std::vector<double>{NAN}, 1.0), tf::DomainError);
}
