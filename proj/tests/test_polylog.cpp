//------------------------------------------------------------------------------
//
//   Copyright 2026 The divseq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "divseq/errors.hpp"
#include "divseq/polylog.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace divseq;

namespace {

// Direct partial sums with a fixed, generous term count.
double naive_series(int k, double z)
{
  double sum = 0.0;
  double zj  = 1.0;
  for (int j = 1; j < 4000; ++j)
  {
    zj *= z;
    sum += zj / std::pow(static_cast<double>(j), k);
  }
  return sum;
}

}  // namespace

TEST_CASE("closed-form orders")
{
  CHECK(polylog(0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(polylog(0, -3.0) == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(polylog(1, 0.5) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(polylog(1, -1.0) == doctest::Approx(-std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("spot values")
{
  CHECK(polylog(2, 0.5) == doctest::Approx(oracle::kLi2Half).epsilon(1e-13));
  CHECK(polylog(2, 0.5) ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 12.0 - 0.5 * std::numbers::ln2 * std::numbers::ln2)
            .epsilon(1e-13));
  CHECK(polylog(2, -0.5) == doctest::Approx(oracle::kLi2MinusHalf).epsilon(1e-13));
  CHECK(polylog(2, -3.0) == doctest::Approx(oracle::kLi2MinusThree).epsilon(1e-12));
  CHECK(polylog(3, -98.0) == doctest::Approx(oracle::kLi3MinusNinety8).epsilon(1e-12));
  CHECK(polylog(2, 0.97) == doctest::Approx(oracle::kLi2Point97).epsilon(1e-12));
  CHECK(polylog(2, -1.0) == doctest::Approx(-std::numbers::pi * std::numbers::pi / 12.0).epsilon(1e-12));
}

TEST_CASE("zero argument")
{
  for (int k = 0; k <= 6; ++k)
  {
    CHECK(polylog(k, 0.0) == 0.0);
  }
  CHECK(polylog_recurrence_check(2, 0.0) == 0.0);
}

TEST_CASE("domain errors")
{
  CHECK_THROWS_AS(polylog(-1, 0.5), DomainError);
  CHECK_THROWS_AS(polylog(2, 1.0), DomainError);
  CHECK_THROWS_AS(polylog(2, 1.5), DomainError);
  CHECK_THROWS_AS(polylog(2, std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(polylog_series(2, 1.0), DomainError);
  CHECK_THROWS_AS(polylog_series(2, -1.5), DomainError);
  CHECK_THROWS_AS(polylog_integral(0, 0.5), DomainError);
  CHECK_THROWS_AS(polylog_integral(2, 1.0), DomainError);
}

TEST_CASE("integral representation matches the closed form and the series")
{
  CHECK(polylog_integral(1, 0.5) == doctest::Approx(std::numbers::ln2).epsilon(1e-10));
  CHECK(polylog_integral(2, -0.5) == doctest::Approx(oracle::kLi2MinusHalf).epsilon(1e-10));
  double const deep = polylog_integral(2, -3.0);
  CHECK(std::isfinite(deep));
  CHECK(deep < 0.0);
  CHECK(std::abs(deep - polylog_recurrence_check(1, -3.0)) < 1e-8);
}

TEST_CASE("strategy agreement grid")
{
  for (int k : {2, 3, 4})
  {
    for (double z : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9})
    {
      CAPTURE(k);
      CAPTURE(z);
      CHECK(std::abs(polylog_series(k, z) - polylog_integral(k, z)) < 1e-9);
      CHECK(polylog_series(k, z) == doctest::Approx(naive_series(k, z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("recurrence")
{
  CHECK(polylog_recurrence_check(1, 0.5) == doctest::Approx(oracle::kLi2Half).epsilon(1e-10));
  CHECK(polylog_recurrence_check(1, -0.5) == doctest::Approx(oracle::kLi2MinusHalf).epsilon(1e-10));
  for (int k : {1, 2, 3})
  {
    for (double z : {-3.0, -1.0, -0.5, 0.5, 0.9})
    {
      CAPTURE(k);
      CAPTURE(z);
      CHECK(std::abs(polylog(k + 1, z) - polylog_recurrence_check(k, z)) < 1e-8);
    }
  }
}

TEST_CASE("continuity across the strategy switch")
{
  for (int k : {2, 3, 5})
  {
    for (double z : {0.95, -0.95})
    {
      double const below = polylog(k, z);
      double const above = polylog(k, std::nextafter(z, z > 0 ? 1.0 : -2.0));
      CHECK(below == doctest::Approx(above).epsilon(1e-11));
    }
  }
}

TEST_CASE("sign and monotonicity on a grid")
{
  for (int k = 0; k <= 5; ++k)
  {
    double prev = -std::numeric_limits<double>::infinity();
    for (double z = -40.0; z < 0.995; z += 0.05)
    {
      double const v = polylog(k, z);
      if (z < -1e-12)
      {
        CHECK(v < 0.0);
      }
      else if (z > 1e-12)
      {
        CHECK(v > 0.0);
      }
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("derivative identity z Li_k'(z) = Li_{k-1}(z)")
{
  for (int k : {2, 3, 4})
  {
    for (double z : {-5.0, -0.7, 0.3, 0.8})
    {
      double const h     = 1e-5 * std::max(1.0, std::abs(z));
      double const slope = (polylog(k, z + h) - polylog(k, z - h)) / (2.0 * h);
      CHECK(z * slope == doctest::Approx(polylog(k - 1, z)).epsilon(1e-7));
    }
  }
}
