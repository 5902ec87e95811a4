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

#include "divseq/chebyshev.hpp"
#include "divseq/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace divseq;

namespace {

ChebyshevInterpolant::BatchSampler sampler_of(double (*f)(double))
{
  return [f](std::span<double const> nodes) {
    std::vector<double> v;
    for (double s : nodes)
    {
      v.push_back(f(s));
    }
    return v;
  };
}

}  // namespace

TEST_CASE("Lobatto nodes are ascending with exact endpoints")
{
  auto const nodes = ChebyshevInterpolant::nodes_for_degree(16);
  REQUIRE(nodes.size() == 17);
  CHECK(nodes.front() == 0.0);
  CHECK(nodes.back() == 1.0);
  for (std::size_t j = 1; j < nodes.size(); ++j)
  {
    CHECK(nodes[j] > nodes[j - 1]);
    // Chebyshev points of the second kind mapped to [0,1].
    double const expected = 0.5 * (1.0 - std::cos(std::numbers::pi * j / 16.0));
    CHECK(nodes[j] == doctest::Approx(expected).epsilon(1e-15));
  }
}

TEST_CASE("interpolant reproduces node values and low-degree polynomials")
{
  auto const          nodes = ChebyshevInterpolant::nodes_for_degree(8);
  std::vector<double> values;
  for (double s : nodes)
  {
    values.push_back(3.0 * s * s * s - s + 0.25);
  }
  ChebyshevInterpolant const p(values);
  CHECK(p.degree() == 8);
  for (std::size_t j = 0; j < nodes.size(); ++j)
  {
    CHECK(p(nodes[j]) == values[j]);
  }
  for (double s : {0.01, 0.3, 0.5, 0.77, 0.999})
  {
    CHECK(p(s) == doctest::Approx(3.0 * s * s * s - s + 0.25).epsilon(1e-14));
  }
}

TEST_CASE("adaptive fit of smooth functions")
{
  auto const fit = ChebyshevInterpolant::fit(sampler_of([](double s) { return std::exp(s) * std::sin(3.0 * s); }),
                                             1e-13);
  for (double s = 0.0; s <= 1.0; s += 0.0137)
  {
    CHECK(fit(s) == doctest::Approx(std::exp(s) * std::sin(3.0 * s)).epsilon(1e-12));
  }
  CHECK(fit.degree() <= 64);
}

TEST_CASE("fit gives up on a kink")
{
  CHECK_THROWS_AS(
      ChebyshevInterpolant::fit(sampler_of([](double s) { return std::abs(s - 0.3); }), 1e-14), ToleranceError);
}
