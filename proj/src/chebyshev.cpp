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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace divseq {

std::vector<double> ChebyshevInterpolant::nodes_for_degree(std::size_t degree)
{
  std::vector<double> nodes(degree + 1);
  double const        denom = 2.0 * static_cast<double>(degree);
  for (std::size_t j = 0; j <= degree; ++j)
  {
    double const s = std::sin(std::numbers::pi * static_cast<double>(j) / denom);
    nodes[j]       = s * s;
  }
  nodes.front() = 0.0;
  nodes.back()  = 1.0;
  return nodes;
}

ChebyshevInterpolant::ChebyshevInterpolant(std::vector<double> values)
  : values_(std::move(values))
{
  if (values_.size() < 2)
  {
    throw DomainError("Chebyshev interpolant needs at least two nodes");
  }
  nodes_ = nodes_for_degree(values_.size() - 1);
}

double ChebyshevInterpolant::operator()(double s) const
{
  std::size_t const n   = values_.size() - 1;
  double            num = 0.0;
  double            den = 0.0;
  for (std::size_t j = 0; j <= n; ++j)
  {
    double const diff = s - nodes_[j];
    if (diff == 0.0)
    {
      return values_[j];
    }
    double w = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == n)
    {
      w *= 0.5;
    }
    w /= diff;
    num += w * values_[j];
    den += w;
  }
  return num / den;
}

ChebyshevInterpolant ChebyshevInterpolant::fit(BatchSampler const &sampler, double tolerance)
{
  std::size_t degree = kInitialDegree;
  auto        coarse = ChebyshevInterpolant(sampler(nodes_for_degree(degree)));
  double      scale  = 0.0;
  for (double v : coarse.values())
  {
    scale = std::max(scale, std::abs(v));
  }

  while (2 * degree <= kMaxDegree)
  {
    auto const          fine_nodes  = nodes_for_degree(2 * degree);
    std::vector<double> fine_values = sampler(fine_nodes);

    double residual = 0.0;
    for (std::size_t j = 1; j < fine_nodes.size(); j += 2)
    {
      residual = std::max(residual, std::abs(coarse(fine_nodes[j]) - fine_values[j]));
      scale    = std::max(scale, std::abs(fine_values[j]));
    }
    // Residuals cannot drop below the rounding level of the samples.
    double const floor = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    if (residual < std::max(tolerance, floor))
    {
      return ChebyshevInterpolant(std::move(fine_values));
    }
    coarse = ChebyshevInterpolant(std::move(fine_values));
    degree *= 2;
  }
  throw ToleranceError("Chebyshev interpolant did not converge by " + std::to_string(kMaxDegree) +
                       " nodes");
}

}  // namespace divseq
