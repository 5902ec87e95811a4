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
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace divseq {

/// Polynomial interpolant on [0,1] through Chebyshev-Lobatto points,
/// evaluated with the barycentric formula. Node 0 is s = 0 and the last
/// node is s = 1, so endpoint values are reproduced exactly.
class ChebyshevInterpolant
{
public:
  /// Computes sample values at a whole (ascending) node set at once.
  using BatchSampler = std::function<std::vector<double>(std::span<double const>)>;

  static constexpr std::size_t kInitialDegree = 16;
  static constexpr std::size_t kMaxDegree     = std::size_t{1} << 14;

  /// Lobatto nodes sin^2(pi j / 2n), j = 0..n, in ascending order.
  static std::vector<double> nodes_for_degree(std::size_t degree);

  /// Interpolant through `values` at nodes_for_degree(values.size() - 1).
  explicit ChebyshevInterpolant(std::vector<double> values);

  /// Doubles the degree from kInitialDegree until the degree-n interpolant
  /// reproduces the samples at the new degree-2n nodes within `tolerance`,
  /// then returns the degree-2n interpolant. Throws ToleranceError past
  /// kMaxDegree.
  static ChebyshevInterpolant fit(BatchSampler const &sampler, double tolerance);

  double operator()(double s) const;

  std::size_t degree() const noexcept
  {
    return values_.size() - 1;
  }
  std::span<double const> nodes() const noexcept
  {
    return nodes_;
  }
  std::span<double const> values() const noexcept
  {
    return values_;
  }

private:
  std::vector<double> nodes_;
  std::vector<double> values_;
};

}  // namespace divseq
