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
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace divseq {

/// Strictly positive probability vector over a finite support of size >= 2.
/// The reference measure is the counting measure over support indices, so
/// every integral over the sample space is a finite sum.
class Distribution
{
public:
  /// Validates and (if the sum is within 1e-9 of one) renormalizes.
  /// Throws DomainError on non-positive masses, a sum off by >= 1e-9, or
  /// fewer than two support points.
  explicit Distribution(std::vector<double> masses);

  std::size_t size() const noexcept
  {
    return masses_.size();
  }

  double operator[](std::size_t i) const noexcept
  {
    return masses_[i];
  }

  std::span<const double> masses() const noexcept
  {
    return masses_;
  }

  bool operator==(Distribution const &other) const = default;

private:
  struct Trusted
  {
  };
  Distribution(Trusted, std::vector<double> masses)
    : masses_(std::move(masses))
  {}

  std::vector<double> masses_;

  friend class MixturePath;
  friend Distribution random_distribution(std::size_t, std::mt19937_64 &, double);
};

Distribution random_distribution(std::size_t n, std::mt19937_64 &engine, double min_mass);

/// Affine path R(t) = (1 - t) P + t Q between two distributions on the same
/// support.
class MixturePath
{
public:
  /// Throws DomainError if the supports differ in size.
  MixturePath(Distribution start, Distribution end);

  Distribution const &start() const noexcept
  {
    return start_;
  }
  Distribution const &end() const noexcept
  {
    return end_;
  }
  std::size_t size() const noexcept
  {
    return start_.size();
  }

  /// True when P and Q are identical, i.e. R(t) = P for every t.
  bool degenerate() const noexcept
  {
    return degenerate_;
  }

  /// R(t). Exact at t = 0 and t = 1; throws DomainError for t outside [0,1].
  Distribution at(double t) const;

  /// Path from P to R(t), i.e. the same segment truncated at t.
  MixturePath truncated(double t) const;

private:
  Distribution start_;
  Distribution end_;
  bool         degenerate_;
};

/// Validating factory, same contract as the Distribution constructor.
Distribution new_distribution(std::vector<double> masses);

/// R(t) along `path`.
Distribution mixture(MixturePath const &path, double t);

/// Random distribution with every mass >= min_mass. Masses are normalized
/// i.i.d. unit exponentials w, floored as min_mass + (1 - n min_mass) w.
/// Deterministic for a fixed seed on every platform.
Distribution random_distribution(std::size_t n, std::uint64_t seed, double min_mass);

/// Same draw using an existing engine (advances it by n).
Distribution random_distribution(std::size_t n, std::mt19937_64 &engine, double min_mass);

/// Uniform double in (0, 1] from the top 53 bits of a 64-bit draw.
double unit_interval(std::mt19937_64 &engine);

/// Total-variation distance 1/2 sum |p_i - q_i|.
double total_variation(Distribution const &p, Distribution const &q);

}  // namespace divseq
