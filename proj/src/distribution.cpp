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

#include "divseq/distribution.hpp"

#include "divseq/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace divseq {

namespace {

constexpr double kRenormalizeTolerance = 1e-9;

}  // namespace

Distribution::Distribution(std::vector<double> masses)
  : masses_(std::move(masses))
{
  if (masses_.size() < 2)
  {
    throw DomainError("distribution needs at least two support points");
  }
  for (std::size_t i = 0; i < masses_.size(); ++i)
  {
    if (!(masses_[i] > 0.0) || !std::isfinite(masses_[i]))
    {
      throw DomainError("mass at index " + std::to_string(i) +
                        " is not strictly positive (common support required)");
    }
  }
  double const sum = std::accumulate(masses_.begin(), masses_.end(), 0.0);
  if (!(std::abs(sum - 1.0) < kRenormalizeTolerance))
  {
    throw DomainError("masses sum to " + std::to_string(sum) + ", expected 1");
  }
  if (sum != 1.0)
  {
    for (double &m : masses_)
    {
      m /= sum;
    }
  }
}

MixturePath::MixturePath(Distribution start, Distribution end)
  : start_(std::move(start))
  , end_(std::move(end))
  , degenerate_(false)
{
  if (start_.size() != end_.size())
  {
    throw DomainError("support size mismatch: " + std::to_string(start_.size()) + " vs " +
                      std::to_string(end_.size()));
  }
  degenerate_ = start_ == end_;
}

Distribution MixturePath::at(double t) const
{
  if (!(t >= 0.0 && t <= 1.0))
  {
    throw DomainError("mixture parameter t must lie in [0,1]");
  }
  if (t == 0.0 || degenerate_)
  {
    return start_;
  }
  if (t == 1.0)
  {
    return end_;
  }
  // (1-t) p + t q rather than p + t (q-p): swapping the endpoints and
  // replacing t by 1-t then yields bitwise identical masses.
  double const   s = 1.0 - t;
  std::vector<double> r(size());
  for (std::size_t i = 0; i < r.size(); ++i)
  {
    r[i] = s * start_[i] + t * end_[i];
  }
  return Distribution(Distribution::Trusted{}, std::move(r));
}

MixturePath MixturePath::truncated(double t) const
{
  return MixturePath(start_, at(t));
}

Distribution new_distribution(std::vector<double> masses)
{
  return Distribution(std::move(masses));
}

Distribution mixture(MixturePath const &path, double t)
{
  return path.at(t);
}

double unit_interval(std::mt19937_64 &engine)
{
  return static_cast<double>((engine() >> 11) + 1) * 0x1.0p-53;
}

Distribution random_distribution(std::size_t n, std::mt19937_64 &engine, double min_mass)
{
  if (n < 2)
  {
    throw DomainError("support size must be at least 2");
  }
  if (!(min_mass > 0.0) || !(min_mass * static_cast<double>(n) < 1.0))
  {
    throw DomainError("min_mass must satisfy 0 < min_mass < 1/n");
  }
  std::vector<double> w(n);
  double              total = 0.0;
  for (double &x : w)
  {
    x = -std::log(unit_interval(engine));
    total += x;
  }
  double const free_mass = 1.0 - min_mass * static_cast<double>(n);
  for (double &x : w)
  {
    x = min_mass + free_mass * (total > 0.0 ? x / total : 1.0 / static_cast<double>(n));
  }
  // Skips renormalization so the floor holds exactly; the sum is 1 up to
  // rounding.
  return Distribution(Distribution::Trusted{}, std::move(w));
}

Distribution random_distribution(std::size_t n, std::uint64_t seed, double min_mass)
{
  std::mt19937_64 engine(seed);
  return random_distribution(n, engine, min_mass);
}

double total_variation(Distribution const &p, Distribution const &q)
{
  if (p.size() != q.size())
  {
    throw DomainError("support size mismatch");
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    tv += std::abs(p[i] - q[i]);
  }
  return 0.5 * tv;
}

}  // namespace divseq
