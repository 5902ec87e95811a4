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

#include "divseq/sequences.hpp"

#include "divseq/divergence.hpp"
#include "divseq/errors.hpp"
#include "divseq/polylog.hpp"

#include <cmath>
#include <string>

namespace divseq {

namespace {

void check_pair(int k, Distribution const &p, Distribution const &q)
{
  if (k < 0)
  {
    throw DomainError("sequence order must be nonnegative");
  }
  if (p.size() != q.size())
  {
    throw DomainError("support size mismatch: " + std::to_string(p.size()) + " vs " +
                      std::to_string(q.size()));
  }
}

}  // namespace

double pl(int k, Distribution const &p, Distribution const &q)
{
  check_pair(k, p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    // 1 - q/p, written to avoid cancellation when q is close to p
    double const z = (p[i] - q[i]) / p[i];
    s += p[i] * polylog(k, z);
  }
  return s;
}

double sl(int k, Distribution const &p, Distribution const &q)
{
  check_pair(k, p, q);
  double value = named::jeffreys()(p, q);
  for (int j = 1; j <= k; ++j)
  {
    value -= pl(j, p, q);
  }
  return value;
}

double sequence_value(SequenceFamily family, int k, Distribution const &p, Distribution const &q)
{
  return family == SequenceFamily::PL ? pl(k, p, q) : sl(k, p, q);
}

double hellinger_psi_inverse(Distribution const &p, Distribution const &q, double t)
{
  Distribution const r = MixturePath(p, q).at(t);
  double             s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    double const sp   = std::sqrt(p[i]);
    double const sr   = std::sqrt(r[i]);
    double const gap2 = (sr - sp) * (sr - sp);
    s += 0.5 * gap2 + 0.5 * gap2 * sp / sr;
  }
  return s;
}

double hellinger_psi(Distribution const &p, Distribution const &q, double t)
{
  Distribution const r = MixturePath(p, q).at(t);
  double             s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    double const sp = std::sqrt(p[i]);
    double const sr = std::sqrt(r[i]);
    // (sp + sr) / (2 sp) = 1 + (sr - sp) / (2 sp)
    s += (sr - sp) * (sr - sp) + 2.0 * p[i] * std::log1p((sr - sp) / (2.0 * sp));
  }
  return s;
}

}  // namespace divseq
