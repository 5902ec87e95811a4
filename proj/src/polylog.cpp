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

#include "divseq/polylog.hpp"

#include "divseq/errors.hpp"
#include "divseq/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace divseq {

namespace {

constexpr double kSeriesRadius   = 0.95;
constexpr int    kMaxSeriesTerms = 10000;
constexpr double kTailBound      = 1e-15;

void check_argument(int k, double z, int min_order)
{
  if (k < min_order)
  {
    throw DomainError("polylog order must be >= " + std::to_string(min_order));
  }
  if (!(z < 1.0))
  {
    throw DomainError("polylog argument must satisfy z < 1");
  }
}

double factorial(int n)
{
  double f = 1.0;
  for (int i = 2; i <= n; ++i)
  {
    f *= i;
  }
  return f;
}

// Upper bound on z/Gamma(k) * int_X^inf x^(k-1) e^-x / (1 - z e^-x) dx,
// using Gamma(k, X) = (k-1)! e^-X sum_{j<k} X^j / j!.
double tail_bound(int k, double z, double x_cut)
{
  double term = 1.0;
  double sum  = 1.0;
  for (int j = 1; j < k; ++j)
  {
    term *= x_cut / j;
    sum += term;
  }
  double const e       = std::exp(-x_cut);
  double const denom   = z > 0.0 ? 1.0 - z * e : 1.0;
  return std::abs(z) * e * sum / denom;
}

QuadratureConfig polylog_quadrature()
{
  QuadratureConfig cfg;
  cfg.rel_tol          = 1e-13;
  cfg.abs_tol          = 1e-300;
  cfg.max_subdivisions = 4000;
  return cfg;
}

}  // namespace

double polylog_series(int k, double z)
{
  if (k < 0)
  {
    throw DomainError("polylog order must be >= 0");
  }
  if (!(std::abs(z) < 1.0))
  {
    throw DomainError("power series needs |z| < 1");
  }
  if (z == 0.0)
  {
    return 0.0;
  }
  double sum   = 0.0;
  double power = 1.0;
  for (int j = 1; j <= kMaxSeriesTerms; ++j)
  {
    power *= z;
    sum += power / std::pow(static_cast<double>(j), k);
    double const next = std::abs(power * z) / std::pow(static_cast<double>(j + 1), k);
    if (next < 1e-15 * std::abs(sum))
    {
      return sum;
    }
  }
  throw ToleranceError("polylog series did not converge within 10000 terms (k = " + std::to_string(k) +
                       ", z = " + std::to_string(z) + ")");
}

double polylog_integral(int k, double z)
{
  check_argument(k, z, 1);
  if (z == 0.0)
  {
    return 0.0;
  }
  double x_cut = std::max(1.0, static_cast<double>(k));
  while (tail_bound(k, z, x_cut) >= kTailBound)
  {
    x_cut += 1.0;
  }
  double const gap       = 1.0 - z;
  auto const   integrand = [k, gap](double x) {
    // e^x - z written as expm1(x) + (1 - z) to keep accuracy for z near 1
    return std::pow(x, k - 1) / (std::expm1(x) + gap);
  };
  QuadratureResult const r = integrate(integrand, 0.0, x_cut, polylog_quadrature());
  return z / factorial(k - 1) * r.value;
}

double polylog(int k, double z)
{
  check_argument(k, z, 0);
  if (z == 0.0)
  {
    return 0.0;
  }
  if (k == 0)
  {
    return z / (1.0 - z);
  }
  if (k == 1)
  {
    return -std::log1p(-z);
  }
  if (std::abs(z) <= kSeriesRadius)
  {
    return polylog_series(k, z);
  }
  return polylog_integral(k, z);
}

double polylog_recurrence_check(int k, double z)
{
  check_argument(k, z, 1);
  if (z == 0.0)
  {
    return 0.0;
  }
  auto const integrand = [k](double x) {
    // Li_k(x) = x + O(x^2)
    return x == 0.0 ? 1.0 : polylog(k, x) / x;
  };
  QuadratureConfig cfg = polylog_quadrature();
  cfg.rel_tol          = 1e-12;
  return integrate(integrand, 0.0, z, cfg).value;
}

}  // namespace divseq
