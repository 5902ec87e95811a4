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

#include "divseq/quadrature.hpp"

#include "divseq/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace divseq {

namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel
{
  double a;
  double b;
  double value;
  double error;

  bool operator<(Panel const &other) const
  {
    return error < other.error;
  }
};

}  // namespace

void QuadratureConfig::validate() const
{
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
  {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (max_subdivisions < 10)
  {
    throw DomainError("max_subdivisions must be at least 10");
  }
}

QuadratureResult gauss_kronrod15(Integrand const &f, double a, double b)
{
  double const center = 0.5 * (a + b);
  double const half   = 0.5 * (b - a);

  double const fc      = f(center);
  double       kronrod = fc * kKronrodWeights[7];
  double       gauss   = fc * kGaussWeights[3];
  double       abs_sum = std::abs(kronrod);

  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  for (std::size_t j = 0; j < 7; ++j)
  {
    double const dx = half * kNodes[j];
    f_left[j]       = f(center - dx);
    f_right[j]      = f(center + dx);
    double const s  = f_left[j] + f_right[j];
    kronrod += kKronrodWeights[j] * s;
    abs_sum += kKronrodWeights[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
    if (j % 2 == 1)
    {
      gauss += kGaussWeights[j / 2] * s;
    }
  }

  double const mean = 0.5 * kronrod;
  double       asc  = kKronrodWeights[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j)
  {
    asc += kKronrodWeights[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));
  }

  double const width = std::abs(half);
  double       err   = std::abs((kronrod - gauss) * half);
  asc *= width;
  abs_sum *= width;
  if (asc != 0.0 && err != 0.0)
  {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps))
  {
    err = std::max(50.0 * eps * abs_sum, err);
  }

  QuadratureResult out;
  out.value           = kronrod * half;
  out.estimated_error = err;
  out.evaluations     = 15;
  return out;
}

QuadratureResult integrate(Integrand const &f, double a, double b, QuadratureConfig const &cfg)
{
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b))
  {
    throw DomainError("integration limits must be finite");
  }
  if (a == b)
  {
    return {};
  }
  if (a > b)
  {
    QuadratureResult r = integrate(f, b, a, cfg);
    r.value            = -r.value;
    return r;
  }

  std::vector<Panel> heap;
  heap.reserve(cfg.max_subdivisions + 1);

  QuadratureResult const first = gauss_kronrod15(f, a, b);
  std::size_t            evals = first.evaluations;
  heap.push_back({a, b, first.value, first.estimated_error});

  double const min_width = 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));

  for (;;)
  {
    double total = 0.0;
    double error = 0.0;
    for (Panel const &p : heap)
    {
      total += p.value;
      error += p.error;
    }
    if (!std::isfinite(total))
    {
      throw ToleranceError("integrand produced a non-finite value");
    }
    if (error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))
    {
      return {total, error, evals};
    }
    if (heap.size() >= cfg.max_subdivisions)
    {
      throw ToleranceError("adaptive quadrature exhausted " + std::to_string(cfg.max_subdivisions) +
                           " subdivisions (estimated error " + std::to_string(error) + ")");
    }

    std::pop_heap(heap.begin(), heap.end());
    Panel const worst = heap.back();
    heap.pop_back();
    if (worst.b - worst.a <= min_width)
    {
      throw ToleranceError("adaptive quadrature hit the roundoff limit");
    }

    double const           mid   = 0.5 * (worst.a + worst.b);
    QuadratureResult const left  = gauss_kronrod15(f, worst.a, mid);
    QuadratureResult const right = gauss_kronrod15(f, mid, worst.b);
    evals += left.evaluations + right.evaluations;

    heap.push_back({worst.a, mid, left.value, left.estimated_error});
    std::push_heap(heap.begin(), heap.end());
    heap.push_back({mid, worst.b, right.value, right.estimated_error});
    std::push_heap(heap.begin(), heap.end());
  }
}

}  // namespace divseq
