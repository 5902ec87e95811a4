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

#include "divseq/operators.hpp"

#include "divseq/chebyshev.hpp"
#include "divseq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divseq {

namespace {

void check_t(double t)
{
  if (!(t >= 0.0 && t <= 1.0))
  {
    throw DomainError("t must lie in [0,1]");
  }
}

// s -> D(P||R(s)) / s, with the removable point at 0 set to 0.
Integrand psi_integrand(DivergenceFunctional const &d, MixturePath const &path)
{
  return [&d, &path](double s) { return s == 0.0 ? 0.0 : d(path.start(), path.at(s)) / s; };
}

// Values of int_0^{s_j} g(s)/s ds at ascending nodes s_0 = 0 < s_1 < ...
std::vector<double> cumulative_psi(ChebyshevInterpolant const &level, std::span<double const> nodes,
                                   QuadratureConfig const &cfg)
{
  QuadratureConfig panel_cfg = cfg;
  panel_cfg.abs_tol          = cfg.abs_tol / static_cast<double>(nodes.size());
  Integrand const integrand  = [&level](double s) { return s == 0.0 ? 0.0 : level(s) / s; };

  std::vector<double> out(nodes.size(), 0.0);
  for (std::size_t j = 1; j < nodes.size(); ++j)
  {
    out[j] = out[j - 1] + integrate(integrand, nodes[j - 1], nodes[j], panel_cfg).value;
  }
  return out;
}

}  // namespace

OperatorResult psi(DivergenceFunctional const &d, MixturePath const &path, double t,
                   QuadratureConfig const &cfg)
{
  check_t(t);
  cfg.validate();
  if (t == 0.0 || path.degenerate())
  {
    return {};
  }
  return integrate(psi_integrand(d, path), 0.0, t, cfg);
}

double psi_inverse(DivergenceFunctional const &d, MixturePath const &path, double t)
{
  check_t(t);
  if (!d.differentiable())
  {
    throw DomainError("divergence '" + d.name() + "' is not flagged differentiable");
  }
  if (t == 0.0 || path.degenerate())
  {
    return 0.0;
  }
  return t * path_derivative(d, path, t);
}

std::vector<std::vector<double>> psi_iter(DivergenceFunctional const &d, int k,
                                          MixturePath const &path, std::span<double const> t_grid,
                                          QuadratureConfig const &cfg)
{
  if (k < 0)
  {
    throw DomainError("operator depth must be nonnegative");
  }
  for (double t : t_grid)
  {
    check_t(t);
  }
  cfg.validate();

  std::size_t const                levels = static_cast<std::size_t>(k) + 1;
  std::vector<std::vector<double>> rows(levels, std::vector<double>(t_grid.size(), 0.0));
  if (path.degenerate())
  {
    return rows;
  }

  for (std::size_t i = 0; i < t_grid.size(); ++i)
  {
    rows[0][i] = d(path.start(), path.at(t_grid[i]));
  }
  if (k == 0)
  {
    return rows;
  }

  auto level = ChebyshevInterpolant::fit(
      [&](std::span<double const> nodes) {
        std::vector<double> v(nodes.size());
        for (std::size_t j = 0; j < nodes.size(); ++j)
        {
          v[j] = d(path.start(), path.at(nodes[j]));
        }
        return v;
      },
      cfg.abs_tol);

  for (std::size_t j = 1; j < levels; ++j)
  {
    Integrand const integrand = [&level](double s) { return s == 0.0 ? 0.0 : level(s) / s; };
    for (std::size_t i = 0; i < t_grid.size(); ++i)
    {
      rows[j][i] = t_grid[i] == 0.0 ? 0.0 : integrate(integrand, 0.0, t_grid[i], cfg).value;
    }
    if (j + 1 < levels)
    {
      level = ChebyshevInterpolant::fit(
          [&](std::span<double const> nodes) { return cumulative_psi(level, nodes, cfg); }, cfg.abs_tol);
    }
  }
  return rows;
}

std::pair<double, double> psi_roundtrip(DivergenceFunctional const &d, MixturePath const &path,
                                        double t, QuadratureConfig const &cfg)
{
  if (!(t > 0.0 && t <= 1.0))
  {
    throw DomainError("roundtrip needs t in (0,1]");
  }
  if (!d.differentiable())
  {
    throw DomainError("divergence '" + d.name() + "' is not flagged differentiable");
  }
  cfg.validate();
  if (path.degenerate())
  {
    return {0.0, 0.0};
  }

  Integrand const integrand = psi_integrand(d, path);
  double const    slope     = differentiate_on_unit_interval(
      [&](double a, double b) { return integrate(integrand, a, b, cfg).value; }, t);
  double const inverse_of_psi = t * slope;

  DivergenceFunctional const lifted         = psi_inverse_functional(d);
  double const               psi_of_inverse = psi(lifted, path, t, cfg).value;
  return {inverse_of_psi, psi_of_inverse};
}

DivergenceFunctional psi_functional(DivergenceFunctional const &d, QuadratureConfig const &cfg)
{
  Evaluator eval = [d, cfg](Distribution const &p, Distribution const &m) {
    return psi(d, MixturePath(p, m), 1.0, cfg).value;
  };
  // By path invariance, Psi[D](P||R(t)) = psi(D, path, t); its increments
  // are integrals of D(P||R(s))/s.
  PathDerivative along_second = [d, cfg](MixturePath const &path, double t) {
    if (path.degenerate())
    {
      return 0.0;
    }
    Integrand const integrand = psi_integrand(d, path);
    return differentiate_on_unit_interval(
        [&](double a, double b) { return integrate(integrand, a, b, cfg).value; }, t);
  };
  return DivergenceFunctional("psi(" + d.name() + ")", d.orientation(), std::move(eval), true,
                              std::move(along_second));
}

DivergenceFunctional psi_inverse_functional(DivergenceFunctional const &d)
{
  if (!d.differentiable())
  {
    throw DomainError("divergence '" + d.name() + "' is not flagged differentiable");
  }
  Evaluator eval = [d](Distribution const &p, Distribution const &m) {
    return psi_inverse(d, MixturePath(p, m), 1.0);
  };
  return DivergenceFunctional("psi_inverse(" + d.name() + ")", d.orientation(), std::move(eval), false);
}

}  // namespace divseq
