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

#include "divseq/distribution.hpp"
#include "divseq/divergence.hpp"
#include "divseq/quadrature.hpp"

#include <span>
#include <utility>
#include <vector>

namespace divseq {

using OperatorResult = QuadratureResult;

/// Integral operator: int_0^t D(P||R(s)) / s ds along `path`.
///
/// The integrand is taken as 0 at s = 0 (D(P||R(s)) vanishes to second
/// order there). A degenerate path or t = 0 returns 0 without quadrature.
/// Throws DomainError for t outside [0,1] and ToleranceError if the
/// quadrature cannot meet `cfg`.
OperatorResult psi(DivergenceFunctional const &d, MixturePath const &path, double t,
                   QuadratureConfig const &cfg = {});

/// Differential operator: t d/dt D(P||R(t)). Returns 0 at t = 0.
double psi_inverse(DivergenceFunctional const &d, MixturePath const &path, double t);

/// Rows 0..k of Psi^j[D](P||R(t)) over `t_grid`.
///
/// Row 0 is evaluated directly. Each later row integrates a Chebyshev
/// interpolant of the previous level, so the cost grows linearly in k
/// instead of as a k-fold nested quadrature. Row j+1 is sampled at the
/// Lobatto nodes by accumulating panel integrals between consecutive nodes
/// and the node count doubles until the interpolation residual is below
/// cfg.abs_tol.
std::vector<std::vector<double>> psi_iter(DivergenceFunctional const &d, int k,
                                          MixturePath const &path, std::span<double const> t_grid,
                                          QuadratureConfig const &cfg = {});

/// (Psi^-1[Psi[D]](t), Psi[Psi^-1[D]](t)); both should reproduce D(P||R(t)).
///
/// The first component differentiates Psi[D] with the path_derivative
/// stencils, computing each increment directly by quadrature. The second
/// integrates psi_inverse_functional(D). Requires t in (0, 1].
std::pair<double, double> psi_roundtrip(DivergenceFunctional const &d, MixturePath const &path,
                                        double t, QuadratureConfig const &cfg = {});

/// Psi[D] as a divergence: (P, M) -> Psi[D] along P -> M at t = 1.
/// Keeps the orientation of `d` and is differentiable, with the derivative
/// computed from quadrature increments.
DivergenceFunctional psi_functional(DivergenceFunctional const &d, QuadratureConfig const &cfg = {});

/// Psi^-1[D] as a divergence: (P, M) -> Psi^-1[D] along P -> M at t = 1.
DivergenceFunctional psi_inverse_functional(DivergenceFunctional const &d);

}  // namespace divseq
