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

namespace divseq {

/// Accuracy and work limits for adaptive quadrature.
struct QuadratureConfig
{
  double      rel_tol          = 1e-10;
  double      abs_tol          = 1e-12;
  std::size_t max_subdivisions = 2000;

  /// Throws DomainError unless rel_tol, abs_tol > 0 and max_subdivisions >= 10.
  void validate() const;
};

struct QuadratureResult
{
  double      value           = 0.0;
  double      estimated_error = 0.0;
  std::size_t evaluations     = 0;
};

using Integrand = std::function<double(double)>;

/// Single 15-point Gauss-Kronrod panel with the QUADPACK error estimate.
QuadratureResult gauss_kronrod15(Integrand const &f, double a, double b);

/// Globally adaptive Gauss-Kronrod quadrature: bisects the panel with the
/// largest error estimate until the summed estimate is at most
/// max(abs_tol, rel_tol |I|). The integrand is never evaluated at a or b.
/// Throws ToleranceError when max_subdivisions is exhausted.
QuadratureResult integrate(Integrand const &f, double a, double b,
                           QuadratureConfig const &cfg = {});

}  // namespace divseq
