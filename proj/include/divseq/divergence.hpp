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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace divseq {

/// Which argument a divergence is convex in.
enum class Orientation
{
  RightConvex,
  LeftConvex,
};

using Evaluator = std::function<double(Distribution const &, Distribution const &)>;

/// d/dt of a divergence along a mixture path at parameter t.
using PathDerivative = std::function<double(MixturePath const &, double)>;

/// Generator of an f-divergence sum_i q_i f(p_i / q_i). f must be strictly
/// convex on (0, inf) with f(1) = 0.
struct FDivergenceSpec
{
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
};

/// Generator of a Bregman divergence sum_i F(p_i) - F(q_i) - F'(q_i)(p_i - q_i).
struct BregmanSpec
{
  std::function<double(double)> F;
  std::function<double(double)> F_prime;
};

/// An evaluable divergence D(P||Q) with an orientation tag.
///
/// Two optional derivative providers are carried so that swapping arguments
/// keeps analytic derivatives: `along_second` gives d/dt D(P||R(t)) and
/// `along_first` gives d/dt D(R(t)||P), both for R(t) on the path P -> Q.
/// A differentiable functional without a provider is differentiated by
/// finite differences.
class DivergenceFunctional
{
public:
  DivergenceFunctional(std::string name, Orientation orientation, Evaluator evaluator,
                       bool differentiable, PathDerivative along_second = {},
                       PathDerivative along_first = {});

  std::string const &name() const noexcept
  {
    return name_;
  }
  Orientation orientation() const noexcept
  {
    return orientation_;
  }
  bool differentiable() const noexcept
  {
    return differentiable_;
  }
  bool has_analytic_derivative() const noexcept
  {
    return static_cast<bool>(along_second_);
  }

  /// D(P||Q). Throws DomainError on support mismatch.
  double operator()(Distribution const &p, Distribution const &q) const;

  PathDerivative const &derivative_along_second() const noexcept
  {
    return along_second_;
  }
  PathDerivative const &derivative_along_first() const noexcept
  {
    return along_first_;
  }

private:
  std::string    name_;
  Orientation    orientation_;
  Evaluator      evaluator_;
  bool           differentiable_;
  PathDerivative along_second_;
  PathDerivative along_first_;
};

double evaluate(DivergenceFunctional const &d, Distribution const &p, Distribution const &q);

/// Right-convex functional sum_i q_i f(p_i/q_i) with the chain-rule path
/// derivative. Throws SpecError if f(1) != 0, f is not midpoint convex on a
/// log grid over (0.01, 100), or f_prime disagrees with f.
DivergenceFunctional make_f_divergence(FDivergenceSpec spec, std::string name = "f_divergence");

/// Left-convex Bregman functional. D(P||R(t)) is differentiated by finite
/// differences; the first-argument provider d/dt D(R(t)||P) is analytic, so
/// the swapped functional carries an analytic path derivative.
/// Throws SpecError if the supporting-line inequality
/// F(x) >= F(y) + F'(y)(x - y) fails on the sampling grid.
DivergenceFunctional make_bregman(BregmanSpec spec, std::string name = "bregman");

/// D^(P||Q) = D(Q||P), with the orientation flipped. An involution.
DivergenceFunctional swap_orientation(DivergenceFunctional const &d);

/// d/dt D(P||R(t)). Uses the analytic provider when present, otherwise a
/// Richardson-refined central difference with step cbrt(eps) max(t, 0.1),
/// switching to second-order one-sided stencils near t = 0 and t = 1.
/// Throws DomainError if `d` is not differentiable or t is outside [0,1].
double path_derivative(DivergenceFunctional const &d, MixturePath const &path, double t);

/// Derivative on [0,1] from an increment oracle delta(a, b) = F(b) - F(a),
/// with the same stencil rules as path_derivative. Callers that can compute
/// increments without cancellation (e.g. by integrating) get the full
/// benefit of the stencil.
double differentiate_on_unit_interval(std::function<double(double, double)> const &delta,
                                      double t);

/// "kl", "reverse_kl", "chi2", "jeffreys", "hellinger2". Throws DomainError
/// for an unknown identifier.
DivergenceFunctional named_divergence(std::string_view id);

std::vector<std::string> named_divergence_ids();

namespace named {

/// KL(P||Q) = sum p log(p/q).
DivergenceFunctional kl();
/// KL(Q||P).
DivergenceFunctional reverse_kl();
/// Neyman chi^2(P||Q) = sum (q - p)^2 / q.
DivergenceFunctional chi2();
/// J(P,Q) = KL(P||Q) + KL(Q||P).
DivergenceFunctional jeffreys();
/// Hel^2(P,Q) = 1/2 sum (sqrt q - sqrt p)^2.
DivergenceFunctional hellinger2();

}  // namespace named

}  // namespace divseq
