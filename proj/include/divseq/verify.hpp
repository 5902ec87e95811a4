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

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace divseq {

/// Outcome of one property over an instance family.
struct PropertyCheck
{
  std::string name;
  std::string paper_anchor;  ///< statement being checked
  std::size_t instances       = 0;
  double      worst_violation = 0.0;
  double      tolerance       = 0.0;
  bool        passed          = true;
  std::string diagnostic;  ///< set when a numerical error aborted the check
};

struct VerificationReport
{
  std::uint64_t              seed = 0;
  std::vector<PropertyCheck> checks;
  bool                       all_passed = true;
};

/// Randomized (P, Q, t) instance.
struct Instance
{
  Distribution p;
  Distribution q;
  double       t;
};

/// Deterministic instance family: support sizes 2..10, masses floored at
/// 0.01, t alternating between the grid {0, 0.1, ..., 1} and uniform
/// draws, and every tenth instance degenerate (Q = P).
class InstanceSampler
{
public:
  static constexpr double kMinMass = 0.01;

  InstanceSampler(std::uint64_t seed, std::uint64_t stream);

  Instance     next();
  Distribution distribution(std::size_t n);
  double       uniform();

private:
  std::mt19937_64 engine_;
  std::size_t     drawn_ = 0;
};

/// Strictness margin for "strictly increasing" and "strictly positive".
inline constexpr double kStrictMargin = 1e-12;
/// Instances with total variation below this are exempt from strictness.
inline constexpr double kSeparationFloor = 0.01;

// Each check throws DomainError if `d` violates its precondition (right-
// convex, and differentiable where an inverse operator is involved).

/// Divergence axioms, right convexity, midpoint convexity of t -> D(P||R(t)).
std::vector<PropertyCheck> check_divergence(DivergenceFunctional const &d, std::size_t instances,
                                            std::uint64_t seed);

/// D >= Psi[D] >= 0, right convexity of Psi[D], strict increase in t.
std::vector<PropertyCheck> check_theorem1(DivergenceFunctional const &d, std::size_t instances,
                                          std::uint64_t seed);

/// Nonincreasing chain Psi^0..Psi^depth, strict increase of each level in t,
/// and agreement with PL_k / SL_k for chi2 / jeffreys.
std::vector<PropertyCheck> check_theorem2(DivergenceFunctional const &d, int depth,
                                          std::size_t instances, std::uint64_t seed);

/// Psi^-1[D] >= D >= Psi[D], strict increase of Psi^-1[D] and of D, analytic
/// vs finite-difference derivatives, and the Hellinger closed forms.
std::vector<PropertyCheck> check_theorem3(DivergenceFunctional const &d, std::size_t instances,
                                          std::uint64_t seed);

/// Psi and Psi^-1 along P -> Q at t* equal their values along P -> R(t*) at 1.
PropertyCheck check_lemma1(DivergenceFunctional const &d, std::size_t instances, std::uint64_t seed);

/// Psi^-1[Psi[D]] = Psi[Psi^-1[D]] = D.
PropertyCheck check_roundtrip(DivergenceFunctional const &d, std::size_t instances, std::uint64_t seed);

/// PL_k and SL_k chains, their operator identities and right convexity.
std::vector<PropertyCheck> check_sequences(std::size_t instances, std::uint64_t seed);

/// Strategy agreement, recurrence, sign and monotonicity of Li_k.
std::vector<PropertyCheck> check_polylog();

/// Supporting-line inequality and derivative monotonicity of the shipped
/// Bregman generators.
PropertyCheck check_supporting_line(std::size_t instances, std::uint64_t seed);

/// The suite's divergence set: chi2, kl, reverse KL (Bregman KL through the
/// swap adapter), jeffreys, hellinger2, triangular discrimination (generic
/// f-divergence) and swapped Itakura-Saito (generic Bregman).
std::vector<DivergenceFunctional> suite_divergences();

/// Runs every check. Deterministic given (seed, instances).
VerificationReport run_suite(std::uint64_t seed, std::size_t instances);

/// {"seed", "checks": [{"name", "paper_anchor", "instances",
/// "worst_violation", "tolerance", "passed"}], "all_passed"}. Non-finite
/// violations serialize as null, with a "diagnostic" string.
std::string report_to_json(VerificationReport const &report);

}  // namespace divseq
