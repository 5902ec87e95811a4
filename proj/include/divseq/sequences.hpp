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

namespace divseq {

enum class SequenceFamily
{
  PL,
  SL,
};

/// PL_k(P||Q) = sum_i p_i Li_k(1 - q_i/p_i). PL_0 is Neyman chi^2 and PL_1
/// is KL. Throws DomainError for k < 0 or a support mismatch.
double pl(int k, Distribution const &p, Distribution const &q);

/// SL_0 = J(P,Q); SL_k = J(P,Q) - sum_{j=1..k} PL_j(P||Q). SL_1 is KL(Q||P).
double sl(int k, Distribution const &p, Distribution const &q);

double sequence_value(SequenceFamily family, int k, Distribution const &p, Distribution const &q);

/// Closed form of t d/dt Hel^2(P, R(t)):
/// Hel^2(P,R) + 1/2 sum (sqrt r - sqrt p)^2 sqrt(p/r).
double hellinger_psi_inverse(Distribution const &p, Distribution const &q, double t);

/// Closed form of int_0^t Hel^2(P, R(s)) / s ds:
/// 2 Hel^2(P,R) + 2 sum p log((sqrt p + sqrt r) / (2 sqrt p)).
double hellinger_psi(Distribution const &p, Distribution const &q, double t);

}  // namespace divseq
