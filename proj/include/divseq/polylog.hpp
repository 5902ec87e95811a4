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

namespace divseq {

/// Real polylogarithm Li_k(z) for integer k >= 0 and z < 1.
///
/// k = 0 and k = 1 use the closed forms z/(1-z) and -log(1-z). For k >= 2
/// the power series is used when |z| <= 0.95 and the integral
/// representation otherwise. Relative accuracy target 1e-12.
/// Throws DomainError for k < 0 or z >= 1, ToleranceError if the chosen
/// strategy fails to converge.
double polylog(int k, double z);

/// sum_{j>=1} z^j / j^k for |z| < 1. Stops when the next term falls below
/// 1e-15 |partial sum|; throws ToleranceError after 10000 terms.
double polylog_series(int k, double z);

/// z / Gamma(k) * int_0^X x^(k-1) / (e^x - z) dx for k >= 1, z < 1, with X
/// chosen so the neglected tail is below 1e-15.
double polylog_integral(int k, double z);

/// Li_{k+1}(z) recomputed as int_0^z Li_k(x)/x dx by quadrature. Test
/// oracle for the other two strategies; k >= 1.
double polylog_recurrence_check(int k, double z);

}  // namespace divseq
