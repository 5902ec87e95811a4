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

#include <stdexcept>
#include <string>

namespace divseq {

/// Input outside the mathematical domain of an operation (zero masses,
/// support mismatch, t outside [0,1], z >= 1, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// A user-supplied generator (f for an f-divergence, F for a Bregman
/// divergence) failed its validation sampling.
class SpecError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical scheme could not reach its requested accuracy.
class ToleranceError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace divseq
