// Copyright 2026 The cnotcal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cnotcal {

/// A precondition of a numerical routine was violated by its input
/// (non-unitary gate, non-skew-Hermitian generator, malformed options).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base class for errors that stem from the physics rather than from
/// programming mistakes. The CLI maps these to exit status 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two-step gate time has no real solution: |delta| > 2g.
class DetuningOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The single-step sequence is only defined for capacitive coupling.
class UnsupportedCoupling : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The Frobenius-based fidelity radicand went negative.
class FidelityUndefined : public DomainError {
 public:
  explicit FidelityUndefined(double radicand)
      : DomainError("fidelity undefined: radicand " + std::to_string(radicand) +
                    " < 0"),
        radicand_(radicand) {}

  double radicand() const noexcept { return radicand_; }

 private:
  double radicand_;
};

}  // namespace cnotcal
