// Copyright 2026 The seqbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace seqbell {

/// Argument outside the mathematical domain of an operation (e.g. lambda > 1).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Caller broke a precondition on operator structure (non-Hermitian, not dichotomic, size mismatch).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operator dimension exceeds the configured maximum.
struct DimensionLimitError : std::length_error {
    using std::length_error::length_error;
};

/// A constructed object failed one of its invariants.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Observed values cannot come from any admissible quantum model
/// (empty certified interval, lambda solution outside [0, 1], value above the optimum).
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Observed value above what any quantum model can reach.
struct UnphysicalInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace seqbell
