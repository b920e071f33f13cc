// Copyright 2026 The lzgate Authors
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

namespace lzgate {

/// Raised when an argument lies outside the domain of an operation
/// (zero detuning in the adiabatic frame, non-positive coupling, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Raised when an iterative procedure (step halving, root bracketing,
/// Newton refinement) fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A physical design constraint was violated (leakage budget, adiabatic
/// threshold of a designed endpoint).
class DesignError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw DomainError(message);
    }
}

}  // namespace detail

}  // namespace lzgate
