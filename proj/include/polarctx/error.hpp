// Copyright 2026 The polarctx Authors
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

namespace polarctx {

/// Malformed textual input (observable strings, JSON records, CLI values).
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operands with mismatched qubit counts.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A request that is well formed but outside what the library will compute
/// (qubit count too large, coset walk over budget, ...).
class CapabilityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Generic invalid argument: identity where a point is required, empty
/// configurations handed to the solver, parameters out of range.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace polarctx
