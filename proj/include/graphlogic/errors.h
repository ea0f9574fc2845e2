// Copyright 2026 The graphlogic Authors
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

#ifndef GRAPHLOGIC_ERRORS_H
#define GRAPHLOGIC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphlogic {

/// Bad argument to an operation: out-of-range vertex, non-positive size, etc.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `position()` is a 1-based line number for edge
/// lists and a 0-based character offset for formulas.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t position)
        : std::invalid_argument(message), position_(position) {
    }
    std::size_t position() const {
        return position_;
    }

   private:
    std::size_t position_;
};

/// A caller broke an operation's precondition (open formula passed to the
/// evaluator, impossible measurement branch forced, ...).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The request is well formed but exceeds a configured size or cost limit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace graphlogic

#endif  // GRAPHLOGIC_ERRORS_H
