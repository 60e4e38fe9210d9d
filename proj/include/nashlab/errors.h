// Copyright 2026 The nashlab Authors
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

#ifndef NASHLAB_ERRORS_H_
#define NASHLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace nashlab {

// Bad caller input: wrong shapes, out-of-range parameters, malformed files.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Profile or tensor shape does not match the game.
class DimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// The input is well formed but the mathematical precondition fails
// (degenerate game, oracle that is not what it claims to be, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that must hold by construction did not. Indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nashlab

#endif  // NASHLAB_ERRORS_H_
