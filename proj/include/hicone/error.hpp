// Copyright 2026 The hicone Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hicone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (index out of range,
/// degenerate input, field too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Polynomial text could not be parsed. `position()` is the byte offset
/// into the input where the problem was detected.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The point handed to a local construction is singular on the hypersurface.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A theorem hypothesis (parameter range) is not met and the caller did not
/// ask for permissive evaluation.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configurable computation budget ran out. Never a wrong answer.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace hicone
