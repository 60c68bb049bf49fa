// Copyright 2026 The Supercat Authors
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

namespace supercat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad entries, bad normalization, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

class NegativeEntry : public InputError {
 public:
  using InputError::InputError;
};

class NotNormalized : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed input that does not satisfy an operation's preconditions.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class EmptyCatalystSet : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class NotACatalyst : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class InvalidConfiguration : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class ZeroDenominator : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// eps outside the range where the family consists of ordered Schmidt vectors.
class InvalidEpsilon : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

}  // namespace supercat
