// Copyright 2026 The circq Authors
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

namespace circq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dimension argument is zero or otherwise unusable.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Operand shapes do not fit together (non-square, size mismatch, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// The input violates a mathematical precondition (not Hermitian, not a
// state, out-of-range index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The input is valid but sits on a degenerate point where the requested
// construction does not exist (e.g. a vanishing Bargmann invariant).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling ran out of attempts.
class SamplingError : public Error {
 public:
  using Error::Error;
};

// Serialized input is malformed (bad JSON, missing fields, wrong lengths).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace circq
