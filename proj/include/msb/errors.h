// Copyright 2026 The Authors.
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

#ifndef MSB_ERRORS_H_
#define MSB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace msb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (index out of range, bad sizes).
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// Exhaustive oracles refuse ground sets that would blow up.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Bisection or iterative routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Incompatible policy/constraint combination or invalid configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// No feasible nonempty action exists.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// LocalSearch exceeded its safety cap on accepted moves.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace msb

#endif  // MSB_ERRORS_H_
