// Copyright 2026 The twoset Authors
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

namespace twoset {

/// Operand sizes disagree (qubit counts, vector lengths).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the operation's domain (n < 2, p outside [0,1], ...).
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A numerical guard tripped, e.g. a non-negligible imaginary expectation.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs are individually valid but inconsistent with each other.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text or file input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twoset
