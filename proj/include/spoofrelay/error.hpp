// Copyright 2026 The spoofrelay Authors
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

#ifndef SPOOFRELAY_ERROR_HPP
#define SPOOFRELAY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spoofrelay {

// All library failures derive from Error. The C API maps each subclass onto
// one sr_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Relay control exceeds the eavesdropper's power budget.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Malformed scenario / config document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant, e.g. a root bracket that the case analysis
// guarantees but the evaluated closed forms do not deliver.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spoofrelay

#endif  // SPOOFRELAY_ERROR_HPP
