// Copyright 2026 The zxmin Authors
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

namespace zxmin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential composition of diagrams whose boundary counts disagree.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A diagram broke one of its structural invariants (degree, boundary lists).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed diagram or derivation document. `where` is a JSON-pointer-like
/// location such as "/vertices/3/phase".
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class ContractionCapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownRule : public Error {
 public:
  using Error::Error;
};

/// A match no longer fits the diagram it is being applied to.
class StaleMatch : public Error {
 public:
  using Error::Error;
};

}  // namespace zxmin
