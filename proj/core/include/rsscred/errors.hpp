// Copyright 2026 The rsscred Authors.
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

namespace rsscred {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value violates an operation's precondition
// (zero message count, length mismatch, index out of range, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Serialized material was produced by a different group backend.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

// Malformed byte encoding (bad length, non-canonical field element,
// point not in the prime-order subgroup, wrong magic).
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Credential document could not be mapped to an attribute list.
class CodecError : public Error {
 public:
  using Error::Error;
};

// A signature failed verification where a valid one was required, e.g. an
// issuer signature handed to redaction.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// An internal invariant was violated. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Benchmark configuration rejected.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rsscred
