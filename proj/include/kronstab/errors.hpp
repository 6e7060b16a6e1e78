// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace kronstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (partition grammar, value lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments violate a documented precondition (size balance and similar).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded; the job is refused up front.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced something impossible (non-integral
/// multiplicity, negative dimension). Always a bug, never bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace kronstab
