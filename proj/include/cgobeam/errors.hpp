// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cgo {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point violated a domain guard (axis exclusion, annulus bounds, branch
/// restrictions).  The message names the violated constraint.
struct DomainError : Error {
  using Error::Error;
};

/// A field produced a non-finite value at a stencil point.
struct EvalError : Error {
  using Error::Error;
};

/// Invalid construction parameters (tau = 0, rho >= tau, ...).
struct ParamError : Error {
  using Error::Error;
};

/// Medium profile is non-physical at an evaluation point (Re mu <= 0, ...).
struct MediumError : Error {
  using Error::Error;
};

/// File I/O failure; message carries destination and cause.
struct IoError : Error {
  using Error::Error;
};

}  // namespace cgo
