/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qdiscrim {

/// Base class for all qdiscrim errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A matrix required to be Hermitian deviates beyond tolerance.
struct NotHermitian : Error {
    using Error::Error;
};

/// An iterative solver exhausted its iteration budget.
struct NoConvergence : Error {
    using Error::Error;
};

/// A channel or grid parameter lies outside its admissible range.
struct ParameterOutOfRange : Error {
    using Error::Error;
};

/// A state fails the density-matrix requirements (Hermitian, unit trace, PSD).
struct InvalidState : Error {
    using Error::Error;
};

/// A Monte Carlo draw landed on a branch of essentially zero probability.
struct ZeroNormBranch : Error {
    using Error::Error;
};

/// A sweep grid specification is malformed.
struct InvalidGrid : Error {
    using Error::Error;
};

/// A user-supplied channel file is malformed or fails validation.
struct ChannelFormatError : Error {
    using Error::Error;
};

}  // namespace qdiscrim
