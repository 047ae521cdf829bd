// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIRAC2D_ERRORS_HPP
#define DIRAC2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirac2d {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// quantum_numbers
class InvalidKappa : public Error {
public:
    using Error::Error;
};
class ForbiddenNegativeKappa : public Error {
public:
    using Error::Error;
};
class MuMismatch : public Error {
public:
    using Error::Error;
};

// polyexp
class IncompatibleBeta : public Error {
public:
    using Error::Error;
};
class NonIntegerGammaGap : public Error {
public:
    using Error::Error;
};
class DivergentIntegral : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};

// spectrum
class SupercriticalCharge : public Error {
public:
    using Error::Error;
};

// magnetic
class NotApplicable : public Error {
public:
    using Error::Error;
};
class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

// grid_oracle
class NoEigenvalueNear : public Error {
public:
    using Error::Error;
};
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

} // namespace dirac2d

#endif
