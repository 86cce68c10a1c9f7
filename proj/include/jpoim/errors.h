// Copyright 2026 The jpoim Authors
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

#ifndef JPOIM_ERRORS_H
#define JPOIM_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jpoim {

enum class ErrorKind {
    kInvalidArgument,
    kCapacity,
    kParse,
    kUnsupportedProblem,
    kDecode,
    kDivergence,
    kInfeasibleCalibration,
    kInsufficientData,
    kAmbiguousPhase,
    kNumerical,
    kIntegrationBlowup,
};

const char *error_kind_name(ErrorKind kind);

/// Base of every error raised by the library. The kind decides how the
/// command line front end reports it (validation vs numerical failure).
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

class InvalidArgument : public Error {
   public:
    explicit InvalidArgument(const std::string &message) : Error(ErrorKind::kInvalidArgument, message) {
    }
};

class ParseError : public Error {
   public:
    explicit ParseError(const std::string &message) : Error(ErrorKind::kParse, message) {
    }
};

/// Raised when a physical readout breaks a plaquette constraint.
class DecodeError : public Error {
   public:
    DecodeError(std::size_t tile, const std::string &message)
        : Error(ErrorKind::kDecode, message), tile_(tile) {
    }
    std::size_t tile() const noexcept {
        return tile_;
    }

   private:
    std::size_t tile_;
};

/// Eigensolver did not reach the residual bound.
class NumericalError : public Error {
   public:
    NumericalError(const std::string &message, double residual, int iterations)
        : Error(ErrorKind::kNumerical, message), residual_(residual), iterations_(iterations) {
    }
    double residual() const noexcept {
        return residual_;
    }
    int iterations() const noexcept {
        return iterations_;
    }

   private:
    double residual_;
    int iterations_;
};

/// Langevin integration produced a non-finite amplitude.
class IntegrationBlowup : public Error {
   public:
    IntegrationBlowup(double t, double dt);
    double time() const noexcept {
        return t_;
    }
    double dt() const noexcept {
        return dt_;
    }

   private:
    double t_;
    double dt_;
};

}  // namespace jpoim

#endif  // JPOIM_ERRORS_H
