// Copyright 2026 The semirel Authors. All Rights Reserved.
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

namespace semirel {

/// Base class for all errors raised by the solvers.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (r <= 0, t < 0, ...).
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// The operator has no discrete eigenvalue below the continuum threshold.
class NoBoundState : public Error
{
  public:
    using Error::Error;
};

/// Grid or basis refinement failed to reach the requested agreement.
class NonConvergence : public Error
{
  public:
    using Error::Error;
};

/// Requested coupling lies outside the span of the parametric Gaussian curve.
class CouplingOutOfRange : public Error
{
  public:
    using Error::Error;
};

/// Malformed configuration input. Carries the 1-based line number when known.
class ConfigError : public Error
{
  public:
    ConfigError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {
    }

    int line() const noexcept { return line_; }

  private:
    int line_;
};

}  // namespace semirel
