// Copyright 2026 The locc-discrim Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
  public:
    using Error::Error;
};

class NoConvergence : public Error {
  public:
    using Error::Error;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

/// Malformed input file or missing fields.
class ParseError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Raised when a family fails the orthonormality check. Carries the worst
/// offending pair (0-based) and |<psi_first, psi_second>|.
class NotOrthonormal : public Error {
  public:
    NotOrthonormal(const std::string &what, std::size_t first,
                   std::size_t second, double overlap)
        : Error(what), first_(first), second_(second), overlap_(overlap) {}

    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }
    double overlap() const { return overlap_; }

  private:
    std::size_t first_;
    std::size_t second_;
    double overlap_;
};

class NotUnit : public Error {
  public:
    using Error::Error;
};

class PreconditionViolated : public Error {
  public:
    using Error::Error;
};

class TargetOutsideRange : public Error {
  public:
    using Error::Error;
};

class BasisNotVerified : public Error {
  public:
    using Error::Error;
};

/// N >= 4 (no convexity guarantee) or N = 0 where a nonempty K is needed.
class UnsupportedRegime : public Error {
  public:
    using Error::Error;
};

} // namespace locc
