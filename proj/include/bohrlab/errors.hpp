// Copyright (c) 2026 The bohrlab authors
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

#ifndef BOHRLAB_ERRORS_HPP
#define BOHRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bohrlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Composition requested with an inner series whose constant term is nonzero.
struct NonzeroInnerConstant : Error {
  using Error::Error;
};

/// Majorant evaluation radius outside [0, 1).
struct RadiusOutOfRange : Error {
  using Error::Error;
};

/// Caratheodory check on a series whose constant term is not 1.
struct NotNormalized : Error {
  using Error::Error;
};

/// Disk-automorphism parameter with |b| >= 1.
struct ParameterOutOfDisk : Error {
  using Error::Error;
};

/// Constant term lies outside the requested codomain.
struct OutsideCodomain : Error {
  using Error::Error;
};

/// Radius solver found no sign change to bracket.
struct NoBracket : Error {
  using Error::Error;
};

/// Sharpness scan exhausted its grid without a violation.
struct NoViolationFound : Error {
  using Error::Error;
};

/// A nonzero vector was required.
struct ZeroVector : Error {
  using Error::Error;
};

}  // namespace bohrlab

#endif  // BOHRLAB_ERRORS_HPP
