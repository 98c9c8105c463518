// Copyright 2026 The convexcomp Authors
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

namespace convexcomp {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A generator does not evaluate to 1 on the unit effect.
struct NormalizationError : Error {
  using Error::Error;
};

/// Generators fail to linearly span the ambient space.
struct DegenerateSpanError : Error {
  using Error::Error;
};

/// An argument is outside the operation's domain (empty party list, n = 0, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A point offered as a state is not in its space's convex hull.
struct MembershipError : Error {
  using Error::Error;
};

/// The simple-element basis is linearly dependent (a party invariant was violated).
struct RankDeficiencyError : Error {
  using Error::Error;
};

/// Vertex enumeration was asked for an unbounded polyhedron.
struct UnboundedPolyhedronError : Error {
  using Error::Error;
};

/// Malformed file input; the message names the offending field.
struct ParseError : Error {
  using Error::Error;
};

/// An internal invariant failed (certificate did not re-verify, ...). CLI exit 3.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace convexcomp
