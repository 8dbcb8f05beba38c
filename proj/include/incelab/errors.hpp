// Copyright 2026 The incelab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace incelab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define INCELAB_DEFINE_ERROR(Name)         \
    class Name : public Error {            \
       public:                             \
        using Error::Error;                \
    }

/// Mode indices violate 0 <= m <= p, p - m even, or odd parity with m = 0.
INCELAB_DEFINE_ERROR(InvalidIndices);
INCELAB_DEFINE_ERROR(NegativeEllipticity);
/// A hyperbolic series term left the floating range.
INCELAB_DEFINE_ERROR(Overflow);
/// Elliptic coordinates requested with coincident foci (f0 = 0).
INCELAB_DEFINE_ERROR(DegenerateFoci);
INCELAB_DEFINE_ERROR(GridMismatch);
/// Grid doubling did not settle an overlap within tolerance.
INCELAB_DEFINE_ERROR(NonConvergence);
INCELAB_DEFINE_ERROR(NormViolation);
INCELAB_DEFINE_ERROR(DimensionMismatch);
INCELAB_DEFINE_ERROR(RangeError);
/// A two-level subspace carries (numerically) no population.
INCELAB_DEFINE_ERROR(ZeroWeight);
/// Density matrix is not Hermitian, unit-trace and positive semidefinite.
INCELAB_DEFINE_ERROR(InvalidState);
/// A density-matrix file could not be parsed.
INCELAB_DEFINE_ERROR(MalformedStateFile);
INCELAB_DEFINE_ERROR(InvalidArgument);

#undef INCELAB_DEFINE_ERROR

}  // namespace incelab
