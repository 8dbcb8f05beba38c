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

// Measurement operators of a mode qubit obtained from sampled fields.
//
// A detector that filters the spatial mode g acts on the qubit spanned by
// IG+ and IG- as the projector onto sum_i <phi_i|g> |phi_i>. The amplitudes
// <phi_i|g> come from the quadrature inner product of rendered fields, so
// these operators tie the abstract two-qubit algebra to the optics.

#include <cmath>
#include <numbers>

#include "incelab/modefield.hpp"
#include "incelab/overlap.hpp"
#include "incelab/qstate.hpp"

namespace incelab {

class OpticalQubit {
   public:
    OpticalQubit(int p, int m, double ellipticity, const SamplingGrid &grid, double waist = 1.0)
        : p_(p), m_(m), ellipticity_(ellipticity), grid_(grid), waist_(waist),
          plus_(render_field(InceGaussMode({p, m, ellipticity, ModeKind::plus}, waist), grid, true)),
          minus_(render_field(InceGaussMode({p, m, ellipticity, ModeKind::minus}, waist), grid, true)) {}

    /// 2x2 matrix of <IG_i|IG_j> on the lattice; the identity up to quadrature error.
    Matrix gram() const {
        Matrix g(2, 2);
        g(0, 0) = inner_product(plus_, plus_);
        g(0, 1) = inner_product(plus_, minus_);
        g(1, 0) = inner_product(minus_, plus_);
        g(1, 1) = inner_product(minus_, minus_);
        return g;
    }

    /// Projector for the detection mode sqrt(a) e^{i phi} IG+ + sqrt(1-a) e^{-i phi} IG-.
    Matrix projector(double a, double phi) const {
        ModeSpec spec{p_, m_, ellipticity_, ModeKind::bloch, a, phi};
        const ComplexField g = render_field(InceGaussMode(spec, waist_), grid_, true);
        Vector ket(2);
        ket(0) = inner_product(plus_, g);
        ket(1) = inner_product(minus_, g);
        return ket * ket.adjoint();
    }

    Matrix equatorial(double phi) const { return projector(0.5, phi); }

    /// Difference of the two projectors measuring a Pauli axis (0 = x, 1 = y, 2 = z).
    /// Equatorial detection at azimuth phi sits at Bloch longitude -2 phi.
    Matrix pauli(int axis) const {
        constexpr double pi = std::numbers::pi;
        switch (axis) {
            case 0:
                return equatorial(0.0) - equatorial(pi / 2);
            case 1:
                return equatorial(3 * pi / 4) - equatorial(pi / 4);
            default:
                return projector(1.0, 0.0) - projector(0.0, 0.0);
        }
    }

   private:
    int p_;
    int m_;
    double ellipticity_;
    SamplingGrid grid_;
    double waist_;
    ComplexField plus_;
    ComplexField minus_;
};

/// Witness and steering value of a two-qubit state measured with optical
/// Pauli operators of the given qubit (both photons use the same modes).
struct OpticalCorrelators {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double witness() const { return 0.25 * (1.0 - xx - yy + zz); }
    double steering() const { return xx * xx + yy * yy + zz * zz; }
};

inline OpticalCorrelators optical_correlators(const BipartiteState &state, const OpticalQubit &qubit) {
    require_dims(state, 2, 2, "optical_correlators");
    OpticalCorrelators c;
    const Matrix x = qubit.pauli(0), y = qubit.pauli(1), z = qubit.pauli(2);
    c.xx = state.expectation(kron(x, x));
    c.yy = state.expectation(kron(y, y));
    c.zz = state.expectation(kron(z, z));
    return c;
}

}  // namespace incelab
