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

// Evaluates the qutrit correlation function f along a white-noise path
// from the maximally entangled state and reports where it crosses the
// separable and two-dimensional limits.

#include <cstdio>

#include "incelab/qstate.hpp"

int main() {
    using namespace incelab;
    for (int i = 0; i <= 20; ++i) {
        const double v = i / 20.0;
        const DimensionWitness dw = dimension_witness(werner_mix(max_entangled_qutrit(), v));
        std::printf("v = %.2f  f = %.4f  g = (%.3f, %.3f, %.3f)  %s\n", v, dw.f, dw.g[0], dw.g[1], dw.g[2],
                    to_string(classify_dimension(dw.f)).c_str());
    }
    const BipartiteState psi = bell_psi_plus();
    std::printf("psi+: W = %.3f, S = %.3f\n", witness_w(psi), steering_s(psi));
}
