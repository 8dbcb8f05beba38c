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

// Renders IG+_{5,3,e} for a few ellipticities and lists the vortices near
// the beam axis. Images are written to the working directory.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "incelab/modefield.hpp"
#include "incelab/vortex.hpp"

int main() {
    using namespace incelab;
    for (double e : {0.0, 0.5, 2.0, 5.0}) {
        const ComplexField f = render_field(InceGaussMode({5, 3, e, ModeKind::plus}), {4.0, 256}, true);
        const std::string stem = "ig_5_3_eps" + std::to_string(e).substr(0, 3);
        {
            std::ofstream out(stem + "_intensity.pgm", std::ios::binary);
            write_intensity_pgm(out, f);
        }
        {
            std::ofstream out(stem + "_phase.pgm", std::ios::binary);
            write_phase_pgm(out, f);
        }
        const VortexScan scan = find_singularities(f);
        std::printf("eps = %.1f: %zu vortices, net charge within w0 = %+d\n", e, scan.singularities.size(),
                    net_charge(scan.singularities, 1.0));
        for (const Singularity &s : scan.singularities) {
            if (std::hypot(s.x, s.y) < 1.0) std::printf("  (%+.3f, %+.3f) charge %+d\n", s.x, s.y, s.charge);
        }
    }
}
