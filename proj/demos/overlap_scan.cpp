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

// Prints |<IG_{p,m,ref}|IG_{p,m,e}>|^2 over an ellipticity scan for the
// (2,2), (8,4) and (14,6) helical modes.

#include <cstdio>

#include "incelab/overlap.hpp"

int main() {
    using namespace incelab;
    const int orders[3][2] = {{2, 2}, {8, 4}, {14, 6}};
    for (const auto &pm : orders) {
        const OverlapCurve c = overlap_curve(pm[0], pm[1], ModeKind::plus, 1.0, 0.0, 8.0, 17, default_grid(pm[0], 256));
        std::printf("(p, m) = (%d, %d), reference eps = 1\n", pm[0], pm[1]);
        for (std::size_t i = 0; i < c.overlaps.size(); ++i) std::printf("  %4.1f  %.6f\n", c.ellipticities[i], c.overlaps[i]);
    }
}
