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

// Phase singularities of sampled fields.
//
// Every 2x2 plaquette of the lattice is walked counterclockwise (in x, y) and
// the wrapped phase differences along its edges are summed; a nonzero total
// is 2 pi times the net topological charge enclosed. Edge-adjacent flagged
// plaquettes are merged into one singularity carrying the summed charge.
// Lines of zeros (the dark rings of Laguerre-Gauss modes at e = 0) are not
// point vortices; plaquettes straddling them may show charge pairs that cancel.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <ostream>
#include <vector>

#include "incelab/modefield.hpp"

namespace incelab {

struct Singularity {
    double x = 0.0;
    double y = 0.0;
    int charge = 0;
};

struct VortexScan {
    std::vector<Singularity> singularities;  ///< sorted by distance from the origin
    /// Fraction of plaquettes with some edge phase step above pi/2.
    double steep_fraction = 0.0;
    /// Set when steep_fraction exceeds 5%: the lattice under-resolves the phase.
    bool resolution_warning = false;
};

/// Default amplitude threshold: the larger of 1e-3 times the peak amplitude
/// and kThresholdSlope * peak * h / w0 for lattice spacing h. A plaquette
/// containing a zero has a corner within about |grad| h of it, so a fixed
/// fraction of the peak would reject genuine vortices on coarse lattices.
inline constexpr double kThresholdFloor = 1e-3;
inline constexpr double kThresholdSlope = 6.0;

inline double default_amp_threshold(const ComplexField &field) {
    double peak = 0.0;
    for (const cplx &c : field.values) peak = std::max(peak, std::abs(c));
    return peak * std::max(kThresholdFloor, kThresholdSlope * field.grid.spacing());
}

namespace detail {

inline double wrap_phase(double d) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    d = std::fmod(d + std::numbers::pi, two_pi);
    if (d < 0) d += two_pi;
    return d - std::numbers::pi;
}

// Zero of the bilinear interpolant of the four corner values inside the unit
// square, by Newton iteration from the center. Falls back to the center.
inline std::pair<double, double> bilinear_zero(cplx c00, cplx c10, cplx c11, cplx c01) {
    double s = 0.5, t = 0.5;
    for (int it = 0; it < 30; ++it) {
        const cplx f = c00 * (1 - s) * (1 - t) + c10 * s * (1 - t) + c11 * s * t + c01 * (1 - s) * t;
        const cplx fs = (c10 - c00) * (1 - t) + (c11 - c01) * t;
        const cplx ft = (c01 - c00) * (1 - s) + (c11 - c10) * s;
        const double det = fs.real() * ft.imag() - ft.real() * fs.imag();
        if (std::abs(det) < 1e-300) return {0.5, 0.5};
        const double ds = (f.real() * ft.imag() - ft.real() * f.imag()) / det;
        const double dt = (fs.real() * f.imag() - f.real() * fs.imag()) / det;
        s -= ds;
        t -= dt;
        if (!std::isfinite(s) || !std::isfinite(t)) return {0.5, 0.5};
        if (std::abs(ds) + std::abs(dt) < 1e-13) break;
    }
    if (s < -1e-9 || s > 1 + 1e-9 || t < -1e-9 || t > 1 + 1e-9) return {0.5, 0.5};
    return {std::clamp(s, 0.0, 1.0), std::clamp(t, 0.0, 1.0)};
}

}  // namespace detail

/// Locates phase vortices. Plaquettes whose smallest corner amplitude exceeds
/// amp_threshold are never flagged; when no threshold is given it defaults to
/// default_amp_threshold(field).
inline VortexScan find_singularities(const ComplexField &field, std::optional<double> amp_threshold = std::nullopt) {
    const int n = field.size();
    const double threshold = amp_threshold ? *amp_threshold : default_amp_threshold(field);
    if (threshold < 0.0) throw InvalidArgument("amplitude threshold must be non-negative");

    VortexScan scan;
    if (n < 2) return scan;
    const int cells = n - 1;
    std::vector<int> winding(static_cast<std::size_t>(cells) * cells, 0);
    std::vector<std::pair<double, double>> position(winding.size());
    std::vector<int> steep_rows(static_cast<std::size_t>(cells), 0);

    parallel_for(static_cast<std::size_t>(cells), [&](std::size_t jj) {
        const int j = static_cast<int>(jj);
        for (int i = 0; i < cells; ++i) {
            const cplx c[4] = {field.at(i, j), field.at(i + 1, j), field.at(i + 1, j + 1), field.at(i, j + 1)};
            double total = 0.0, steepest = 0.0, dimmest = std::abs(c[0]);
            for (int k = 0; k < 4; ++k) {
                const double d = detail::wrap_phase(std::arg(c[(k + 1) % 4]) - std::arg(c[k]));
                total += d;
                steepest = std::max(steepest, std::abs(d));
                dimmest = std::min(dimmest, std::abs(c[k]));
            }
            if (steepest > std::numbers::pi / 2) ++steep_rows[jj];
            const int w = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
            if (w == 0 || dimmest > threshold) continue;
            const std::size_t idx = static_cast<std::size_t>(j) * cells + i;
            winding[idx] = w;
            auto [s, t] = detail::bilinear_zero(c[0], c[1], c[2], c[3]);
            position[idx] = {field.x(i) + s * (field.x(i + 1) - field.x(i)), field.y(j) + t * (field.y(j + 1) - field.y(j))};
        }
    });

    int steep = 0;
    for (int r : steep_rows) steep += r;
    scan.steep_fraction = static_cast<double>(steep) / (static_cast<double>(cells) * cells);
    scan.resolution_warning = scan.steep_fraction > 0.05;

    // Merge edge-connected flagged plaquettes.
    std::vector<char> visited(winding.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < winding.size(); ++start) {
        if (winding[start] == 0 || visited[start]) continue;
        int charge = 0, members = 0;
        double sx = 0.0, sy = 0.0;
        stack.push_back(start);
        visited[start] = 1;
        while (!stack.empty()) {
            const std::size_t idx = stack.back();
            stack.pop_back();
            charge += winding[idx];
            sx += position[idx].first;
            sy += position[idx].second;
            ++members;
            const int i = static_cast<int>(idx % cells), j = static_cast<int>(idx / cells);
            const int nbr[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
            for (const auto &q : nbr) {
                if (q[0] < 0 || q[1] < 0 || q[0] >= cells || q[1] >= cells) continue;
                const std::size_t k = static_cast<std::size_t>(q[1]) * cells + q[0];
                if (winding[k] != 0 && !visited[k]) {
                    visited[k] = 1;
                    stack.push_back(k);
                }
            }
        }
        if (charge != 0) scan.singularities.push_back({sx / members, sy / members, charge});
    }
    std::stable_sort(scan.singularities.begin(), scan.singularities.end(), [](const Singularity &a, const Singularity &b) {
        return std::hypot(a.x, a.y) < std::hypot(b.x, b.y);
    });
    return scan;
}

/// Sum of charges strictly inside the given radius.
inline int net_charge(const std::vector<Singularity> &singularities, double radius) {
    if (!(radius > 0.0)) throw InvalidArgument("radius must be positive");
    int total = 0;
    for (const Singularity &s : singularities) {
        if (s.x * s.x + s.y * s.y < radius * radius) total += s.charge;
    }
    return total;
}

inline void write_singularities_csv(std::ostream &out, const std::vector<Singularity> &singularities) {
    out << "x,y,charge\n";
    out.precision(17);
    for (const Singularity &s : singularities) out << s.x << ',' << s.y << ',' << s.charge << '\n';
}

}  // namespace incelab
