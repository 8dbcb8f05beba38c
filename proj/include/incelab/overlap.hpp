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

// Inner products of sampled modes.
//
// Integrands decay like exp(-2 r^2 / w0^2), so the plain lattice sum
// sum conj(A) B dx dy is used as the quadrature and accuracy is checked by
// doubling the number of samples rather than by a higher-order rule.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <deque>
#include <optional>
#include <ostream>
#include <vector>

#include "incelab/errors.hpp"
#include "incelab/modefield.hpp"
#include "incelab/parallel.hpp"

namespace incelab {

/// Change allowed between successive grid doublings.
inline constexpr double kOverlapConvergence = 1e-4;

/// Discrete L2 inner product <A|B> = sum conj(A) B dx dy.
inline cplx inner_product(const ComplexField &a, const ComplexField &b) {
    if (!(a.grid == b.grid) || a.waist != b.waist || a.values.size() != b.values.size()) {
        throw GridMismatch("inner product of fields sampled on different grids");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += std::conj(a.values[i]) * b.values[i];
    return s * a.cell_area();
}

inline SamplingGrid doubled(const SamplingGrid &g) { return SamplingGrid{g.half_extent, 2 * g.samples}; }

namespace detail {

// Refines over N, 2N and, if needed, 4N samples. The reference render per
// grid is supplied by the caller so curves reuse it.
template <typename RefAt>
double converged_overlap(RefAt &&reference_at, const InceGaussMode &mode, const SamplingGrid &grid) {
    SamplingGrid g = grid;
    double prev = std::norm(inner_product(reference_at(g), render_field(mode, g, true)));
    for (int doubling = 0; doubling < 2; ++doubling) {
        g = doubled(g);
        const double next = std::norm(inner_product(reference_at(g), render_field(mode, g, true)));
        if (std::abs(next - prev) < kOverlapConvergence) return next;
        prev = next;
    }
    throw NonConvergence("overlap still changes by more than 1e-4 after two grid doublings");
}

}  // namespace detail

/// |<A|B>|^2 of the two normalized modes, converged under grid doubling.
inline double mode_overlap(const ModeSpec &a, const ModeSpec &b, const SamplingGrid &grid, double waist = 1.0) {
    validate(grid);
    const InceGaussMode ma(a, waist), mb(b, waist);
    return detail::converged_overlap([&](const SamplingGrid &g) { return render_field(ma, g, true); }, mb, grid);
}

/// Sampled |<IG_ref|IG(e)>|^2 versus e for modes sharing p, m and kind.
struct OverlapCurve {
    ModeSpec reference;
    std::vector<double> ellipticities;
    std::vector<double> overlaps;

    /// Index of the largest overlap.
    std::size_t argmax() const {
        return static_cast<std::size_t>(std::max_element(overlaps.begin(), overlaps.end()) - overlaps.begin());
    }
};

/// Evenly spaced samples on [e_min, e_max]; steps == 1 samples e_min only.
inline std::vector<double> ellipticity_samples(double e_min, double e_max, int steps) {
    if (!(e_min >= 0.0)) throw NegativeEllipticity("scan range must start at a non-negative ellipticity");
    if (steps < 1 || (steps > 1 && !(e_max >= e_min))) throw InvalidArgument("scan needs steps >= 1 and e_max >= e_min");
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = steps == 1 ? e_min : e_min + (e_max - e_min) * i / (steps - 1);
    return out;
}

/// Overlap of the reference mode at e_ref with the same (p, m, kind) over an
/// ellipticity scan. Uses default_grid(p) unless a grid is supplied.
inline OverlapCurve overlap_curve(int p, int m, ModeKind kind, double e_ref, double e_min, double e_max, int steps,
                                  std::optional<SamplingGrid> grid = std::nullopt) {
    OverlapCurve curve;
    curve.reference = ModeSpec{p, m, e_ref, kind};
    curve.ellipticities = ellipticity_samples(e_min, e_max, steps);
    const SamplingGrid g0 = grid ? *grid : default_grid(p);
    validate(g0);
    const InceGaussMode ref(curve.reference);
    // Reference renders for N, 2N, 4N, built on first use.
    std::deque<ComplexField> ref_renders;
    auto reference_at = [&](const SamplingGrid &g) -> const ComplexField & {
        for (const ComplexField &f : ref_renders) {
            if (f.grid == g) return f;
        }
        ref_renders.push_back(render_field(ref, g, true));
        return ref_renders.back();
    };
    reference_at(g0);
    reference_at(doubled(g0));
    curve.overlaps.resize(curve.ellipticities.size());
    for (std::size_t i = 0; i < curve.ellipticities.size(); ++i) {
        const InceGaussMode mode(ModeSpec{p, m, curve.ellipticities[i], kind});
        curve.overlaps[i] = detail::converged_overlap(reference_at, mode, g0);
    }
    return curve;
}

inline void write_overlap_csv(std::ostream &out, const OverlapCurve &curve) {
    out << "epsilon,overlap\n";
    out.precision(17);
    for (std::size_t i = 0; i < curve.overlaps.size(); ++i) out << curve.ellipticities[i] << ',' << curve.overlaps[i] << '\n';
}

/// Matrix of <spec_i|spec_j> for normalized renders. All specs must share the
/// same ellipticity.
inline Eigen::MatrixXcd gram_matrix(const std::vector<ModeSpec> &specs, const SamplingGrid &grid, double waist = 1.0) {
    validate(grid);
    if (specs.empty()) return Eigen::MatrixXcd(0, 0);
    for (const ModeSpec &s : specs) {
        if (s.ellipticity != specs.front().ellipticity) throw InvalidArgument("gram_matrix needs a common ellipticity");
    }
    std::vector<ComplexField> fields;
    fields.reserve(specs.size());
    for (const ModeSpec &s : specs) fields.push_back(render_field(InceGaussMode(s, waist), grid, true));
    const Eigen::Index n = static_cast<Eigen::Index>(specs.size());
    Eigen::MatrixXcd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        gram(i, i) = inner_product(fields[i], fields[i]);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            gram(i, j) = inner_product(fields[i], fields[j]);
            gram(j, i) = std::conj(gram(i, j));
        }
    }
    return gram;
}

}  // namespace incelab
