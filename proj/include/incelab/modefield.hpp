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

// Ince-Gauss and Laguerre-Gauss modes in the waist plane z = 0.
//
// Lengths are measured in units of the waist w0 unless a BeamGeometry says
// otherwise. The semi-focal distance of the elliptic coordinates is
// f0 = w0 sqrt(e / 2) for ellipticity e.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "incelab/errors.hpp"
#include "incelab/ince.hpp"
#include "incelab/parallel.hpp"

namespace incelab {

using cplx = std::complex<double>;

/// Below this ellipticity the foci coincide numerically and modes are
/// evaluated through the Laguerre-Gauss closed form.
inline constexpr double kDegenerateEllipticity = 1e-9;

struct BeamGeometry {
    double waist = 1.0;
    double ellipticity = 0.0;

    double semifocal() const { return waist * std::sqrt(ellipticity / 2.0); }
};

inline void validate(const BeamGeometry &g) {
    if (!(g.waist > 0.0)) throw InvalidArgument("beam waist must be positive");
    if (!(g.ellipticity >= 0.0)) throw NegativeEllipticity("ellipticity must be non-negative");
}

struct EllipticPoint {
    double u = 0.0;  ///< radial coordinate, >= 0
    double v = 0.0;  ///< angular coordinate in [0, 2pi)
};

/// Inverts x = f0 cosh(u) cos(v), y = f0 sinh(u) sin(v) on the branch u >= 0.
inline EllipticPoint elliptic_coords(double x, double y, double f0) {
    if (!(f0 > 0.0)) throw DegenerateFoci("elliptic coordinates need f0 > 0");
    // x + iy = f0 cosh(u + iv); the principal acosh has Re >= 0, Im in [-pi, pi].
    const cplx w = std::acosh(cplx(x / f0, y / f0));
    EllipticPoint pt{w.real(), w.imag()};
    if (pt.v < 0.0) pt.v += 2.0 * std::numbers::pi;
    if (pt.v >= 2.0 * std::numbers::pi) pt.v -= 2.0 * std::numbers::pi;
    return pt;
}

/// Laguerre-Gauss LG_{n,l} at z = 0, unit L2 norm in the plane.
inline cplx eval_lg_reference(int n, int l, double waist, double x, double y) {
    if (n < 0) throw InvalidIndices("LG radial index must be non-negative");
    const unsigned al = static_cast<unsigned>(std::abs(l));
    const double r2 = (x * x + y * y) / (waist * waist);
    const double norm = std::sqrt(2.0 * std::tgamma(n + 1.0) / (std::numbers::pi * std::tgamma(n + al + 1.0))) / waist;
    const double radial = norm * std::pow(std::sqrt(2.0 * r2), static_cast<double>(al)) *
                          std::assoc_laguerre(static_cast<unsigned>(n), al, 2.0 * r2) * std::exp(-r2);
    const double phi = std::atan2(y, x);
    return std::polar(radial, l * phi);
}

enum class ModeKind { even, odd, plus, minus, bloch };

inline std::string to_string(ModeKind k) {
    switch (k) {
        case ModeKind::even:
            return "even";
        case ModeKind::odd:
            return "odd";
        case ModeKind::plus:
            return "plus";
        case ModeKind::minus:
            return "minus";
        case ModeKind::bloch:
            return "bloch";
    }
    return "?";
}

inline std::optional<ModeKind> parse_mode_kind(const std::string &s) {
    for (ModeKind k : {ModeKind::even, ModeKind::odd, ModeKind::plus, ModeKind::minus, ModeKind::bloch}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

/// Which Ince-Gauss mode to evaluate. bloch_a and bloch_phi (radians) select
/// sqrt(a) e^{i phi} IG+ + sqrt(1-a) e^{-i phi} IG- when kind == bloch.
struct ModeSpec {
    int p = 0;
    int m = 0;
    double ellipticity = 0.0;
    ModeKind kind = ModeKind::plus;
    double bloch_a = 0.5;
    double bloch_phi = 0.0;
};

inline bool needs_odd_part(ModeKind k) { return k != ModeKind::even; }
inline bool needs_even_part(ModeKind k) { return k != ModeKind::odd; }

inline void validate(const ModeSpec &s) {
    if (needs_even_part(s.kind)) validate(InceIndices{s.p, s.m, Parity::even});
    if (needs_odd_part(s.kind)) validate(InceIndices{s.p, s.m, Parity::odd});
    if (!(s.ellipticity >= 0.0)) throw NegativeEllipticity("ellipticity must be non-negative");
    if (s.kind == ModeKind::bloch && !(s.bloch_a >= 0.0 && s.bloch_a <= 1.0)) {
        throw InvalidArgument("Bloch parameter a must lie in [0, 1]");
    }
}

/// Square lattice of samples x_i = -L + i h, h = 2L / (N - 1), in units of
/// the waist, centered on the origin. Identical for y.
struct SamplingGrid {
    double half_extent = 4.0;
    int samples = 512;

    double spacing() const { return 2.0 * half_extent / (samples - 1); }
    double coordinate(int i) const { return -half_extent + i * spacing(); }
    friend bool operator==(const SamplingGrid &, const SamplingGrid &) = default;
};

inline void validate(const SamplingGrid &g) {
    if (!(g.half_extent > 0.0) || g.samples < 2) throw InvalidArgument("grid needs L > 0 and N >= 2");
}

/// Grid covering the Gaussian support of order-p modes.
inline SamplingGrid default_grid(int p, int samples = 512) {
    return SamplingGrid{std::sqrt(static_cast<double>(p)) + 3.0, samples};
}

/// Sampled complex amplitudes, row-major with row j at y = coordinate(j).
struct ComplexField {
    SamplingGrid grid;
    double waist = 1.0;
    std::vector<cplx> values;
    bool normalized = false;

    int size() const { return grid.samples; }
    cplx &at(int i, int j) { return values[static_cast<std::size_t>(j) * grid.samples + i]; }
    const cplx &at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.samples + i]; }
    double x(int i) const { return grid.coordinate(i) * waist; }
    double y(int j) const { return grid.coordinate(j) * waist; }
    double cell_area() const { return grid.spacing() * grid.spacing() * waist * waist; }
};

/// Discrete L2 norm: sqrt(sum |value|^2 dx dy).
inline double l2_norm(const ComplexField &f) {
    double s = 0.0;
    for (const cplx &c : f.values) s += std::norm(c);
    return std::sqrt(s * f.cell_area());
}

inline ComplexField conjugate(ComplexField f) {
    for (cplx &c : f.values) c = std::conj(c);
    return f;
}

/// An Ince-Gauss mode with its polynomials solved and its normalization
/// constants computed once. Even and odd parts are real; each has unit L2
/// norm on its own, which makes the helical and Bloch combinations unit norm
/// because the parts are orthogonal (opposite parity under y -> -y).
class InceGaussMode {
   public:
    InceGaussMode(const ModeSpec &spec, double waist = 1.0) : spec_(spec), waist_(waist) {
        validate(spec);
        if (!(waist > 0.0)) throw InvalidArgument("beam waist must be positive");
        lg_limit_ = spec.ellipticity < kDegenerateEllipticity;
        f0_ = std::sqrt(spec.ellipticity / 2.0);
        if (!lg_limit_) {
            if (needs_even_part(spec.kind)) {
                even_ = solve_ince({spec.p, spec.m, Parity::even}, spec.ellipticity);
                even_norm_ = 1.0 / unit_l2_norm([this](double x, double y) { return raw_even(x, y); });
            }
            if (needs_odd_part(spec.kind)) {
                odd_ = solve_ince({spec.p, spec.m, Parity::odd}, spec.ellipticity);
                odd_norm_ = 1.0 / unit_l2_norm([this](double x, double y) { return raw_odd(x, y); });
            }
        }
    }

    const ModeSpec &spec() const { return spec_; }
    double waist() const { return waist_; }
    bool uses_lg_limit() const { return lg_limit_; }
    const std::optional<IncePolynomial> &even_polynomial() const { return even_; }
    const std::optional<IncePolynomial> &odd_polynomial() const { return odd_; }
    /// Constants N_e, N_o in waist units (the physical constant is N / w0).
    double even_normalization() const { return even_norm_; }
    double odd_normalization() const { return odd_norm_; }

    /// Normalized even mode at physical coordinates.
    double even_part(double x, double y) const {
        const double xs = x / waist_, ys = y / waist_;
        if (lg_limit_) {
            const int n = (spec_.p - spec_.m) / 2;
            const double r = lg_radial(n, spec_.m, xs, ys);
            if (spec_.m == 0) return r / waist_;
            return std::sqrt(2.0) * r * std::cos(spec_.m * std::atan2(ys, xs)) / waist_;
        }
        return even_norm_ * raw_even(xs, ys) / waist_;
    }

    double odd_part(double x, double y) const {
        const double xs = x / waist_, ys = y / waist_;
        if (lg_limit_) {
            const int n = (spec_.p - spec_.m) / 2;
            return std::sqrt(2.0) * lg_radial(n, spec_.m, xs, ys) * std::sin(spec_.m * std::atan2(ys, xs)) / waist_;
        }
        return odd_norm_ * raw_odd(xs, ys) / waist_;
    }

    /// Normalized (even, odd) parts sharing one coordinate transform; the
    /// part the kind does not use is returned as 0.
    std::pair<double, double> parts(double x, double y) const {
        const bool want_even = needs_even_part(spec_.kind), want_odd = needs_odd_part(spec_.kind);
        if (lg_limit_) {
            return {want_even ? even_part(x, y) : 0.0, want_odd ? odd_part(x, y) : 0.0};
        }
        const double xs = x / waist_, ys = y / waist_;
        const EllipticPoint pt = elliptic_coords(xs, ys, f0_);
        const double envelope = std::exp(-(xs * xs + ys * ys)) / waist_;
        double e = 0.0, o = 0.0;
        if (want_even) e = even_norm_ * eval_radial(*even_, pt.u) * eval_angular(*even_, pt.v) * envelope;
        if (want_odd) o = odd_norm_ * eval_radial(*odd_, pt.u) * eval_angular(*odd_, pt.v) * envelope;
        return {e, o};
    }

    cplx operator()(double x, double y) const {
        constexpr cplx I(0.0, 1.0);
        const double r2 = std::sqrt(0.5);
        const auto [e, o] = parts(x, y);
        switch (spec_.kind) {
            case ModeKind::even:
                return e;
            case ModeKind::odd:
                return o;
            case ModeKind::plus:
                return r2 * (e + I * o);
            case ModeKind::minus:
                return r2 * (e - I * o);
            case ModeKind::bloch: {
                const cplx plus = r2 * (e + I * o), minus = r2 * (e - I * o);
                return std::sqrt(spec_.bloch_a) * std::polar(1.0, spec_.bloch_phi) * plus +
                       std::sqrt(1.0 - spec_.bloch_a) * std::polar(1.0, -spec_.bloch_phi) * minus;
            }
        }
        return 0.0;
    }

   private:
    // Radial LG profile with the l-dependence of the phase removed.
    static double lg_radial(int n, int l, double x, double y) {
        const double r2 = x * x + y * y;
        const unsigned al = static_cast<unsigned>(std::abs(l));
        const double norm = std::sqrt(2.0 * std::tgamma(n + 1.0) / (std::numbers::pi * std::tgamma(n + al + 1.0)));
        return norm * std::pow(std::sqrt(2.0 * r2), static_cast<double>(al)) *
               std::assoc_laguerre(static_cast<unsigned>(n), al, 2.0 * r2) * std::exp(-r2);
    }

    // Un-normalized C(iu) C(v) exp(-r^2) in waist units.
    double raw_even(double x, double y) const {
        const EllipticPoint pt = elliptic_coords(x, y, f0_);
        return eval_radial(*even_, pt.u) * eval_angular(*even_, pt.v) * std::exp(-(x * x + y * y));
    }

    double raw_odd(double x, double y) const {
        const EllipticPoint pt = elliptic_coords(x, y, f0_);
        return eval_radial(*odd_, pt.u) * eval_angular(*odd_, pt.v) * std::exp(-(x * x + y * y));
    }

    // sqrt of the integral of f^2 over the plane. The integrand is a
    // polynomial times exp(-2 r^2); the trapezoid rule on a uniform lattice is
    // spectrally accurate for it, and the truncated tail beyond
    // r = sqrt(p) + 5 is below 1e-30 of the total.
    template <typename F>
    double unit_l2_norm(F &&f) const {
        constexpr double h = 0.05;
        const double extent = std::sqrt(static_cast<double>(spec_.p)) + 5.0;
        const int n = static_cast<int>(std::ceil(extent / h));
        std::vector<double> rows(static_cast<std::size_t>(2 * n + 1), 0.0);
        parallel_for(rows.size(), [&](std::size_t j) {
            const double y = (static_cast<int>(j) - n) * h;
            double s = 0.0;
            for (int i = -n; i <= n; ++i) {
                const double v = f(i * h, y);
                s += v * v;
            }
            rows[j] = s;
        });
        double total = 0.0;
        for (double r : rows) total += r;
        return std::sqrt(total * h * h);
    }

    ModeSpec spec_;
    double waist_ = 1.0;
    bool lg_limit_ = false;
    double f0_ = 0.0;
    std::optional<IncePolynomial> even_;
    std::optional<IncePolynomial> odd_;
    double even_norm_ = 1.0;
    double odd_norm_ = 1.0;
};

/// Amplitude of a single mode at (x, y). Solves and normalizes the mode on
/// every call; construct an InceGaussMode to evaluate many points.
inline cplx eval_mode(const ModeSpec &spec, const BeamGeometry &geometry, double x, double y) {
    validate(geometry);
    if (std::abs(geometry.ellipticity - spec.ellipticity) > 1e-15) {
        throw InvalidArgument("mode and beam geometry disagree on the ellipticity");
    }
    return InceGaussMode(spec, geometry.waist)(x, y);
}

/// Samples any callable (x, y) -> complex on the grid, rows in parallel.
template <typename F>
ComplexField sample_field(F &&f, const SamplingGrid &grid, double waist = 1.0) {
    validate(grid);
    ComplexField field;
    field.grid = grid;
    field.waist = waist;
    const int n = grid.samples;
    field.values.resize(static_cast<std::size_t>(n) * n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
        const double y = field.y(static_cast<int>(j));
        for (int i = 0; i < n; ++i) field.at(i, static_cast<int>(j)) = f(field.x(i), y);
    });
    return field;
}

/// Rescales the field to unit discrete L2 norm.
inline void normalize(ComplexField &field) {
    const double nrm = l2_norm(field);
    if (!(nrm > 0.0)) throw InvalidArgument("cannot normalize a zero field");
    for (cplx &c : field.values) c /= nrm;
    field.normalized = true;
}

inline ComplexField render_field(const InceGaussMode &mode, const SamplingGrid &grid, bool normalize_field) {
    ComplexField f = sample_field(mode, grid, mode.waist());
    if (normalize_field) normalize(f);
    return f;
}

inline ComplexField render_field(const ModeSpec &spec, const BeamGeometry &geometry, const SamplingGrid &grid,
                                 bool normalize_field) {
    validate(geometry);
    if (std::abs(geometry.ellipticity - spec.ellipticity) > 1e-15) {
        throw InvalidArgument("mode and beam geometry disagree on the ellipticity");
    }
    return render_field(InceGaussMode(spec, geometry.waist), grid, normalize_field);
}

inline ComplexField render_lg(int n, int l, const SamplingGrid &grid, double waist = 1.0, bool normalize_field = false) {
    ComplexField f = sample_field([&](double x, double y) { return eval_lg_reference(n, l, waist, x, y); }, grid, waist);
    if (normalize_field) normalize(f);
    return f;
}

// ---------------------------------------------------------------------------
// Export

/// "x,y,re,im" header then one row per sample, rows of constant y.
inline void write_field_csv(std::ostream &out, const ComplexField &f) {
    out << "x,y,re,im\n";
    out.precision(17);
    for (int j = 0; j < f.size(); ++j) {
        for (int i = 0; i < f.size(); ++i) {
            const cplx c = f.at(i, j);
            out << f.x(i) << ',' << f.y(j) << ',' << c.real() << ',' << c.imag() << '\n';
        }
    }
}

namespace detail {

template <typename Pixel>
void write_pgm(std::ostream &out, const ComplexField &f, Pixel &&pixel) {
    const int n = f.size();
    out << "P5\n" << n << ' ' << n << "\n255\n";
    std::vector<char> row(static_cast<std::size_t>(n));
    // Top image row is the largest y.
    for (int j = n - 1; j >= 0; --j) {
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = static_cast<char>(pixel(f.at(i, j)));
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

}  // namespace detail

/// Binary PGM of |amplitude|^2 mapped linearly from [0, max] to [0, 255].
inline void write_intensity_pgm(std::ostream &out, const ComplexField &f) {
    double peak = 0.0;
    for (const cplx &c : f.values) peak = std::max(peak, std::norm(c));
    detail::write_pgm(out, f, [peak](cplx c) -> std::uint8_t {
        if (peak <= 0.0) return 0;
        return static_cast<std::uint8_t>(std::lround(255.0 * std::norm(c) / peak));
    });
}

/// Binary PGM of the phase, [-pi, pi) mapped linearly onto 0..255.
inline void write_phase_pgm(std::ostream &out, const ComplexField &f) {
    detail::write_pgm(out, f, [](cplx c) -> std::uint8_t {
        double a = std::arg(c);
        if (a >= std::numbers::pi) a -= 2.0 * std::numbers::pi;
        const double level = std::floor((a + std::numbers::pi) / (2.0 * std::numbers::pi) * 256.0);
        return static_cast<std::uint8_t>(std::clamp(level, 0.0, 255.0));
    });
}

}  // namespace incelab
