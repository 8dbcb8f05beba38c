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

// Ince polynomials C_p^m(v, e) and S_p^m(v, e).
//
// The Ince equation
//
//     y''(v) + e sin(2v) y'(v) + (a - p e cos(2v)) y(v) = 0
//
// has polynomial (finite Fourier series) solutions when p is a non-negative
// integer. Substituting y = sum_k A_k cos(kv) (or sin(kv)) and collecting
// harmonics turns the equation into a tridiagonal eigenproblem L A = a A with
//
//     L cos(kv) = k^2 cos(kv) + (e/2)(p+k) cos((k-2)v) + (e/2)(p-k) cos((k+2)v)
//     L sin(kv) = k^2 sin(kv) + (e/2)(p+k) sin((k-2)v) + (e/2)(p-k) sin((k+2)v)
//
// where negative harmonics fold back (cos(-kv) = cos(kv), sin(-kv) = -sin(kv),
// sin(0) = 0). The coupling (p-k) vanishes at k = p, so the harmonics up to p
// of the same parity as p span an invariant subspace and the series is exact.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "incelab/errors.hpp"

namespace incelab {

enum class Parity { even, odd };

/// Mode order p, degree m and parity of an Ince polynomial.
struct InceIndices {
    int p = 0;
    int m = 0;
    Parity parity = Parity::even;

    friend bool operator==(const InceIndices &, const InceIndices &) = default;
};

inline std::string describe(const InceIndices &idx) {
    return std::string(idx.parity == Parity::even ? "C" : "S") + "_" + std::to_string(idx.p) + "^" +
           std::to_string(idx.m);
}

/// Throws InvalidIndices unless the indices name an existing Ince polynomial.
inline void validate(const InceIndices &idx) {
    if (idx.p < 0 || idx.m < 0 || idx.m > idx.p) {
        throw InvalidIndices("Ince indices require 0 <= m <= p, got p=" + std::to_string(idx.p) +
                             " m=" + std::to_string(idx.m));
    }
    if ((idx.p - idx.m) % 2 != 0) {
        throw InvalidIndices("Ince indices require p - m even, got p=" + std::to_string(idx.p) +
                             " m=" + std::to_string(idx.m));
    }
    if (idx.parity == Parity::odd && idx.m == 0) {
        throw InvalidIndices("odd Ince polynomials require m >= 1");
    }
}

inline bool is_admissible(const InceIndices &idx) noexcept {
    return idx.p >= 0 && idx.m >= 0 && idx.m <= idx.p && (idx.p - idx.m) % 2 == 0 &&
           !(idx.parity == Parity::odd && idx.m == 0);
}

/// Trigonometric basis of a solution. The harmonic sets and dimensions are
///   cos_even: cos(kv), k = 0, 2, ..., p      dimension p/2 + 1
///   sin_even: sin(kv), k = 2, 4, ..., p      dimension p/2
///   cos_odd:  cos(kv), k = 1, 3, ..., p      dimension (p+1)/2
///   sin_odd:  sin(kv), k = 1, 3, ..., p      dimension (p+1)/2
enum class TrigClass { cos_even, sin_even, cos_odd, sin_odd };

inline TrigClass trig_class_of(const InceIndices &idx) noexcept {
    bool p_even = idx.p % 2 == 0;
    if (idx.parity == Parity::even) {
        return p_even ? TrigClass::cos_even : TrigClass::cos_odd;
    }
    return p_even ? TrigClass::sin_even : TrigClass::sin_odd;
}

inline bool is_cosine(TrigClass c) noexcept {
    return c == TrigClass::cos_even || c == TrigClass::cos_odd;
}

inline int first_harmonic(TrigClass c) noexcept {
    switch (c) {
        case TrigClass::cos_even:
            return 0;
        case TrigClass::sin_even:
            return 2;
        default:
            return 1;
    }
}

inline int class_dimension(TrigClass c, int p) noexcept { return (p - first_harmonic(c)) / 2 + 1; }

/// A solved Ince polynomial. Coefficients are in the basis named by
/// trig_class, harmonic(j) = first_harmonic + 2j, normalized to unit Euclidean
/// length with the sign fixed so that C(0) > 0 (even) or S'(0) > 0 (odd).
struct IncePolynomial {
    InceIndices indices;
    double ellipticity = 0.0;
    double eigenvalue = 0.0;
    TrigClass trig_class = TrigClass::cos_even;
    std::vector<double> coefficients;

    int harmonic(std::size_t j) const noexcept { return first_harmonic(trig_class) + 2 * static_cast<int>(j); }
    bool cosine() const noexcept { return is_cosine(trig_class); }
};

namespace detail {

/// Row-major dense form of the (non-symmetric) tridiagonal operator L.
inline Eigen::MatrixXd ince_operator(TrigClass tc, int p, double e) {
    const int n = class_dimension(tc, p);
    const int k0 = first_harmonic(tc);
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        const int k = k0 + 2 * j;
        L(j, j) = static_cast<double>(k) * k;
        if (j + 1 < n) {
            L(j + 1, j) = 0.5 * e * (p - k);
        }
        if (j > 0) {
            L(j - 1, j) = 0.5 * e * (p + k);
        }
    }
    // Folded harmonics.
    switch (tc) {
        case TrigClass::cos_even:
            if (n > 1) L(1, 0) = e * p;
            break;
        case TrigClass::cos_odd:
            L(0, 0) += 0.5 * e * (p + 1);
            break;
        case TrigClass::sin_odd:
            L(0, 0) -= 0.5 * e * (p + 1);
            break;
        case TrigClass::sin_even:
            break;
    }
    return L;
}

/// Diagonal similarity d making diag(d) L diag(d)^-1 symmetric. The ratio of
/// the two off-diagonals does not depend on e, so the transform is defined at
/// e = 0 as well.
inline Eigen::VectorXd symmetrizer(TrigClass tc, int p) {
    const int n = class_dimension(tc, p);
    const int k0 = first_harmonic(tc);
    Eigen::VectorXd d(n);
    d(0) = 1.0;
    for (int j = 1; j < n; ++j) {
        const int k = k0 + 2 * j;
        double upper = p + k;
        double lower = p - (k - 2);
        if (tc == TrigClass::cos_even && j == 1) lower *= 2.0;
        d(j) = d(j - 1) * std::sqrt(upper / lower);
    }
    return d;
}

inline void check_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw Overflow(std::string(what) + " left the floating range");
    }
}

}  // namespace detail

/// Solves the Ince equation for the polynomial with the given indices.
///
/// Eigenvalues of each trigonometric class are sorted ascending; rank j is
/// assigned to the harmonic first_harmonic + 2j, which is the only harmonic
/// present at e = 0.
inline IncePolynomial solve_ince(const InceIndices &indices, double ellipticity) {
    validate(indices);
    if (!(ellipticity >= 0.0)) {
        throw NegativeEllipticity("ellipticity must be non-negative, got " + std::to_string(ellipticity));
    }
    IncePolynomial out;
    out.indices = indices;
    out.ellipticity = ellipticity;
    out.trig_class = trig_class_of(indices);
    const int p = indices.p;
    const int n = class_dimension(out.trig_class, p);
    const int rank = (indices.m - first_harmonic(out.trig_class)) / 2;
    out.coefficients.assign(static_cast<std::size_t>(n), 0.0);

    if (ellipticity == 0.0) {
        out.eigenvalue = static_cast<double>(indices.m) * indices.m;
        out.coefficients[static_cast<std::size_t>(rank)] = 1.0;
        return out;
    }

    const Eigen::MatrixXd L = detail::ince_operator(out.trig_class, p, ellipticity);
    const Eigen::VectorXd d = detail::symmetrizer(out.trig_class, p);
    Eigen::MatrixXd S = d.asDiagonal() * L * d.cwiseInverse().asDiagonal();
    S = 0.5 * (S + S.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
    out.eigenvalue = solver.eigenvalues()(rank);
    Eigen::VectorXd a = solver.eigenvectors().col(rank).cwiseQuotient(d);
    a.normalize();

    double sign_probe = 0.0;
    for (int j = 0; j < n; ++j) {
        const int k = first_harmonic(out.trig_class) + 2 * j;
        sign_probe += out.cosine() ? a(j) : k * a(j);
    }
    if (sign_probe < 0.0) a = -a;
    for (int j = 0; j < n; ++j) out.coefficients[static_cast<std::size_t>(j)] = a(j);
    return out;
}

/// Value of the series at the real (angular) argument v.
inline double eval_angular(const IncePolynomial &poly, double v) {
    if (poly.coefficients.empty()) return 0.0;
    // (cos kv, sin kv) advanced by rotation through 2v.
    const int k0 = poly.harmonic(0);
    double c = std::cos(k0 * v), s = std::sin(k0 * v);
    const double c2 = std::cos(2 * v), s2 = std::sin(2 * v);
    double sum = 0.0;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        sum += poly.coefficients[j] * (poly.cosine() ? c : s);
        const double cn = c * c2 - s * s2;
        s = s * c2 + c * s2;
        c = cn;
    }
    return sum;
}

/// Value, first and second derivative of the angular series at v.
struct AngularJet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

inline AngularJet eval_angular_jet(const IncePolynomial &poly, double v) {
    AngularJet jet;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        const double k = poly.harmonic(j);
        const double c = std::cos(k * v);
        const double s = std::sin(k * v);
        const double a = poly.coefficients[j];
        if (poly.cosine()) {
            jet.value += a * c;
            jet.d1 -= a * k * s;
            jet.d2 -= a * k * k * c;
        } else {
            jet.value += a * s;
            jet.d1 += a * k * c;
            jet.d2 -= a * k * k * s;
        }
    }
    return jet;
}

/// Value of the series at the imaginary argument iu, u >= 0. cos(k iu) =
/// cosh(ku); for sine series sin(k iu) = i sinh(ku) and the common factor i is
/// dropped, so the result is real.
inline double eval_radial(const IncePolynomial &poly, double u) {
    if (poly.coefficients.empty()) return 0.0;
    // cosh(ku), sinh(ku) from powers of e^u; k grows in steps of 2.
    const double eu = std::exp(u);
    const double emu = 1.0 / eu;
    const int k0 = poly.harmonic(0);
    double up = std::pow(eu, k0);
    double dn = std::pow(emu, k0);
    const double step_up = eu * eu;
    const double step_dn = emu * emu;
    double sum = 0.0;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        const double term = poly.cosine() ? 0.5 * (up + dn) : 0.5 * (up - dn);
        sum += poly.coefficients[j] * term;
        up *= step_up;
        dn *= step_dn;
    }
    detail::check_finite(sum, "radial Ince series");
    return sum;
}

/// Largest |y'' + e sin(2v) y' + (a - p e cos(2v)) y| over `samples` equally
/// spaced v in [0, 2pi), derivatives taken termwise.
inline double ode_residual(const IncePolynomial &poly, int samples) {
    if (samples < 2) throw InvalidArgument("ode_residual needs at least 2 samples");
    const double e = poly.ellipticity;
    const double p = poly.indices.p;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double v = 2.0 * std::numbers::pi * i / samples;
        const AngularJet y = eval_angular_jet(poly, v);
        const double r = y.d2 + e * std::sin(2 * v) * y.d1 + (poly.eigenvalue - p * e * std::cos(2 * v)) * y.value;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

/// Debug dump: "harmonic,coefficient" header then one row per basis function.
inline void write_coefficients_csv(std::ostream &out, const IncePolynomial &poly) {
    out << "harmonic,coefficient\n";
    out.precision(17);
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        out << poly.harmonic(j) << ',' << poly.coefficients[j] << '\n';
    }
}

}  // namespace incelab
