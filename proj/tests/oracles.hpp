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

// Reference computations written independently of the library code paths.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "incelab/incelab.hpp"

namespace oracle {

using incelab::cplx;

/// Every Ince eigenvalue of order p (both parities), from the operator acting
/// on exp(ikv), k = -p, -p+2, ..., p. That span is invariant, and the matrix is
/// neither folded nor symmetrized.
inline std::vector<double> ince_spectrum(int p, double e) {
    const int n = p + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        const int k = -p + 2 * c;
        a(c, c) = k * k;
        if (c + 1 < n) a(c + 1, c) = 0.5 * e * (p - k);
        if (c >= 1) a(c - 1, c) = 0.5 * e * (p + k);
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i).real());
    std::sort(out.begin(), out.end());
    return out;
}

/// |y'' + e sin(2v) y' + (a - p e cos(2v)) y| at v, with the series and its
/// derivatives summed directly from the stored coefficients.
inline double ince_residual(const incelab::IncePolynomial &poly, double v) {
    double y = 0, dy = 0, d2y = 0;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        const double k = poly.harmonic(j), c = poly.coefficients[j];
        if (poly.cosine()) {
            y += c * std::cos(k * v);
            dy -= c * k * std::sin(k * v);
            d2y -= c * k * k * std::cos(k * v);
        } else {
            y += c * std::sin(k * v);
            dy += c * k * std::cos(k * v);
            d2y -= c * k * k * std::sin(k * v);
        }
    }
    const double e = poly.ellipticity;
    const int p = poly.indices.p;
    return std::abs(d2y + e * std::sin(2 * v) * dy + (poly.eigenvalue - p * e * std::cos(2 * v)) * y);
}

/// Elliptic coordinates from the two focal distances r1, r2:
/// cosh u = (r1 + r2) / 2f, cos v = (r1 - r2) / 2f, sin v has the sign of y.
inline std::pair<double, double> elliptic_from_foci(double x, double y, double f) {
    const double r1 = std::hypot(x + f, y), r2 = std::hypot(x - f, y);
    const double u = std::acosh(std::max(1.0, (r1 + r2) / (2 * f)));
    double v = std::acos(std::clamp((r1 - r2) / (2 * f), -1.0, 1.0));
    if (y < 0) v = 2 * std::numbers::pi - v;
    return {u, v};
}

/// Ince-Gauss amplitude from the raw series: N C(iu) C(v) exp(-r^2), waist 1.
inline double ince_gauss_part(const incelab::IncePolynomial &poly, double norm, double x, double y) {
    const auto [u, v] = elliptic_from_foci(x, y, std::sqrt(poly.ellipticity / 2));
    double radial = 0, angular = 0;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        const double k = poly.harmonic(j), c = poly.coefficients[j];
        radial += c * (poly.cosine() ? std::cosh(k * u) : std::sinh(k * u));
        angular += c * (poly.cosine() ? std::cos(k * v) : std::sin(k * v));
    }
    return norm * radial * angular * std::exp(-(x * x + y * y));
}

/// Generalized Laguerre polynomial by its explicit sum.
inline double laguerre(int n, int alpha, double x) {
    double s = 0;
    for (int i = 0; i <= n; ++i) {
        s += std::pow(-1.0, i) * std::tgamma(n + alpha + 1.0) /
             (std::tgamma(n - i + 1.0) * std::tgamma(alpha + i + 1.0) * std::tgamma(i + 1.0)) * std::pow(x, i);
    }
    return s;
}

/// Laguerre-Gauss LG_{n,l} at the waist, w0 = 1, in polar form.
inline cplx laguerre_gauss(int n, int l, double x, double y) {
    const double r = std::hypot(x, y);
    const int al = std::abs(l);
    double norm = 2.0 / std::numbers::pi;
    for (int i = n + 1; i <= n + al; ++i) norm /= i;
    return std::sqrt(norm) * std::pow(std::numbers::sqrt2 * r, al) * laguerre(n, al, 2 * r * r) * std::exp(-r * r) *
           std::polar(1.0, l * std::atan2(y, x));
}

/// Tr(A rho) for a density matrix built from explicit outer products.
inline Eigen::MatrixXcd outer(const Eigen::VectorXcd &a) { return a * a.adjoint(); }

/// Measured witness and steering values for the five helical mode pairs.
struct TableRow {
    int p, m;
    double witness, steering;
};
inline constexpr TableRow kTableOne[5] = {
    {2, 2, -0.4847, 2.879}, {3, 3, -0.4897, 2.918}, {4, 4, -0.4905, 2.925}, {4, 2, -0.4581, 2.675}, {5, 3, -0.4784, 2.830},
};

}  // namespace oracle
