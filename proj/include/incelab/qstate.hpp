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

// Two-photon states over helical Ince-Gauss modes.
//
// Qubits use the computational basis |0> = IG+, |1> = IG-. Qutrit party A
// uses |k+> and party B |k->, k = 0, 1, 2, for the mode triples
// (p, m) = (2, 2), (3, 3), (4, 4). Joint basis index is i * dim_b + j.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <istream>
#include <iterator>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "incelab/errors.hpp"

namespace incelab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerances of the density-matrix invariants.
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Vector kron(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

/// A validated two-party density matrix.
class BipartiteState {
   public:
    /// Throws InvalidState unless rho is Hermitian, unit trace and PSD.
    BipartiteState(int dim_a, int dim_b, Matrix rho) : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)) {
        if (dim_a < 2 || dim_b < 2) throw InvalidState("party dimensions must be at least 2");
        const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
        if (rho_.rows() != d || rho_.cols() != d) throw InvalidState("density matrix size does not match dimensions");
        if ((rho_ - rho_.adjoint()).norm() >= kHermiticityTolerance) throw InvalidState("density matrix is not Hermitian");
        if (std::abs(rho_.trace() - 1.0) > kTraceTolerance) throw InvalidState("density matrix trace is not 1");
        Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kPsdTolerance) throw InvalidState("density matrix is not positive semidefinite");
    }

    static BipartiteState pure(int dim_a, int dim_b, const Vector &psi) {
        const Vector unit = psi / psi.norm();
        Matrix rho = unit * unit.adjoint();
        rho = 0.5 * (rho + rho.adjoint()).eval();
        return BipartiteState(dim_a, dim_b, rho);
    }

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }
    const Matrix &rho() const { return rho_; }

    double purity() const { return (rho_ * rho_).trace().real(); }
    double expectation(const Matrix &op) const { return (op * rho_).trace().real(); }

   private:
    int dim_a_;
    int dim_b_;
    Matrix rho_;
};

/// Maximally mixed state of the given party dimensions.
inline BipartiteState maximally_mixed(int dim_a, int dim_b) {
    const int d = dim_a * dim_b;
    return BipartiteState(dim_a, dim_b, Matrix::Identity(d, d) / static_cast<double>(d));
}

/// Basis ket |k> of a d-level system.
inline Vector basis_ket(int d, int k) {
    Vector v = Vector::Zero(d);
    v(k) = 1.0;
    return v;
}

// ---------------------------------------------------------------------------
// Qubits

namespace pauli {

inline Matrix x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline Matrix y() {
    Matrix m(2, 2);
    m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    return m;
}
inline Matrix z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace pauli

/// (|+-> + |-+>) / sqrt(2).
inline BipartiteState bell_psi_plus() {
    Vector psi = Vector::Zero(4);
    psi(1) = psi(2) = 1.0 / std::sqrt(2.0);
    return BipartiteState::pure(2, 2, psi);
}

/// Projector onto (e^{i phi}|+> + e^{-i phi}|->) / sqrt(2), the equator of the
/// mode Bloch sphere at azimuth phi (radians).
inline Matrix equatorial_projector(double phi) {
    Vector v(2);
    v << std::polar(1.0, phi), std::polar(1.0, -phi);
    v /= std::sqrt(2.0);
    return v * v.adjoint();
}

inline void require_dims(const BipartiteState &s, int a, int b, const char *what) {
    if (s.dim_a() != a || s.dim_b() != b) {
        throw DimensionMismatch(std::string(what) + " needs a " + std::to_string(a) + "x" + std::to_string(b) + " state");
    }
}

/// Born-rule probability Tr((A (x) B) rho), with negative rounding dust down
/// to -1e-12 clamped to zero.
inline double coincidence_probability(const BipartiteState &state, const Matrix &proj_a, const Matrix &proj_b) {
    if (proj_a.rows() != state.dim_a() || proj_a.cols() != state.dim_a() || proj_b.rows() != state.dim_b() ||
        proj_b.cols() != state.dim_b()) {
        throw DimensionMismatch("projector dimensions do not match the state");
    }
    const double p = state.expectation(kron(proj_a, proj_b));
    if (p < 0.0 && p >= -1e-12) return 0.0;
    return p;
}

struct FringePoint {
    double phase = 0.0;  ///< idler azimuth, radians
    double probability = 0.0;
};

/// Coincidence probability versus idler azimuth for a fixed signal azimuth,
/// from phi_start to phi_end inclusive in increments of step (radians).
inline std::vector<FringePoint> fringe_scan(const BipartiteState &state, double signal_phase, double phi_start,
                                            double phi_end, double step) {
    if (!(step > 0.0)) throw InvalidArgument("fringe step must be positive");
    const Matrix pa = equatorial_projector(signal_phase);
    const int count = static_cast<int>(std::floor((phi_end - phi_start) / step + 1e-9)) + 1;
    std::vector<FringePoint> out;
    for (int i = 0; i < std::max(count, 0); ++i) {
        const double phi = phi_start + i * step;
        out.push_back({phi, coincidence_probability(state, pa, equatorial_projector(phi))});
    }
    return out;
}

/// Least-squares fit P(phi) = offset + amplitude cos(frequency phi - phase).
struct FringeFit {
    double offset = 0.0;
    double amplitude = 0.0;
    double frequency = 0.0;  ///< radians of fringe phase per radian of azimuth
    double phase = 0.0;
    double residual = 0.0;   ///< root mean square

    double visibility() const { return offset > 0.0 ? std::abs(amplitude) / offset : 0.0; }
    double period() const { return 2.0 * std::numbers::pi / frequency; }
};

namespace detail {

inline FringeFit fit_at_frequency(const std::vector<FringePoint> &pts, double w) {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(pts.size()), 3);
    Eigen::VectorXd b(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const double phi = pts[static_cast<std::size_t>(i)].phase;
        a(i, 0) = 1.0;
        a(i, 1) = std::cos(w * phi);
        a(i, 2) = std::sin(w * phi);
        b(i) = pts[static_cast<std::size_t>(i)].probability;
    }
    const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
    FringeFit fit;
    fit.offset = c(0);
    fit.amplitude = std::hypot(c(1), c(2));
    fit.frequency = w;
    fit.phase = std::atan2(c(2), c(1));
    fit.residual = std::sqrt((a * c - b).squaredNorm() / static_cast<double>(a.rows()));
    return fit;
}

}  // namespace detail

/// Fits a sinusoid with free frequency in [w_lo, w_hi] (radians per radian).
/// The frequency is located by a coarse scan followed by golden-section
/// refinement of the linear least-squares residual.
inline FringeFit fit_fringe(const std::vector<FringePoint> &pts, double w_lo = 0.5, double w_hi = 4.0) {
    if (pts.size() < 4) throw InvalidArgument("fringe fit needs at least 4 points");
    constexpr int coarse = 200;
    double best_w = w_lo, best_r = INFINITY;
    for (int i = 0; i <= coarse; ++i) {
        const double w = w_lo + (w_hi - w_lo) * i / coarse;
        const double r = detail::fit_at_frequency(pts, w).residual;
        if (r < best_r) best_r = r, best_w = w;
    }
    const double h = (w_hi - w_lo) / coarse;
    double lo = std::max(w_lo, best_w - h), hi = std::min(w_hi, best_w + h);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 100; ++it) {
        const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
        if (detail::fit_at_frequency(pts, m1).residual < detail::fit_at_frequency(pts, m2).residual) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    return detail::fit_at_frequency(pts, 0.5 * (lo + hi));
}

/// Witness W = (1 - XX - YY + ZZ) / 4; negative values certify entanglement.
inline double witness_w(const BipartiteState &state) {
    require_dims(state, 2, 2, "witness_w");
    const Matrix id = Matrix::Identity(4, 4);
    const Matrix w = 0.25 * (id - kron(pauli::x(), pauli::x()) - kron(pauli::y(), pauli::y()) + kron(pauli::z(), pauli::z()));
    return state.expectation(w);
}

/// Steering value S = <XX>^2 + <YY>^2 + <ZZ>^2; S > 1 certifies steering.
inline double steering_s(const BipartiteState &state) {
    require_dims(state, 2, 2, "steering_s");
    double s = 0.0;
    for (const Matrix &p : {pauli::x(), pauli::y(), pauli::z()}) {
        const double c = state.expectation(kron(p, p));
        s += c * c;
    }
    return s;
}

/// v rho + (1 - v) 1 / d.
inline BipartiteState werner_mix(const BipartiteState &state, double v) {
    if (!(v >= 0.0 && v <= 1.0)) throw RangeError("Werner weight must lie in [0, 1]");
    const int d = state.dim();
    Matrix rho = v * state.rho() + (1.0 - v) * Matrix::Identity(d, d) / static_cast<double>(d);
    return BipartiteState(state.dim_a(), state.dim_b(), rho);
}

/// Werner weight reproducing a witness value on psi+: W = (1 - 3v) / 4.
inline double werner_weight_from_witness(double w) { return (1.0 - 4.0 * w) / 3.0; }

// ---------------------------------------------------------------------------
// Qutrits

/// a|0+0-> + b|1+1-> + c|2+2->; throws NormViolation unless the amplitudes
/// are normalized to 1e-10.
inline BipartiteState max_entangled_qutrit(std::complex<double> a, std::complex<double> b, std::complex<double> c) {
    const double n = std::norm(a) + std::norm(b) + std::norm(c);
    if (std::abs(n - 1.0) > 1e-10) throw NormViolation("qutrit amplitudes must satisfy |a|^2 + |b|^2 + |c|^2 = 1");
    Vector psi = Vector::Zero(9);
    psi(0) = a;
    psi(4) = b;
    psi(8) = c;
    return BipartiteState::pure(3, 3, psi);
}

inline BipartiteState max_entangled_qutrit() {
    const double w = 1.0 / std::sqrt(3.0);
    return max_entangled_qutrit(w, w, w);
}

/// |phi+_kl> = (|k+k-> + |l+l->) / sqrt(2).
inline Vector phi_plus(int k, int l) {
    Vector psi = Vector::Zero(9);
    psi(k * 3 + k) = psi(l * 3 + l) = 1.0 / std::sqrt(2.0);
    return psi;
}

/// Separable reference state (|0+0-><0+0-| + |1+1-><1+1-| + |2+2-><2+2-|) / 3.
inline BipartiteState correlated_separable_qutrit() {
    Matrix rho = Matrix::Zero(9, 9);
    for (int k = 0; k < 3; ++k) rho(k * 3 + k, k * 3 + k) = 1.0 / 3.0;
    return BipartiteState(3, 3, rho);
}

/// Equal mixture of |phi+_01>, |phi+_02>, |phi+_12>.
inline BipartiteState pairwise_bell_mixture() {
    Matrix rho = Matrix::Zero(9, 9);
    for (auto [k, l] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const Vector v = phi_plus(k, l);
        rho += v * v.adjoint() / 3.0;
    }
    return BipartiteState(3, 3, rho);
}

/// Two-level cut of a two-qutrit state: rho^{kl} on span{k, l} x span{k, l}
/// (local order k -> 0, l -> 1) and the population N_kl it carried.
struct SubspaceReduction {
    int k = 0;
    int l = 1;
    Matrix rho;  ///< 4x4, unit trace
    double weight = 0.0;
};

inline SubspaceReduction subspace_reduce(const BipartiteState &state, int k, int l) {
    require_dims(state, 3, 3, "subspace_reduce");
    if (k == l || k < 0 || l < 0 || k > 2 || l > 2) throw InvalidArgument("subspace indices must be distinct in {0, 1, 2}");
    const std::array<int, 2> local{k, l};
    std::array<Eigen::Index, 4> idx{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) idx[static_cast<std::size_t>(2 * a + b)] = local[static_cast<std::size_t>(a)] * 3 + local[static_cast<std::size_t>(b)];
    }
    Matrix sub(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) sub(r, c) = state.rho()(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    }
    SubspaceReduction out;
    out.k = k;
    out.l = l;
    out.weight = sub.trace().real();
    if (out.weight < 1e-14) {
        throw ZeroWeight("subspace (" + std::to_string(k) + "," + std::to_string(l) + ") carries no population");
    }
    out.rho = sub / out.weight;
    return out;
}

/// Embedded two-level operators |k><l| + |l><k|, i|k><l| - i|l><k| and
/// |k><k| - |l><l|, written in the local basis (k, l) of a reduction.
namespace subspace_ops {

inline Matrix sx() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline Matrix sy() {
    Matrix m(2, 2);
    m << 0, std::complex<double>(0, 1), std::complex<double>(0, -1), 0;
    return m;
}
inline Matrix sz() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace subspace_ops

/// g = Tr((sz (x) sz - sy (x) sy + sx (x) sx) rho^{kl}).
inline double g_subspace(const SubspaceReduction &r) {
    using namespace subspace_ops;
    const Matrix op = kron(sz(), sz()) - kron(sy(), sy()) + kron(sx(), sx());
    return (op * r.rho).trace().real();
}

struct DimensionWitness {
    double f = 0.0;
    std::array<double, 3> g{};       ///< pairs (0,1), (0,2), (1,2)
    std::array<double, 3> weight{};  ///< N_01, N_02, N_12
};

inline DimensionWitness dimension_witness(const BipartiteState &state) {
    DimensionWitness out;
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t i = 0; i < 3; ++i) {
        const SubspaceReduction r = subspace_reduce(state, pairs[i].first, pairs[i].second);
        out.g[i] = g_subspace(r);
        out.weight[i] = r.weight;
        out.f += out.g[i];
    }
    return out;
}

/// f(rho) = g(rho^01) + g(rho^02) + g(rho^12). Separable states give at most
/// 3, Schmidt-rank-2 states at most 6, and the maximum is 9.
inline double f_rho(const BipartiteState &state) { return dimension_witness(state).f; }

enum class DimensionClass { separable_compatible, two_dim_entangled_compatible, at_least_three_dim_entangled };

inline DimensionClass classify_dimension(double f) {
    if (f <= 3.0) return DimensionClass::separable_compatible;
    if (f <= 6.0) return DimensionClass::two_dim_entangled_compatible;
    return DimensionClass::at_least_three_dim_entangled;
}

inline std::string to_string(DimensionClass c) {
    switch (c) {
        case DimensionClass::separable_compatible:
            return "separable-compatible";
        case DimensionClass::two_dim_entangled_compatible:
            return "2d-entangled-compatible";
        case DimensionClass::at_least_three_dim_entangled:
            return "at-least-3d-entangled";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Random states

using Rng = std::mt19937_64;

/// Haar-random unit vector in C^d.
inline Vector haar_ket(int d, Rng &rng) {
    std::normal_distribution<double> normal;
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = std::complex<double>(normal(rng), normal(rng));
    return v / v.norm();
}

/// Haar-random d x d unitary (QR of a Ginibre matrix with phase fix).
inline Matrix haar_unitary(int d, Rng &rng) {
    std::normal_distribution<double> normal;
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(normal(rng), normal(rng));
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const std::complex<double> diag = r(j, j);
        if (std::abs(diag) > 0) q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

/// Mixture of between 1 and dim_a * dim_b random product states with
/// Dirichlet(1, ..., 1) weights.
inline BipartiteState sample_separable(Rng &rng, int dim_a = 3, int dim_b = 3) {
    std::uniform_int_distribution<int> terms_dist(1, dim_a * dim_b);
    std::exponential_distribution<double> expo(1.0);
    const int terms = terms_dist(rng);
    const int d = dim_a * dim_b;
    Matrix rho = Matrix::Zero(d, d);
    std::vector<double> w(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (double &x : w) total += (x = expo(rng));
    for (double x : w) {
        const Vector psi = kron(haar_ket(dim_a, rng), haar_ket(dim_b, rng));
        rho += (x / total) * psi * psi.adjoint();
    }
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return BipartiteState(dim_a, dim_b, rho);
}

inline BipartiteState sample_separable(std::uint64_t seed, int dim_a = 3, int dim_b = 3) {
    Rng rng(seed);
    return sample_separable(rng, dim_a, dim_b);
}

/// Pure state l1 |u1 v1> + l2 |u2 v2> with Haar-random local bases and
/// Schmidt coefficients drawn from a Haar-random unit vector in C^2.
inline BipartiteState sample_schmidt2(Rng &rng) {
    const Matrix ua = haar_unitary(3, rng);
    const Matrix ub = haar_unitary(3, rng);
    const Vector lam = haar_ket(2, rng);
    Vector psi = std::abs(lam(0)) * kron(Vector(ua.col(0)), Vector(ub.col(0))) +
                 std::abs(lam(1)) * kron(Vector(ua.col(1)), Vector(ub.col(1)));
    return BipartiteState::pure(3, 3, psi);
}

inline BipartiteState sample_schmidt2(std::uint64_t seed) {
    Rng rng(seed);
    return sample_schmidt2(rng);
}

/// Schmidt rank of a pure state: number of singular values of its
/// coefficient matrix above tol.
inline int schmidt_rank(const Vector &psi, int dim_a, int dim_b, double tol = 1e-10) {
    Matrix c(dim_a, dim_b);
    for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_b; ++j) c(i, j) = psi(i * dim_b + j);
    }
    Eigen::JacobiSVD<Matrix> svd(c);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > tol ? 1 : 0;
    return rank;
}

/// Each expected count p * total_pairs replaced by a Poisson draw.
inline std::vector<std::int64_t> poisson_counts(const std::vector<double> &probabilities, std::int64_t total_pairs,
                                                std::uint64_t seed) {
    if (total_pairs < 0) throw InvalidArgument("pair budget must be non-negative");
    Rng rng(seed);
    std::vector<std::int64_t> out;
    out.reserve(probabilities.size());
    for (double p : probabilities) {
        const double lambda = std::max(0.0, p) * static_cast<double>(total_pairs);
        if (lambda <= 0.0) {
            out.push_back(0);
            continue;
        }
        std::poisson_distribution<std::int64_t> dist(lambda);
        out.push_back(dist(rng));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Density-matrix files
//
// First line "dimA,dimB"; then the d x d entries in row-major order as
// "re,im" pairs. Any mix of commas and whitespace separates numbers, so one
// matrix row per line and one entry per line are both accepted.

inline BipartiteState read_state_csv(std::istream &in) {
    std::string header;
    if (!std::getline(in, header)) throw MalformedStateFile("empty state file");
    int da = 0, db = 0;
    {
        std::replace(header.begin(), header.end(), ',', ' ');
        std::istringstream hs(header);
        if (!(hs >> da >> db) || da < 2 || db < 2) throw MalformedStateFile("first line must be \"dimA,dimB\" with dimensions >= 2");
        std::string extra;
        if (hs >> extra) throw MalformedStateFile("unexpected text after the dimension line");
    }
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream bs(body);
    std::vector<double> numbers;
    std::string token;
    while (bs >> token) {
        try {
            std::size_t used = 0;
            numbers.push_back(std::stod(token, &used));
            if (used != token.size()) throw MalformedStateFile("bad number \"" + token + "\"");
        } catch (const std::logic_error &) {
            throw MalformedStateFile("bad number \"" + token + "\"");
        }
    }
    const std::size_t d = static_cast<std::size_t>(da) * static_cast<std::size_t>(db);
    if (numbers.size() != 2 * d * d) {
        throw MalformedStateFile("expected " + std::to_string(2 * d * d) + " numbers, found " + std::to_string(numbers.size()));
    }
    Matrix rho(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d * d; ++i) {
        rho(static_cast<Eigen::Index>(i / d), static_cast<Eigen::Index>(i % d)) = {numbers[2 * i], numbers[2 * i + 1]};
    }
    try {
        return BipartiteState(da, db, rho);
    } catch (const InvalidState &e) {
        throw MalformedStateFile(e.what());
    }
}

inline void write_state_csv(std::ostream &out, const BipartiteState &state) {
    out << state.dim_a() << ',' << state.dim_b() << '\n';
    out.precision(17);
    const Matrix &rho = state.rho();
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            out << (j ? "," : "") << rho(i, j).real() << ',' << rho(i, j).imag();
        }
        out << '\n';
    }
}

}  // namespace incelab
