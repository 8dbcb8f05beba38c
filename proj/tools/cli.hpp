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

// Command-line front end. Angles are degrees on the command line and radians
// inside the library.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "incelab/incelab.hpp"

namespace incelab::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidArguments = 2,
    kIoFailure = 3,
    kNonConvergence = 4,
    kMalformedStateFile = 5,
    kBoundViolation = 6,
};

class IoError : public Error {
   public:
    using Error::Error;
};

struct RunConfig {
    int p = 5;
    int m = 3;
    double eps = 2.0;
    double eps_ref = 3.0;
    double eps_min = 0.0;
    double eps_max = 6.0;
    int steps = 61;
    std::string kind = "plus";
    double a = 0.5;
    double phi_deg = 0.0;
    int grid_n = 512;
    std::optional<double> grid_l;
    std::vector<double> settings_deg{22.5, 67.5, 112.5, 157.5};
    double step_deg = 15.0;
    std::optional<std::int64_t> pairs;
    std::uint64_t seed = 1;
    int samples = 10000;
    std::string out = "incelab";
    bool ideal = false;
    std::optional<double> werner;
    std::string state_file;
};

namespace detail {

constexpr double kDegree = std::numbers::pi / 180.0;

inline std::ofstream open_output(const std::string &path, bool binary = false) {
    std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
    if (!f) throw IoError("cannot open " + path + " for writing");
    return f;
}

inline void finish(std::ofstream &f, const std::string &path) {
    f.close();
    if (!f) throw IoError("failed writing " + path);
}

inline ModeKind kind_of(const RunConfig &c) {
    auto k = parse_mode_kind(c.kind);
    if (!k) throw InvalidArgument("unknown mode kind '" + c.kind + "'");
    return *k;
}

inline ModeSpec spec_of(const RunConfig &c) {
    ModeSpec s{c.p, c.m, c.eps, kind_of(c), c.a, c.phi_deg * kDegree};
    validate(s);
    return s;
}

inline SamplingGrid grid_of(const RunConfig &c) {
    SamplingGrid g = default_grid(c.p, c.grid_n);
    if (c.grid_l) g.half_extent = *c.grid_l;
    validate(g);
    return g;
}

inline BipartiteState load_state(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open state file " + path);
    return read_state_csv(f);
}

// The state-file path when given, otherwise the named ideal state; --werner
// then mixes in white noise.
template <typename Ideal>
BipartiteState chosen_state(const RunConfig &c, Ideal &&ideal) {
    BipartiteState s = c.state_file.empty() ? ideal() : load_state(c.state_file);
    if (c.werner) s = werner_mix(s, *c.werner);
    return s;
}

inline std::string fmt(double x, int digits = 6) {
    std::ostringstream ss;
    ss << std::setprecision(digits) << x;
    return ss.str();
}

}  // namespace detail

inline int cmd_render(const RunConfig &c, std::ostream &out) {
    const ModeSpec spec = detail::spec_of(c);
    const ComplexField field = render_field(InceGaussMode(spec), detail::grid_of(c), true);
    const std::string paths[3] = {c.out + "_intensity.pgm", c.out + "_phase.pgm", c.out + "_field.csv"};
    {
        auto f = detail::open_output(paths[0], true);
        write_intensity_pgm(f, field);
        detail::finish(f, paths[0]);
    }
    {
        auto f = detail::open_output(paths[1], true);
        write_phase_pgm(f, field);
        detail::finish(f, paths[1]);
    }
    {
        auto f = detail::open_output(paths[2]);
        write_field_csv(f, field);
        detail::finish(f, paths[2]);
    }
    for (const std::string &p : paths) out << "wrote " << p << '\n';
    return kOk;
}

inline int cmd_singularities(const RunConfig &c, std::ostream &out) {
    const ComplexField field = render_field(InceGaussMode(detail::spec_of(c)), detail::grid_of(c), true);
    const VortexScan scan = find_singularities(field);
    auto f = detail::open_output(c.out);
    write_singularities_csv(f, scan.singularities);
    detail::finish(f, c.out);
    out << "singularities: " << scan.singularities.size() << '\n';
    out << "net charge within waist: " << net_charge(scan.singularities, 1.0) << '\n';
    if (scan.resolution_warning) out << "warning: lattice under-resolves the phase, increase --grid-n\n";
    out << "wrote " << c.out << '\n';
    return kOk;
}

inline int cmd_overlap(const RunConfig &c, std::ostream &out) {
    validate(InceIndices{c.p, c.m, Parity::even});
    const OverlapCurve curve = overlap_curve(c.p, c.m, detail::kind_of(c), c.eps_ref, c.eps_min, c.eps_max, c.steps,
                                             detail::grid_of(c));
    auto f = detail::open_output(c.out);
    write_overlap_csv(f, curve);
    detail::finish(f, c.out);
    const std::size_t best = curve.argmax();
    double least = curve.overlaps.front();
    for (double v : curve.overlaps) least = std::min(least, v);
    out << "maximum overlap " << detail::fmt(curve.overlaps[best]) << " at epsilon "
        << detail::fmt(curve.ellipticities[best]) << '\n';
    out << "minimum overlap " << detail::fmt(least) << '\n';
    out << "wrote " << c.out << '\n';
    return kOk;
}

inline int cmd_fringes(const RunConfig &c, std::ostream &out) {
    if (c.settings_deg.empty()) throw InvalidArgument("--settings needs at least one angle");
    if (!(c.step_deg > 0.0)) throw InvalidArgument("--step must be positive");
    if (c.pairs && *c.pairs < 0) throw InvalidArgument("--pairs must be non-negative");
    validate(InceIndices{c.p, c.m, Parity::odd});

    const OpticalQubit qubit(c.p, c.m, c.eps, detail::grid_of(c));
    const BipartiteState psi = bell_psi_plus();
    const int rows = static_cast<int>(std::floor(180.0 / c.step_deg + 1e-9)) + 1;
    std::vector<Matrix> idler(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) idler[static_cast<std::size_t>(r)] = qubit.equatorial(r * c.step_deg * detail::kDegree);

    const std::size_t cols = c.settings_deg.size();
    std::vector<double> prob(static_cast<std::size_t>(rows) * cols);
    for (std::size_t s = 0; s < cols; ++s) {
        const Matrix signal = qubit.equatorial(c.settings_deg[s] * detail::kDegree);
        for (int r = 0; r < rows; ++r) {
            prob[static_cast<std::size_t>(r) * cols + s] = coincidence_probability(psi, signal, idler[static_cast<std::size_t>(r)]);
        }
    }
    std::vector<std::int64_t> counts;
    if (c.pairs) counts = poisson_counts(prob, *c.pairs, c.seed);

    auto f = detail::open_output(c.out);
    f << "phi2_deg";
    for (double s : c.settings_deg) f << ",p_" << s;
    if (c.pairs) {
        for (double s : c.settings_deg) f << ",counts_" << s;
    }
    f << '\n' << std::setprecision(17);
    for (int r = 0; r < rows; ++r) {
        f << r * c.step_deg;
        for (std::size_t s = 0; s < cols; ++s) f << ',' << prob[static_cast<std::size_t>(r) * cols + s];
        if (c.pairs) {
            for (std::size_t s = 0; s < cols; ++s) f << ',' << counts[static_cast<std::size_t>(r) * cols + s];
        }
        f << '\n';
    }
    detail::finish(f, c.out);

    for (std::size_t s = 0; s < cols; ++s) {
        std::vector<FringePoint> pts;
        for (int r = 0; r < rows; ++r) pts.push_back({r * c.step_deg * detail::kDegree, prob[static_cast<std::size_t>(r) * cols + s]});
        const FringeFit fit = fit_fringe(pts);
        out << "setting " << c.settings_deg[s] << " deg: visibility " << detail::fmt(fit.visibility()) << ", period "
            << detail::fmt(fit.period() / detail::kDegree) << " deg\n";
    }
    out << "wrote " << c.out << '\n';
    return kOk;
}

inline int cmd_witness(const RunConfig &c, std::ostream &out) {
    const BipartiteState s = detail::chosen_state(c, bell_psi_plus);
    const double w = witness_w(s), st = steering_s(s);
    out << "W = " << detail::fmt(w, 10) << '\n';
    out << "S = " << detail::fmt(st, 10) << '\n';
    out << "entanglement (W < 0): " << (w < 0.0 ? "detected" : "not detected") << '\n';
    out << "steering (S > 1): " << (st > 1.0 ? "detected" : "not detected") << '\n';
    return kOk;
}

inline int cmd_dimwitness(const RunConfig &c, std::ostream &out) {
    const BipartiteState s = detail::chosen_state(c, [] { return max_entangled_qutrit(); });
    const DimensionWitness dw = dimension_witness(s);
    static constexpr const char *kPairs[3] = {"01", "02", "12"};
    out << "f = " << detail::fmt(dw.f, 10) << '\n';
    for (int i = 0; i < 3; ++i) {
        out << "g" << kPairs[i] << " = " << detail::fmt(dw.g[i], 10) << ", N" << kPairs[i] << " = "
            << detail::fmt(dw.weight[i], 10) << '\n';
    }
    out << "class: " << to_string(classify_dimension(dw.f)) << '\n';
    return kOk;
}

inline int cmd_boundscheck(const RunConfig &c, std::ostream &out) {
    if (c.samples < 1) throw InvalidArgument("--samples must be at least 1");
    constexpr double slack = 1e-7;
    Rng rng(c.seed);
    double worst_sep = -9.0, worst_s2 = -9.0;
    int bad_sep = 0, bad_s2 = 0, skipped = 0;
    for (int i = 0; i < c.samples; ++i) {
        try {
            const double f = f_rho(sample_separable(rng));
            worst_sep = std::max(worst_sep, f);
            bad_sep += f > 3.0 + slack;
        } catch (const ZeroWeight &) {
            ++skipped;
        }
        try {
            const double f = f_rho(sample_schmidt2(rng));
            worst_s2 = std::max(worst_s2, f);
            bad_s2 += f > 6.0 + slack;
        } catch (const ZeroWeight &) {
            ++skipped;
        }
    }
    out << std::setprecision(12);
    out << "separable: " << c.samples << " samples, max f = " << worst_sep << ", violations of f <= 3: " << bad_sep << '\n';
    out << "schmidt-rank-2: " << c.samples << " samples, max f = " << worst_s2 << ", violations of f <= 6: " << bad_s2
        << '\n';
    if (skipped) out << "skipped (empty subspace): " << skipped << '\n';
    return bad_sep + bad_s2 == 0 ? kOk : kBoundViolation;
}

namespace detail {

inline void add_mode_flags(CLI::App *cmd, RunConfig &c, bool with_kind) {
    cmd->add_option("--p", c.p, "mode order");
    cmd->add_option("--m", c.m, "mode degree");
    cmd->add_option("--eps", c.eps, "ellipticity");
    if (with_kind) {
        cmd->add_option("--kind", c.kind, "even, odd, plus, minus or bloch");
        cmd->add_option("--a", c.a, "Bloch weight of IG+ (kind bloch)");
        cmd->add_option("--phi", c.phi_deg, "Bloch azimuth in degrees (kind bloch)");
    }
}

inline void add_grid_flags(CLI::App *cmd, RunConfig &c) {
    cmd->add_option("--grid-n", c.grid_n, "samples per axis");
    cmd->add_option("--grid-l", c.grid_l, "half extent in waists (default sqrt(p) + 3)");
}

inline void add_state_flags(CLI::App *cmd, RunConfig &c) {
    auto *file = cmd->add_option("--state-file", c.state_file, "density matrix CSV");
    auto *ideal = cmd->add_flag("--ideal", c.ideal, "use the ideal state (default)");
    ideal->excludes(file);
    cmd->add_option("--werner", c.werner, "mix with white noise, keeping weight v");
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig c;
    CLI::App app{"Ince-Gauss mode and entanglement toolkit", "incelab"};
    app.require_subcommand(1);

    auto *render = app.add_subcommand("render", "write intensity, phase and field files for one mode");
    detail::add_mode_flags(render, c, true);
    detail::add_grid_flags(render, c);
    render->add_option("--out", c.out, "output prefix");

    auto *sing = app.add_subcommand("singularities", "list phase vortices of one mode as CSV");
    detail::add_mode_flags(sing, c, true);
    detail::add_grid_flags(sing, c);
    sing->add_option("--out", c.out, "CSV path")->required();

    auto *ovl = app.add_subcommand("overlap", "overlap against a reference ellipticity as CSV");
    ovl->add_option("--p", c.p, "mode order");
    ovl->add_option("--m", c.m, "mode degree");
    ovl->add_option("--kind", c.kind, "even, odd, plus or minus");
    ovl->add_option("--eps-ref", c.eps_ref, "reference ellipticity");
    ovl->add_option("--eps-min", c.eps_min, "scan start");
    ovl->add_option("--eps-max", c.eps_max, "scan end");
    ovl->add_option("--steps", c.steps, "number of samples");
    detail::add_grid_flags(ovl, c);
    ovl->add_option("--out", c.out, "CSV path")->required();

    auto *fr = app.add_subcommand("fringes", "coincidence fringes of the mode Bell state as CSV");
    detail::add_mode_flags(fr, c, false);
    detail::add_grid_flags(fr, c);
    fr->add_option("--settings", c.settings_deg, "signal azimuths in degrees")->delimiter(',');
    fr->add_option("--step", c.step_deg, "idler azimuth step in degrees");
    fr->add_option("--pairs", c.pairs, "add Poisson counts for this many pairs");
    fr->add_option("--seed", c.seed, "random seed");
    fr->add_option("--out", c.out, "CSV path")->required();

    auto *wit = app.add_subcommand("witness", "entanglement witness and steering value of a qubit pair");
    detail::add_state_flags(wit, c);

    auto *dim = app.add_subcommand("dimwitness", "three-dimensional correlation function of a qutrit pair");
    detail::add_state_flags(dim, c);

    auto *bc = app.add_subcommand("boundscheck", "Monte-Carlo check of the separable and Schmidt-rank-2 bounds");
    bc->add_option("--samples", c.samples, "samples per family");
    bc->add_option("--seed", c.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        if (render->parsed()) return cmd_render(c, out);
        if (sing->parsed()) return cmd_singularities(c, out);
        if (ovl->parsed()) return cmd_overlap(c, out);
        if (fr->parsed()) return cmd_fringes(c, out);
        if (wit->parsed()) return cmd_witness(c, out);
        if (dim->parsed()) return cmd_dimwitness(c, out);
        if (bc->parsed()) return cmd_boundscheck(c, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const NonConvergence &e) {
        err << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const MalformedStateFile &e) {
        err << "error: " << e.what() << '\n';
        return kMalformedStateFile;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }
    return kInvalidArguments;
}

/// Convenience overload for tests: arguments exclude the program name.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"incelab"};
    for (const std::string &a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace incelab::cli
