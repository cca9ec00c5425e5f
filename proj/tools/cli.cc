// Copyright 2026 The hms Authors
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

#include "cli.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <fstream>
#include <numbers>
#include <optional>

#include "CLI11.hpp"
#include "hms/analysis.h"
#include "hms/error.h"
#include "hms/operational.h"
#include "hms/singlet.h"
#include "hms/sphere.h"
#include "hms/version.h"
#include "table.h"

namespace hms::cli {

namespace {

struct OutputArgs {
    std::string format = "csv";
    std::string path;
    double tolerance = Tolerance::kAnalyticDefault;
};

// Either two absolute axes or one relative coplanar angle.
struct AxisArgs {
    double theta1 = 0.0;
    double phi1 = 0.0;
    double theta2 = 0.0;
    double phi2 = 0.0;
    std::optional<double> theta;

    std::pair<Direction, Direction> resolve() const {
        if (theta) {
            return {Direction::from_angles(0.0), Direction::from_angles(*theta)};
        }
        return {Direction::from_angles(theta1, phi1), Direction::from_angles(theta2, phi2)};
    }
};

struct Args {
    OutputArgs output;
    AxisArgs axes;
    double epsilon = 1.0;
    // single
    double state_r = 1.0;
    double state_theta = 0.0;
    double state_phi = 0.0;
    double dir_theta = 0.0;
    double dir_phi = 0.0;
    // simulate
    uint64_t trials = 1'000'000;
    uint64_t seed = 0;
    std::string order = "left-first";
    unsigned workers = 0;
    // chsh
    double a = 0.0;
    double a_prime = std::numbers::pi / 2;
    double b = std::numbers::pi / 4;
    double b_prime = 3 * std::numbers::pi / 4;
    // scan
    std::vector<double> epsilons;
    std::vector<double> thetas;
    int theta_points = 181;
    // vessels
    std::string kind;
};

void add_output_options(CLI::App *cmd, OutputArgs &o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", o.path, "Write to this file instead of standard output");
    cmd->add_option("--tolerance", o.tolerance, "Absolute tolerance on probability residuals")
        ->capture_default_str();
}

void add_epsilon_option(CLI::App *cmd, double &epsilon) {
    cmd->add_option("--epsilon", epsilon, "Elastic half-length in [0, 1]")->required();
}

void add_axis_options(CLI::App *cmd, AxisArgs &axes) {
    auto *t1 = cmd->add_option("--theta1", axes.theta1, "Left axis polar angle (radians)");
    auto *p1 = cmd->add_option("--phi1", axes.phi1, "Left axis azimuth (radians)");
    auto *t2 = cmd->add_option("--theta2", axes.theta2, "Right axis polar angle (radians)");
    auto *p2 = cmd->add_option("--phi2", axes.phi2, "Right axis azimuth (radians)");
    cmd->add_option("--theta", axes.theta, "Relative angle between coplanar axes (radians)")
        ->excludes(t1)
        ->excludes(p1)
        ->excludes(t2)
        ->excludes(p2);
}

Table single_table(const Args &args) {
    BlochState state = BlochState::from_spherical(args.state_r, args.state_theta, args.state_phi);
    Direction axis = Direction::from_angles(args.dir_theta, args.dir_phi);
    Epsilon eps(args.epsilon);
    OutcomeProb p = outcome_probability(state, axis, eps);
    return {{"epsilon", "projection", "p_yes", "p_no"}, {{eps.value(), projection(state, axis), p.p_yes(), p.p_no()}}};
}

Table joint_table(const Args &args) {
    auto [u1, u2] = args.axes.resolve();
    Epsilon eps(args.epsilon);
    JointOutcomeProb j = joint_distribution_analytic(u1, u2, eps);
    return {{"epsilon", "cos_theta", "p1", "p2", "p3", "p4", "E"},
            {{eps.value(), u1.dot(u2), j.p1(), j.p2(), j.p3(), j.p4(), correlation(j)}}};
}

Table simulate_table(const Args &args) {
    auto [u1, u2] = args.axes.resolve();
    JointTestSpec spec{u1, u2, Epsilon(args.epsilon), parse_test_order(args.order)};
    SimulationResult result = simulate(spec, args.trials, args.seed, args.workers);
    JointOutcomeProb analytic = joint_distribution_analytic(u1, u2, spec.eps, spec.order);
    Table table{{"outcome", "count", "frequency", "analytic"}, {}};
    const char *labels[] = {"x1", "x2", "x3", "x4"};
    for (int k = 0; k < 4; ++k) {
        table.rows.push_back(
            {std::string(labels[k]), result.counts[k], result.frequencies.values()[k], analytic.values()[k]});
    }
    return table;
}

const std::vector<std::string> kReportColumns = {
    "compatible",      "separated",       "classical_left",  "classical_right", "classical_joint",
    "compat_r1",       "compat_r2",       "compat_r3",       "compat_r4",       "sep_r1",
    "sep_r2",          "sep_r3",          "sep_r4",
};

void append_report(std::vector<Cell> &row, const ClassificationReport &r) {
    row.insert(row.end(), {r.compatible, r.separated, r.classical_left, r.classical_right, r.classical_joint});
    for (double v : r.compatibility_residuals) {
        row.emplace_back(v);
    }
    for (double v : r.separability_residuals) {
        row.emplace_back(v);
    }
}

void append_triple(std::vector<Cell> &row, const ExperimentTriple &t) {
    row.insert(row.end(), {t.left.p_yes(), t.left.p_no(), t.right.p_yes(), t.right.p_no(), t.joint.p1(),
                           t.joint.p2(), t.joint.p3(), t.joint.p4()});
}

const std::vector<std::string> kTripleColumns = {
    "left_p_yes", "left_p_no", "right_p_yes", "right_p_no", "p1", "p2", "p3", "p4",
};

Table classify_table(const Args &args) {
    auto [u1, u2] = args.axes.resolve();
    Epsilon eps(args.epsilon);
    ExperimentTriple triple = experiment_triple(u1, u2, eps);
    ClassificationReport report = classify(triple, Tolerance(args.output.tolerance));
    Table table{{"epsilon", "cos_theta"}, {{eps.value(), u1.dot(u2)}}};
    table.columns.insert(table.columns.end(), kTripleColumns.begin(), kTripleColumns.end());
    table.columns.insert(table.columns.end(), kReportColumns.begin(), kReportColumns.end());
    append_triple(table.rows[0], triple);
    append_report(table.rows[0], report);
    return table;
}

Table chsh_table(const Args &args) {
    Epsilon eps(args.epsilon);
    ChshResult r = chsh(ChshSetup::coplanar(args.a, args.a_prime, args.b, args.b_prime, eps));
    return {{"epsilon", "E_ab", "E_ab_prime", "E_a_prime_b", "E_a_prime_b_prime", "S"},
            {{eps.value(), r.e_ab, r.e_ab_prime, r.e_a_prime_b, r.e_a_prime_b_prime, r.s}}};
}

Table scan_command_table(const Args &args) {
    std::vector<double> thetas = args.thetas.empty() ? theta_grid(args.theta_points) : args.thetas;
    return scan_table(scan(args.epsilons, thetas, Tolerance(args.output.tolerance)));
}

Table vessels_table(const Args &args) {
    VesselsKind kind = parse_vessels_kind(args.kind);
    ExperimentTriple triple = vessels_scenario(kind);
    ClassificationReport report = classify(triple, Tolerance(args.output.tolerance));
    Table table{{"kind"}, {{std::string(to_string(kind))}}};
    table.columns.insert(table.columns.end(), kTripleColumns.begin(), kTripleColumns.end());
    table.columns.insert(table.columns.end(), kReportColumns.begin(), kReportColumns.end());
    append_triple(table.rows[0], triple);
    append_report(table.rows[0], report);
    return table;
}

std::map<std::string, std::string> given_flags(const CLI::App &cmd) {
    std::map<std::string, std::string> flags;
    for (const CLI::Option *opt : cmd.get_options()) {
        if (opt->count() > 0 && opt->get_single_name() != "help") {
            flags[opt->get_single_name()] = fmt::format("{}", fmt::join(opt->results(), ","));
        }
    }
    return flags;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hidden-measurement sphere model: single spins, rod-coupled singlets, CHSH and classification"};
    app.name("hms");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Args a;

    auto *single = app.add_subcommand("single", "Outcome probabilities of one elastic test on one sphere");
    add_epsilon_option(single, a.epsilon);
    single->add_option("--state-r", a.state_r, "State radius in [0, 1]")->capture_default_str();
    single->add_option("--state-theta", a.state_theta, "State polar angle (radians)")->capture_default_str();
    single->add_option("--state-phi", a.state_phi, "State azimuth (radians)")->capture_default_str();
    single->add_option("--dir-theta", a.dir_theta, "Measurement polar angle (radians)")->capture_default_str();
    single->add_option("--dir-phi", a.dir_phi, "Measurement azimuth (radians)")->capture_default_str();
    add_output_options(single, a.output);

    auto *joint = app.add_subcommand("joint", "Analytic joint distribution on the singlet");
    add_epsilon_option(joint, a.epsilon);
    add_axis_options(joint, a.axes);
    add_output_options(joint, a.output);

    auto *sim = app.add_subcommand("simulate", "Monte Carlo joint tests on the singlet");
    add_epsilon_option(sim, a.epsilon);
    add_axis_options(sim, a.axes);
    sim->add_option("--trials", a.trials, "Number of joint tests")->capture_default_str();
    sim->add_option("--seed", a.seed, "Random seed")->required();
    sim->add_option("--order", a.order, "Which sub-test runs first")
        ->check(CLI::IsMember({"left-first", "right-first"}))
        ->capture_default_str();
    sim->add_option("--workers", a.workers, "Worker threads (0 = all cores); does not change results");
    add_output_options(sim, a.output);

    auto *cls = app.add_subcommand("classify", "Compatibility / separability / classicality on the singlet");
    add_epsilon_option(cls, a.epsilon);
    add_axis_options(cls, a.axes);
    add_output_options(cls, a.output);

    auto *bell = app.add_subcommand("chsh", "CHSH value for coplanar settings");
    add_epsilon_option(bell, a.epsilon);
    bell->add_option("--a", a.a, "Left setting a (polar angle, radians)")->capture_default_str();
    bell->add_option("--a-prime", a.a_prime, "Left setting a'")->capture_default_str();
    bell->add_option("--b", a.b, "Right setting b")->capture_default_str();
    bell->add_option("--b-prime", a.b_prime, "Right setting b'")->capture_default_str();
    add_output_options(bell, a.output);

    auto *sc = app.add_subcommand("scan", "Classification table over an (epsilon, theta) grid");
    sc->add_option("--epsilon", a.epsilons, "Epsilon values")->delimiter(',')->required();
    auto *theta_list = sc->add_option("--theta", a.thetas, "Relative angles (radians)")->delimiter(',');
    sc->add_option("--theta-points", a.theta_points, "Evenly spaced angles on [0, pi]")
        ->excludes(theta_list)
        ->capture_default_str();
    add_output_options(sc, a.output);

    auto *ves = app.add_subcommand("vessels", "Connected-vessels scenarios");
    ves->add_option("--kind", a.kind, "Scenario")
        ->check(CLI::IsMember({"alpha-alpha", "alpha-beta"}))
        ->required();
    add_output_options(ves, a.output);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("hms");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CLI::App *cmd = app.get_subcommands().front();
    Meta meta{cmd->get_name(), std::nullopt, given_flags(*cmd)};
    Table table;
    try {
        Tolerance checked_tolerance(a.output.tolerance);
        (void)checked_tolerance;
        if (cmd == single) {
            table = single_table(a);
        } else if (cmd == joint) {
            table = joint_table(a);
        } else if (cmd == sim) {
            meta.seed = a.seed;
            table = simulate_table(a);
        } else if (cmd == cls) {
            table = classify_table(a);
        } else if (cmd == bell) {
            table = chsh_table(a);
        } else if (cmd == sc) {
            table = scan_command_table(a);
        } else {
            table = vessels_table(a);
        }
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    std::string text = a.output.format == "json" ? to_json(table, meta) : to_csv(table);
    if (a.output.path.empty()) {
        out << text;
        out.flush();
        return out ? kExitOk : kExitIo;
    }
    std::ofstream file(a.output.path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << a.output.path << " for writing\n";
        return kExitIo;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing " << a.output.path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace hms::cli
