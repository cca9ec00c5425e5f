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

#include "hms/singlet.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "hms/error.h"
#include "test_util.h"

using namespace hms;

namespace {

constexpr double kPi = std::numbers::pi;

const Direction kZ = Direction::from_angles(0.0);

void expect_table(const JointOutcomeProb &j, const std::array<double, 4> &expected, double tol) {
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(j.values()[k], expected[k], tol) << "cell x" << k + 1;
    }
}

}  // namespace

TEST(CoupledState, singlet_preparation) {
    EXPECT_TRUE(CoupledState::singlet().is_singlet());
    CoupledState loose = CoupledState::singlet();
    loose.rod_engaged = false;
    EXPECT_FALSE(loose.is_singlet());
    CoupledState moved{BlochState::from_spherical(0.5, 1.0), BlochState::center(), true};
    EXPECT_FALSE(moved.is_singlet());

    RandomStream rng(1);
    JointTestSpec spec{kZ, kZ, Epsilon(1.0)};
    EXPECT_THROW(run_joint_trial(moved, spec, rng), ValidationError);
    EXPECT_THROW(run_joint_trial(loose, spec, rng), ValidationError);
    EXPECT_NO_THROW(run_joint_trial(CoupledState::singlet(), spec, rng));
}

TEST(JointDistribution, quantum_limit_table) {
    for (int k = 0; k <= 36; ++k) {
        double theta = k * kPi / 36;
        auto j = joint_distribution_analytic(kZ, Direction::from_angles(theta), Epsilon(1.0));
        double s2 = 0.5 * std::pow(std::sin(theta / 2), 2);
        double c2 = 0.5 * std::pow(std::cos(theta / 2), 2);
        expect_table(j, {s2, c2, c2, s2}, 1e-12);
    }
    auto aligned = joint_distribution_analytic(kZ, kZ, Epsilon(1.0));
    EXPECT_EQ(aligned, JointOutcomeProb(0, 0.5, 0.5, 0));
}

TEST(JointDistribution, deterministic_limit) {
    Epsilon zero(0.0);
    EXPECT_EQ(joint_distribution_analytic(kZ, Direction::from_angles(1.0), zero), JointOutcomeProb(0, 1, 0, 0));
    EXPECT_EQ(joint_distribution_analytic(kZ, Direction::from_angles(2.0), zero), JointOutcomeProb(1, 0, 0, 0));
    // Orthogonal axes built from vectors give c = 0 exactly: the "<=" side.
    auto x = Direction::from_vector({1.0, 0.0, 0.0});
    EXPECT_EQ(joint_distribution_analytic(kZ, x, zero), JointOutcomeProb(1, 0, 0, 0));
}

TEST(JointDistribution, matches_closed_form_table) {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        auto u1 = fixtures::random_direction(gen);
        auto u2 = fixtures::random_direction(gen);
        double e = i % 50 == 0 ? 0.0 : unit(gen);
        auto j = joint_distribution_analytic(u1, u2, Epsilon(e));
        expect_table(j, fixtures::singlet_table(u1.dot(u2), e), 1e-14);
    }
}

TEST(JointDistribution, boundary_uses_clamped_branch) {
    // Axes with c = 0.5 exactly: polar angle pi/3 is not exact, so build it.
    auto u2 = Direction::from_vector({std::sqrt(0.75), 0.0, 0.5});
    ASSERT_EQ(kZ.dot(u2), 0.5);
    EXPECT_EQ(joint_distribution_analytic(kZ, u2, Epsilon(0.5)), JointOutcomeProb(0, 0.5, 0.5, 0));
    auto u3 = Direction::from_vector({std::sqrt(0.75), 0.0, -0.5});
    EXPECT_EQ(joint_distribution_analytic(kZ, u3, Epsilon(0.5)), JointOutcomeProb(0.5, 0, 0, 0.5));
}

TEST(JointDistribution, order_invariant_and_fair_marginals) {
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        auto u1 = fixtures::random_direction(gen);
        auto u2 = fixtures::random_direction(gen);
        Epsilon eps(unit(gen));
        auto lf = joint_distribution_analytic(u1, u2, eps, TestOrder::kLeftFirst);
        auto rf = joint_distribution_analytic(u1, u2, eps, TestOrder::kRightFirst);
        for (size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(lf.values()[k], rf.values()[k], 1e-15);
        }
        EXPECT_NEAR(lf.left_marginal().p_yes(), 0.5, 1e-15);
        EXPECT_NEAR(lf.right_marginal().p_yes(), 0.5, 1e-15);
    }
}

TEST(JointDistribution, perfect_correlations_at_the_poles) {
    for (double e : {0.01, 0.3, 0.99, 1.0}) {
        EXPECT_EQ(joint_distribution_analytic(kZ, kZ, Epsilon(e)), JointOutcomeProb(0, 0.5, 0.5, 0));
        EXPECT_EQ(joint_distribution_analytic(kZ, kZ.opposite(), Epsilon(e)), JointOutcomeProb(0.5, 0, 0, 0.5));
    }
}

TEST(RunJointTrial, rod_drags_partner_to_antipode) {
    // With u2 = u1 the dragged partner sits on -u1 and must answer no after a
    // left yes (and yes after a left no).
    RandomStream rng(31);
    auto u = Direction::from_angles(1.2, 0.4);
    for (int i = 0; i < 500; ++i) {
        TrialRecord t = run_joint_trial(JointTestSpec{u, u, Epsilon(1.0)}, rng);
        ASSERT_TRUE(t.outcome == JointOutcome::kYesNo || t.outcome == JointOutcome::kNoYes);
        EXPECT_TRUE(t.post_left.is_pure());
        EXPECT_TRUE(t.post_right.is_pure());
        if (t.outcome == JointOutcome::kYesNo) {
            EXPECT_EQ(t.post_left, BlochState::surface(u));
            EXPECT_EQ(t.post_right, BlochState::surface(u.opposite()));
        }
    }
}

TEST(RunJointTrial, conditional_second_test_probability) {
    double e = 0.6;
    auto u2 = Direction::from_angles(1.3);
    double c = kZ.dot(u2);
    ASSERT_LT(std::abs(c), e);
    RandomStream rng(32);
    int first_yes = 0;
    int both_yes = 0;
    for (int i = 0; i < 400000; ++i) {
        TrialRecord t = run_joint_trial(JointTestSpec{kZ, u2, Epsilon(e)}, rng);
        if (t.outcome == JointOutcome::kYesYes || t.outcome == JointOutcome::kYesNo) {
            ++first_yes;
            both_yes += t.outcome == JointOutcome::kYesYes;
        }
    }
    double expected = (e - c) / (2 * e);
    double se = std::sqrt(expected * (1 - expected) / first_yes);
    EXPECT_NEAR(static_cast<double>(both_yes) / first_yes, expected, 4 * se);
}

TEST(RunJointTrial, deterministic_limit_matches_analytic) {
    RandomStream rng(33);
    for (double theta : {0.2, 1.0, 1.8, 3.0}) {
        auto u2 = Direction::from_angles(theta);
        for (auto order : {TestOrder::kLeftFirst, TestOrder::kRightFirst}) {
            auto expected = joint_distribution_analytic(kZ, u2, Epsilon(0.0), order);
            TrialRecord t = run_joint_trial(JointTestSpec{kZ, u2, Epsilon(0.0), order}, rng);
            EXPECT_EQ(expected[t.outcome], 1.0);
        }
    }
}

TEST(Simulate, rejects_zero_trials) {
    EXPECT_THROW(simulate(JointTestSpec{kZ, kZ, Epsilon(1.0)}, 0, 1), ValidationError);
}

TEST(Simulate, reproducible_and_independent_of_workers) {
    JointTestSpec spec{kZ, Direction::from_angles(1.0, 0.5), Epsilon(0.8)};
    uint64_t trials = 5 * kSimulationBlockSize + 123;
    auto serial = simulate(spec, trials, 99, 1);
    for (unsigned workers : {2u, 3u, 8u, 0u}) {
        auto parallel = simulate(spec, trials, 99, workers);
        EXPECT_EQ(parallel.counts, serial.counts) << workers << " workers";
        EXPECT_EQ(parallel.frequencies, serial.frequencies);
    }
    uint64_t total = 0;
    for (auto c : serial.counts) {
        total += c;
    }
    EXPECT_EQ(total, trials);
    EXPECT_NE(simulate(spec, trials, 100, 1).counts, serial.counts);
}

TEST(Simulate, deterministic_and_aligned_cases) {
    auto det = simulate(JointTestSpec{kZ, Direction::from_angles(0.5), Epsilon(0.0)}, 10000, 5);
    EXPECT_EQ(det.counts, (std::array<uint64_t, 4>{0, 10000, 0, 0}));

    auto aligned = simulate(JointTestSpec{kZ, kZ, Epsilon(1.0)}, 100000, 6);
    EXPECT_EQ(aligned.counts[0], 0u);
    EXPECT_EQ(aligned.counts[3], 0u);
}

TEST(Simulate, converges_to_analytic) {
    constexpr uint64_t kTrials = 1'000'000;
    JointTestSpec spec{kZ, Direction::from_angles(kPi / 2), Epsilon(1.0)};
    auto result = simulate(spec, kTrials, 7);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(result.frequencies.values()[k], 0.25, 0.002);
    }
    for (double e : {0.3, 0.75}) {
        for (double theta : {0.8, 1.5, 2.6}) {
            JointTestSpec s{kZ, Direction::from_angles(theta), Epsilon(e), TestOrder::kRightFirst};
            auto r = simulate(s, kTrials, 8);
            auto exact = joint_distribution_analytic(s.u1, s.u2, s.eps);
            for (int k = 0; k < 4; ++k) {
                double p = exact.values()[k];
                double se = std::sqrt(p * (1 - p) / kTrials);
                EXPECT_NEAR(r.frequencies.values()[k], p, 4 * se + 1e-12);
            }
        }
    }
}

TEST(ExperimentTriple, classification_regimes) {
    auto perp = classify(experiment_triple(kZ, Direction::from_angles(kPi / 2), Epsilon(1.0)));
    EXPECT_TRUE(perp.compatible);
    EXPECT_TRUE(perp.separated);

    for (double e : {0.2, 0.5, 0.9}) {
        for (double theta : {0.3, 1.0, 2.0, 3.0}) {
            auto t = experiment_triple(kZ, Direction::from_angles(theta), Epsilon(e));
            EXPECT_EQ(t.left, OutcomeProb(0.5, 0.5));
            auto report = classify(t);
            EXPECT_TRUE(report.compatible);
            EXPECT_FALSE(report.separated);
        }
    }

    auto classical = experiment_triple(kZ, Direction::from_angles(0.7), Epsilon(0.0));
    EXPECT_EQ(classical.left, OutcomeProb(1.0, 0.0));
    auto report = classify(classical);
    EXPECT_FALSE(report.compatible);
    EXPECT_FALSE(report.separated);
    EXPECT_TRUE(report.classical_joint);

    auto obtuse = classify(experiment_triple(kZ, Direction::from_angles(2.0), Epsilon(0.0)));
    EXPECT_TRUE(obtuse.compatible);
    EXPECT_TRUE(obtuse.separated);
}

TEST(ExperimentTriple, separated_iff_orthogonal) {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int i = 0; i < 2000; ++i) {
        auto u1 = fixtures::random_direction(gen);
        auto u2 = fixtures::random_direction(gen);
        Epsilon eps(unit(gen));
        Tolerance tol(1e-9);
        auto t = experiment_triple(u1, u2, eps);
        EXPECT_TRUE(check_compatibility(t, tol).holds);
        // p1 - 1/4 = -c / (4 eps) inside the linear branch.
        bool expected = std::abs(u1.dot(u2)) / (4 * eps.value()) <= tol.eps_prob();
        EXPECT_EQ(check_separability(t, tol).holds, expected);
    }
}
