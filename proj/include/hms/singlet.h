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

// Two sphere models whose point particles are joined by a rigid, extendable
// rod. The singlet is both particles at their centers with the rod engaged.
//
// A joint test runs one sub-test first. Its particle collapses to +-u, and the
// rod drags the other particle to the antipode of that eigenstate. The rod
// then lets go and the second sub-test is an ordinary single-sphere
// measurement.

#ifndef HMS_SINGLET_H
#define HMS_SINGLET_H

#include <array>
#include <cstdint>
#include <string_view>

#include "hms/operational.h"
#include "hms/random.h"
#include "hms/sphere.h"

namespace hms {

struct CoupledState {
    BlochState left;
    BlochState right;
    bool rod_engaged;

    static CoupledState singlet() noexcept { return {BlochState::center(), BlochState::center(), true}; }
    bool is_singlet() const noexcept;
};

enum class TestOrder { kLeftFirst, kRightFirst };

std::string_view to_string(TestOrder order);
TestOrder parse_test_order(std::string_view text);

struct JointTestSpec {
    Direction u1;  // left axis
    Direction u2;  // right axis
    Epsilon eps;
    TestOrder order = TestOrder::kLeftFirst;
};

struct TrialRecord {
    JointOutcome outcome;  // always (left, right)
    BlochState post_left;
    BlochState post_right;
};

/// Exact joint distribution of E(alpha_u1, alpha_u2) on the singlet, obtained
/// by chaining the single-sphere law for the chosen execution order.
///
/// With c = u1.u2 and eps > 0: p1 = p4 = (eps - c) / (4 eps) and
/// p2 = p3 = (eps + c) / (4 eps) for |c| < eps, clamped to (0, 1/2, 1/2, 0)
/// for c >= eps and (1/2, 0, 0, 1/2) for c <= -eps. eps = 0 gives (0,1,0,0)
/// for c > 0 and (1,0,0,0) for c <= 0.
JointOutcomeProb joint_distribution_analytic(const Direction &u1, const Direction &u2, Epsilon eps,
                                             TestOrder order = TestOrder::kLeftFirst);

/// One joint test on a fresh singlet.
TrialRecord run_joint_trial(const JointTestSpec &spec, RandomStream &rng);

/// Throws ValidationError unless `state` is the singlet.
TrialRecord run_joint_trial(const CoupledState &state, const JointTestSpec &spec, RandomStream &rng);

struct SimulationResult {
    std::array<uint64_t, 4> counts;
    JointOutcomeProb frequencies;
};

/// Trials per block in simulate(); block k draws from RandomStream::derive(seed, k).
inline constexpr uint64_t kSimulationBlockSize = 1 << 16;

/// Runs `trials` independent joint tests. The result depends only on
/// (spec, trials, seed), never on `workers`; workers = 0 picks the hardware
/// concurrency.
SimulationResult simulate(const JointTestSpec &spec, uint64_t trials, uint64_t seed, unsigned workers = 0);

/// Stand-alone single-test distributions on the singlet together with the
/// analytic joint.
ExperimentTriple experiment_triple(const Direction &u1, const Direction &u2, Epsilon eps);

}  // namespace hms

#endif  // HMS_SINGLET_H
