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

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "hms/error.h"

namespace hms {

namespace {

JointOutcome combine(MeasurementOutcome left, MeasurementOutcome right) {
    bool l = left == MeasurementOutcome::kYes;
    bool r = right == MeasurementOutcome::kYes;
    if (l) {
        return r ? JointOutcome::kYesYes : JointOutcome::kYesNo;
    }
    return r ? JointOutcome::kNoYes : JointOutcome::kNoNo;
}

// Runs the first sub-test on the center, drags the partner to the antipode,
// then runs the second sub-test on the partner. Returns outcomes in
// (first, second) order.
struct SequentialResult {
    MeasurementResult first;
    MeasurementResult second;
};

SequentialResult run_sequential(const Direction &first_axis, const Direction &second_axis, Epsilon eps,
                                RandomStream &rng) {
    MeasurementResult first = sample_measurement(BlochState::center(), first_axis, eps, rng);
    Vec3 p = first.post_state.vector();
    BlochState dragged = BlochState::from_vector({-p[0], -p[1], -p[2]});
    MeasurementResult second = sample_measurement(dragged, second_axis, eps, rng);
    return {first, second};
}

}  // namespace

bool CoupledState::is_singlet() const noexcept {
    return rod_engaged && left == BlochState::center() && right == BlochState::center();
}

std::string_view to_string(TestOrder order) {
    return order == TestOrder::kLeftFirst ? "left-first" : "right-first";
}

TestOrder parse_test_order(std::string_view text) {
    if (text == "left-first") {
        return TestOrder::kLeftFirst;
    }
    if (text == "right-first") {
        return TestOrder::kRightFirst;
    }
    throw ValidationError("unknown test order '" + std::string(text) + "'");
}

JointOutcomeProb joint_distribution_analytic(const Direction &u1, const Direction &u2, Epsilon eps,
                                             TestOrder order) {
    const Direction &first = order == TestOrder::kLeftFirst ? u1 : u2;
    const Direction &second = order == TestOrder::kLeftFirst ? u2 : u1;

    OutcomeProb first_law = outcome_probability(BlochState::center(), first, eps);
    // After yes the partner sits at -first, after no at +first.
    OutcomeProb after_yes = outcome_probability(BlochState::surface(first.opposite()), second, eps);
    OutcomeProb after_no = outcome_probability(BlochState::surface(first), second, eps);

    double yy = first_law.p_yes() * after_yes.p_yes();
    double yn = first_law.p_yes() * after_yes.p_no();
    double ny = first_law.p_no() * after_no.p_yes();
    double nn = first_law.p_no() * after_no.p_no();
    if (order == TestOrder::kLeftFirst) {
        return JointOutcomeProb(yy, yn, ny, nn);
    }
    // (first, second) = (right, left): swap the mixed outcomes.
    return JointOutcomeProb(yy, ny, yn, nn);
}

TrialRecord run_joint_trial(const JointTestSpec &spec, RandomStream &rng) {
    if (spec.order == TestOrder::kLeftFirst) {
        auto r = run_sequential(spec.u1, spec.u2, spec.eps, rng);
        return {combine(r.first.outcome, r.second.outcome), r.first.post_state, r.second.post_state};
    }
    auto r = run_sequential(spec.u2, spec.u1, spec.eps, rng);
    return {combine(r.second.outcome, r.first.outcome), r.second.post_state, r.first.post_state};
}

TrialRecord run_joint_trial(const CoupledState &state, const JointTestSpec &spec, RandomStream &rng) {
    if (!state.is_singlet()) {
        throw ValidationError("joint tests are only defined on the singlet preparation");
    }
    return run_joint_trial(spec, rng);
}

SimulationResult simulate(const JointTestSpec &spec, uint64_t trials, uint64_t seed, unsigned workers) {
    if (trials == 0) {
        throw ValidationError("trials must be at least 1");
    }
    uint64_t num_blocks = (trials + kSimulationBlockSize - 1) / kSimulationBlockSize;
    std::vector<std::array<uint64_t, 4>> block_counts(num_blocks, std::array<uint64_t, 4>{});

    auto run_block = [&](uint64_t block) {
        RandomStream rng = RandomStream::derive(seed, block);
        uint64_t begin = block * kSimulationBlockSize;
        uint64_t end = std::min(trials, begin + kSimulationBlockSize);
        auto &counts = block_counts[block];
        for (uint64_t t = begin; t < end; ++t) {
            ++counts[static_cast<int>(run_joint_trial(spec, rng).outcome)];
        }
    };

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, num_blocks));
    if (workers <= 1) {
        for (uint64_t b = 0; b < num_blocks; ++b) {
            run_block(b);
        }
    } else {
        // Static striping: worker w owns blocks w, w + workers, ...
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (uint64_t b = w; b < num_blocks; b += workers) {
                    run_block(b);
                }
            });
        }
    }

    std::array<uint64_t, 4> counts{};
    for (const auto &bc : block_counts) {
        for (int k = 0; k < 4; ++k) {
            counts[k] += bc[k];
        }
    }
    double n = static_cast<double>(trials);
    double f1 = counts[0] / n;
    double f2 = counts[1] / n;
    double f3 = counts[2] / n;
    double f4 = counts[3] / n;
    return {counts, JointOutcomeProb(f1, f2, f3, f4)};
}

ExperimentTriple experiment_triple(const Direction &u1, const Direction &u2, Epsilon eps) {
    // Each test alone on a center state; (1/2, 1/2) for eps > 0 and a
    // certain yes for eps = 0 (the landing point sits on the break point).
    return {
        outcome_probability(BlochState::center(), u1, eps),
        outcome_probability(BlochState::center(), u2, eps),
        joint_distribution_analytic(u1, u2, eps),
    };
}

}  // namespace hms
