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

#include "hms/operational.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hms/error.h"

namespace hms {

namespace {

// Tolerances used when validating a distribution at construction.
constexpr double kSumTolerance = 1e-9;
constexpr double kRangeTolerance = 1e-12;

void require_probability(double p, const char *name) {
    if (!std::isfinite(p) || p < -kRangeTolerance || p > 1.0 + kRangeTolerance) {
        throw ValidationError(std::string(name) + " = " + std::to_string(p) + " is not a probability");
    }
}

bool all_within(const std::array<double, 4> &residuals, double tol) {
    return std::all_of(residuals.begin(), residuals.end(), [tol](double r) { return r <= tol; });
}

}  // namespace

Tolerance::Tolerance(double eps_prob) : eps_prob_(eps_prob) {
    if (!std::isfinite(eps_prob) || eps_prob < 0.0) {
        throw ValidationError("tolerance must be finite and non-negative");
    }
}

Tolerance Tolerance::exact() noexcept {
    Tolerance t;
    t.eps_prob_ = 0.0;
    return t;
}

OutcomeProb::OutcomeProb(double p_yes, double p_no) : p_yes_(p_yes), p_no_(p_no) {
    require_probability(p_yes, "p_yes");
    require_probability(p_no, "p_no");
    if (std::abs(p_yes + p_no - 1.0) > kSumTolerance) {
        throw ValidationError("p_yes + p_no = " + std::to_string(p_yes + p_no) + ", expected 1");
    }
}

OutcomeProb OutcomeProb::from_yes(double p_yes) { return OutcomeProb(p_yes, 1.0 - p_yes); }

JointOutcomeProb::JointOutcomeProb(double p1, double p2, double p3, double p4) : p_{p1, p2, p3, p4} {
    require_probability(p1, "p1");
    require_probability(p2, "p2");
    require_probability(p3, "p3");
    require_probability(p4, "p4");
    double total = p1 + p2 + p3 + p4;
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw ValidationError("joint probabilities sum to " + std::to_string(total) + ", expected 1");
    }
}

OutcomeProb JointOutcomeProb::left_marginal() const { return OutcomeProb(p_[0] + p_[1], p_[2] + p_[3]); }

OutcomeProb JointOutcomeProb::right_marginal() const { return OutcomeProb(p_[0] + p_[2], p_[1] + p_[3]); }

PredicateResult check_compatibility(const ExperimentTriple &t, Tolerance tol) {
    const auto &j = t.joint;
    std::array<double, 4> residuals{
        std::abs(t.left.p_yes() - (j.p1() + j.p2())),
        std::abs(t.left.p_no() - (j.p3() + j.p4())),
        std::abs(t.right.p_yes() - (j.p1() + j.p3())),
        std::abs(t.right.p_no() - (j.p2() + j.p4())),
    };
    return {all_within(residuals, tol.eps_prob()), residuals};
}

PredicateResult check_separability(const ExperimentTriple &t, Tolerance tol) {
    const auto &j = t.joint;
    const auto &l = t.left;
    const auto &r = t.right;
    std::array<double, 4> residuals{
        std::abs(j.p1() - l.p_yes() * r.p_yes()),
        std::abs(j.p2() - l.p_yes() * r.p_no()),
        std::abs(j.p3() - l.p_no() * r.p_yes()),
        std::abs(j.p4() - l.p_no() * r.p_no()),
    };
    return {all_within(residuals, tol.eps_prob()), residuals};
}

bool check_product_criterion(const JointOutcomeProb &j, Tolerance tol) {
    return std::abs(j.p1() * j.p4() - j.p2() * j.p3()) <= tol.eps_prob();
}

bool is_classical_test(const OutcomeProb &o, Tolerance tol) {
    double certain = 1.0 - tol.eps_prob();
    return o.p_yes() >= certain || o.p_no() >= certain;
}

bool is_classical_joint(const JointOutcomeProb &j, Tolerance tol) {
    double certain = 1.0 - tol.eps_prob();
    const auto &p = j.values();
    return std::any_of(p.begin(), p.end(), [certain](double v) { return v >= certain; });
}

ClassificationReport classify(const ExperimentTriple &t, Tolerance tol) {
    auto compat = check_compatibility(t, tol);
    auto sep = check_separability(t, tol);
    return ClassificationReport{
        .compatible = compat.holds,
        .separated = compat.holds && sep.holds,
        .classical_left = is_classical_test(t.left, tol),
        .classical_right = is_classical_test(t.right, tol),
        .classical_joint = is_classical_joint(t.joint, tol),
        .compatibility_residuals = compat.residuals,
        .separability_residuals = sep.residuals,
    };
}

ExperimentTriple vessels_scenario(VesselsKind kind) {
    // Either vessel alone gives up more than 10 liters with certainty.
    OutcomeProb certain_yes(1.0, 0.0);
    switch (kind) {
        case VesselsKind::kAlphaAlpha:
            // Both siphons together never both exceed 10 liters; the split is
            // taken symmetric between the two vessels.
            return {certain_yes, certain_yes, JointOutcomeProb(0.0, 0.5, 0.5, 0.0)};
        case VesselsKind::kAlphaBeta:
            // The fast siphon takes less than 10 liters half the time.
            return {certain_yes, certain_yes, JointOutcomeProb(0.5, 0.0, 0.5, 0.0)};
    }
    throw ValidationError("unknown vessels scenario");
}

std::string_view to_string(VesselsKind kind) {
    return kind == VesselsKind::kAlphaAlpha ? "alpha-alpha" : "alpha-beta";
}

VesselsKind parse_vessels_kind(std::string_view text) {
    if (text == "alpha-alpha" || text == "alpha_alpha") {
        return VesselsKind::kAlphaAlpha;
    }
    if (text == "alpha-beta" || text == "alpha_beta") {
        return VesselsKind::kAlphaBeta;
    }
    throw ValidationError("unknown vessels kind '" + std::string(text) + "'");
}

}  // namespace hms
