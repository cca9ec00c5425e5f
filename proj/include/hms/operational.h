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

// Operational language of yes/no tests: outcome distributions for single and
// joint tests, and the predicates deciding whether two tests are compatible,
// separated, or classical in a given state.

#ifndef HMS_OPERATIONAL_H
#define HMS_OPERATIONAL_H

#include <array>
#include <string_view>

namespace hms {

/// Absolute tolerance applied to probability residuals.
///
/// Analytic inputs use the default. Monte Carlo frequencies need a caller
/// chosen statistical tolerance; nothing here infers one from a sample size.
class Tolerance {
   public:
    static constexpr double kAnalyticDefault = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double eps_prob);

    /// Zero tolerance, for exactly representable (dyadic) inputs.
    static Tolerance exact() noexcept;

    double eps_prob() const noexcept { return eps_prob_; }

   private:
    double eps_prob_ = kAnalyticDefault;
};

/// Distribution of a single yes/no test in one state.
class OutcomeProb {
   public:
    /// Throws ValidationError unless both entries lie in [0,1] and sum to 1.
    OutcomeProb(double p_yes, double p_no);

    /// p_no is taken as 1 - p_yes.
    static OutcomeProb from_yes(double p_yes);

    double p_yes() const noexcept { return p_yes_; }
    double p_no() const noexcept { return p_no_; }

    bool operator==(const OutcomeProb &) const = default;

   private:
    double p_yes_;
    double p_no_;
};

/// Outcome labels of a joint test, in (left, right) order.
enum class JointOutcome : int {
    kYesYes = 0,  // x1
    kYesNo = 1,   // x2
    kNoYes = 2,   // x3
    kNoNo = 3,    // x4
};

/// Distribution over the four outcomes x1..x4 of a joint test.
class JointOutcomeProb {
   public:
    JointOutcomeProb(double p1, double p2, double p3, double p4);

    double p1() const noexcept { return p_[0]; }
    double p2() const noexcept { return p_[1]; }
    double p3() const noexcept { return p_[2]; }
    double p4() const noexcept { return p_[3]; }
    double operator[](JointOutcome x) const noexcept { return p_[static_cast<int>(x)]; }
    const std::array<double, 4> &values() const noexcept { return p_; }

    /// Left-test and right-test marginals implied by the joint.
    OutcomeProb left_marginal() const;
    OutcomeProb right_marginal() const;

    bool operator==(const JointOutcomeProb &) const = default;

   private:
    std::array<double, 4> p_;
};

/// Stand-alone distributions of two tests plus the distribution of the joint
/// test built from them. No relation between the three is assumed.
struct ExperimentTriple {
    OutcomeProb left;
    OutcomeProb right;
    JointOutcomeProb joint;
};

struct PredicateResult {
    bool holds;
    std::array<double, 4> residuals;
};

struct ClassificationReport {
    bool compatible;
    bool separated;
    bool classical_left;
    bool classical_right;
    bool classical_joint;
    std::array<double, 4> compatibility_residuals;
    std::array<double, 4> separability_residuals;
};

/// Marginal equations: left.yes = p1+p2, left.no = p3+p4, right.yes = p1+p3,
/// right.no = p2+p4. Residuals are |lhs - rhs| in that order.
PredicateResult check_compatibility(const ExperimentTriple &t, Tolerance tol = {});

/// Product equations: p1 = l.yes*r.yes, p2 = l.yes*r.no, p3 = l.no*r.yes,
/// p4 = l.no*r.no.
PredicateResult check_separability(const ExperimentTriple &t, Tolerance tol = {});

/// |p1*p4 - p2*p3| <= tol. For a joint compatible with its marginals this is
/// equivalent to separability.
bool check_product_criterion(const JointOutcomeProb &j, Tolerance tol = {});

/// True iff one outcome is certain.
bool is_classical_test(const OutcomeProb &o, Tolerance tol = {});

bool is_classical_joint(const JointOutcomeProb &j, Tolerance tol = {});

/// Runs every predicate. `separated` is only reported when `compatible` also
/// holds.
ClassificationReport classify(const ExperimentTriple &t, Tolerance tol = {});

/// Connected-vessels examples: twenty liters shared by two vessels.
enum class VesselsKind {
    kAlphaAlpha,  // "more than 10 liters?" on both vessels
    kAlphaBeta,   // left: more than 10 liters; right: random draw, is it clear?
};

ExperimentTriple vessels_scenario(VesselsKind kind);

std::string_view to_string(VesselsKind kind);
VesselsKind parse_vessels_kind(std::string_view text);

}  // namespace hms

#endif  // HMS_OPERATIONAL_H
