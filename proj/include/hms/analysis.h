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

#ifndef HMS_ANALYSIS_H
#define HMS_ANALYSIS_H

#include <span>
#include <vector>

#include "hms/operational.h"
#include "hms/sphere.h"

namespace hms {

/// E = p1 + p4 - p2 - p3 of the singlet joint distribution. For eps > 0 this
/// is clamp(-c / eps, -1, 1) with c = u1.u2; for eps = 0 it is +1 when c <= 0
/// and -1 otherwise.
double correlation(const Direction &u1, const Direction &u2, Epsilon eps);

/// E computed from a four-outcome distribution.
double correlation(const JointOutcomeProb &j) noexcept;

/// Two settings per side for a CHSH experiment.
struct ChshSetup {
    Direction a;
    Direction a_prime;
    Direction b;
    Direction b_prime;
    Epsilon eps;

    /// Coplanar (phi = 0) settings at polar angles 0, pi/2 (left) and
    /// pi/4, 3pi/4 (right).
    static ChshSetup canonical(Epsilon eps);
    static ChshSetup coplanar(double a, double a_prime, double b, double b_prime, Epsilon eps);
};

struct ChshResult {
    double e_ab;
    double e_ab_prime;
    double e_a_prime_b;
    double e_a_prime_b_prime;
    double s;
};

/// S = |E(a,b) - E(a,b') + E(a',b) + E(a',b')|.
ChshResult chsh(const ChshSetup &setup);

struct ScanRow {
    double epsilon;
    double theta;
    double p1;
    double p2;
    double p3;
    double p4;
    double correlation;
    bool compatible;
    bool separated;
    bool classical_joint;

    bool operator==(const ScanRow &) const = default;
};

/// One row per (epsilon, theta), epsilon-major. Directions are u(0, 0) and
/// u(theta, 0). Throws ValidationError for epsilon outside [0, 1] or theta
/// outside [0, pi].
std::vector<ScanRow> scan(std::span<const double> epsilons, std::span<const double> thetas, Tolerance tol = {});

/// n evenly spaced angles k * pi / (n - 1), k = 0..n-1 (n >= 2).
std::vector<double> theta_grid(int n);

}  // namespace hms

#endif  // HMS_ANALYSIS_H
