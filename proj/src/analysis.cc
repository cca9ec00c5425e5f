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

#include "hms/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hms/error.h"
#include "hms/singlet.h"

namespace hms {

double correlation(const Direction &u1, const Direction &u2, Epsilon eps) {
    double c = u1.dot(u2);
    double e = eps.value();
    if (e == 0.0) {
        return c <= 0.0 ? 1.0 : -1.0;
    }
    return std::clamp(-c / e, -1.0, 1.0);
}

double correlation(const JointOutcomeProb &j) noexcept { return (j.p1() + j.p4()) - (j.p2() + j.p3()); }

ChshSetup ChshSetup::canonical(Epsilon eps) {
    constexpr double pi = std::numbers::pi;
    return coplanar(0.0, pi / 2, pi / 4, 3 * pi / 4, eps);
}

ChshSetup ChshSetup::coplanar(double a, double a_prime, double b, double b_prime, Epsilon eps) {
    return {Direction::from_angles(a), Direction::from_angles(a_prime), Direction::from_angles(b),
            Direction::from_angles(b_prime), eps};
}

ChshResult chsh(const ChshSetup &setup) {
    ChshResult r{};
    r.e_ab = correlation(setup.a, setup.b, setup.eps);
    r.e_ab_prime = correlation(setup.a, setup.b_prime, setup.eps);
    r.e_a_prime_b = correlation(setup.a_prime, setup.b, setup.eps);
    r.e_a_prime_b_prime = correlation(setup.a_prime, setup.b_prime, setup.eps);
    r.s = std::abs(r.e_ab - r.e_ab_prime + r.e_a_prime_b + r.e_a_prime_b_prime);
    return r;
}

std::vector<ScanRow> scan(std::span<const double> epsilons, std::span<const double> thetas, Tolerance tol) {
    std::vector<Epsilon> eps_values;
    eps_values.reserve(epsilons.size());
    for (double e : epsilons) {
        eps_values.emplace_back(e);
    }
    std::vector<Direction> axes;
    axes.reserve(thetas.size());
    for (double theta : thetas) {
        axes.push_back(Direction::from_angles(theta));
    }

    const Direction reference = Direction::from_angles(0.0);
    std::vector<ScanRow> rows;
    rows.reserve(epsilons.size() * thetas.size());
    for (Epsilon eps : eps_values) {
        for (size_t k = 0; k < thetas.size(); ++k) {
            ExperimentTriple triple = experiment_triple(reference, axes[k], eps);
            ClassificationReport report = classify(triple, tol);
            const auto &j = triple.joint;
            rows.push_back({
                .epsilon = eps.value(),
                .theta = thetas[k],
                .p1 = j.p1(),
                .p2 = j.p2(),
                .p3 = j.p3(),
                .p4 = j.p4(),
                .correlation = correlation(j),
                .compatible = report.compatible,
                .separated = report.separated,
                .classical_joint = report.classical_joint,
            });
        }
    }
    return rows;
}

std::vector<double> theta_grid(int n) {
    if (n < 2) {
        throw ValidationError("theta grid needs at least 2 points");
    }
    std::vector<double> grid(n);
    for (int k = 0; k < n; ++k) {
        grid[k] = k * std::numbers::pi / (n - 1);
    }
    // Pin the endpoint exactly; k * pi / (n - 1) can round past pi.
    grid.back() = std::numbers::pi;
    return grid;
}

}  // namespace hms
