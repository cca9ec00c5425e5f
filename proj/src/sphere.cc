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

#include "hms/sphere.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hms/error.h"

namespace hms {

namespace {

void require_angles(double theta, double phi) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
        throw ValidationError("theta = " + std::to_string(theta) + " outside [0, pi]");
    }
    if (!std::isfinite(phi) || phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
        throw ValidationError("phi = " + std::to_string(phi) + " outside [0, 2pi)");
    }
}

Vec3 polar_unit(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

bool finite(const Vec3 &v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

}  // namespace

double dot(const Vec3 &a, const Vec3 &b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3 &v) noexcept { return std::sqrt(dot(v, v)); }

Direction Direction::from_angles(double theta, double phi) {
    require_angles(theta, phi);
    return Direction(polar_unit(theta, phi));
}

Direction Direction::from_vector(const Vec3 &v) {
    if (!finite(v) || std::abs(norm(v) - 1.0) > kNormTolerance) {
        throw ValidationError("direction must be a unit vector");
    }
    return Direction(v);
}

BlochState BlochState::from_spherical(double r, double theta, double phi) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
        throw ValidationError("radius r = " + std::to_string(r) + " outside [0, 1]");
    }
    require_angles(theta, phi);
    Vec3 u = polar_unit(theta, phi);
    return BlochState({r * u[0], r * u[1], r * u[2]});
}

BlochState BlochState::from_vector(const Vec3 &v) {
    if (!finite(v) || norm(v) > 1.0 + kNormTolerance) {
        throw ValidationError("state point lies outside the unit ball");
    }
    return BlochState(v);
}

bool BlochState::is_pure() const noexcept { return std::abs(radius() - 1.0) <= kNormTolerance; }

Spinor::Spinor(std::complex<double> c0, std::complex<double> c1) : c0_(c0), c1_(c1) {
    double n = std::norm(c0) + std::norm(c1);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
        throw ValidationError("spinor is not normalized");
    }
}

Spinor Spinor::from_angles(double theta, double phi) {
    require_angles(theta, phi);
    return Spinor(std::polar(std::cos(theta / 2), -phi / 2), std::polar(std::sin(theta / 2), phi / 2));
}

BlochState Spinor::to_state() const {
    std::complex<double> coherence = std::conj(c0_) * c1_;
    Vec3 v{2.0 * coherence.real(), 2.0 * coherence.imag(), std::norm(c0_) - std::norm(c1_)};
    // Rounding can push |v| a hair past 1.
    double n = norm(v);
    if (n > 1.0) {
        v = {v[0] / n, v[1] / n, v[2] / n};
    }
    return BlochState::from_vector(v);
}

DensityMatrix DensityMatrix::projector(const Spinor &psi) {
    auto a = psi.c0();
    auto b = psi.c1();
    return DensityMatrix({a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)});
}

DensityMatrix DensityMatrix::operator*(const DensityMatrix &rhs) const noexcept {
    const auto &a = m_;
    const auto &b = rhs.m_;
    return DensityMatrix({
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    });
}

double DensityMatrix::max_abs_diff(const DensityMatrix &other) const noexcept {
    double worst = 0.0;
    for (size_t k = 0; k < m_.size(); ++k) {
        worst = std::max(worst, std::abs(m_[k] - other.m_[k]));
    }
    return worst;
}

bool DensityMatrix::is_hermitian(double tol) const noexcept {
    return std::abs(m_[0].imag()) <= tol && std::abs(m_[3].imag()) <= tol &&
           std::abs(m_[1] - std::conj(m_[2])) <= tol;
}

std::array<double, 2> DensityMatrix::eigenvalues() const noexcept {
    double mean = 0.5 * (m_[0].real() + m_[3].real());
    double half_gap = 0.5 * (m_[0].real() - m_[3].real());
    double spread = std::hypot(half_gap, std::abs(m_[1]));
    return {mean - spread, mean + spread};
}

Epsilon::Epsilon(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw ValidationError("epsilon = " + std::to_string(value) + " outside [0, 1]");
    }
}

double projection(const BlochState &s, const Direction &u) noexcept { return dot(s.vector(), u.vector()); }

OutcomeProb outcome_probability(double a, Epsilon eps) {
    double e = eps.value();
    if (e == 0.0) {
        return a >= 0.0 ? OutcomeProb(1.0, 0.0) : OutcomeProb(0.0, 1.0);
    }
    if (a >= e) {
        return OutcomeProb(1.0, 0.0);
    }
    if (a <= -e) {
        return OutcomeProb(0.0, 1.0);
    }
    return OutcomeProb::from_yes((e + a) / (2.0 * e));
}

OutcomeProb outcome_probability(const BlochState &s, const Direction &u, Epsilon eps) {
    return outcome_probability(projection(s, u), eps);
}

MeasurementOutcome elastic_outcome(double break_point, double landing_point) noexcept {
    return break_point <= landing_point ? MeasurementOutcome::kYes : MeasurementOutcome::kNo;
}

MeasurementResult sample_measurement(const BlochState &s, const Direction &u, Epsilon eps, RandomStream &rng) {
    double a = projection(s, u);
    double e = eps.value();
    MeasurementOutcome outcome;
    if (e == 0.0) {
        // The zero-length elastic breaks at the center.
        outcome = elastic_outcome(0.0, a);
    } else if (a >= e) {
        outcome = MeasurementOutcome::kYes;
    } else if (a <= -e) {
        outcome = MeasurementOutcome::kNo;
    } else {
        outcome = elastic_outcome(rng.uniform(-e, e), a);
    }
    if (outcome == MeasurementOutcome::kYes) {
        return {MeasurementOutcome::kYes, BlochState::surface(u)};
    }
    return {MeasurementOutcome::kNo, BlochState::surface(u.opposite())};
}

DensityMatrix to_density_matrix(const BlochState &s) {
    const auto &v = s.vector();
    // r cos(theta) = z, r sin(theta) e^{-i phi} = x - i y.
    using C = std::complex<double>;
    return DensityMatrix({
        C(0.5 * (1.0 + v[2]), 0.0),
        C(0.5 * v[0], -0.5 * v[1]),
        C(0.5 * v[0], 0.5 * v[1]),
        C(0.5 * (1.0 - v[2]), 0.0),
    });
}

BlochState from_density_matrix(const DensityMatrix &d, double tol) {
    if (!d.is_hermitian(tol)) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(d.trace() - 1.0) > tol) {
        throw ValidationError("density matrix trace is not 1");
    }
    Vec3 v{
        (d(0, 1) + d(1, 0)).real(),
        (d(1, 0) - d(0, 1)).imag(),
        (d(0, 0) - d(1, 1)).real(),
    };
    // Eigenvalues are (1 -+ r) / 2, so positivity is r <= 1.
    double r = norm(v);
    if (r > 1.0 + tol) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
    if (r > 1.0) {
        v = {v[0] / r, v[1] / r, v[2] / r};
    }
    return BlochState::from_vector(v);
}

}  // namespace hms
