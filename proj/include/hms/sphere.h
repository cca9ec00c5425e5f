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

// Single spin-1/2 as a point in the unit ball, measured by an elastic of
// length 2*epsilon stretched along the measurement axis.
//
// The state point falls orthogonally onto the axis and lands at the
// projection a = v.u. The elastic breaks at a uniform point lambda in
// [-epsilon, epsilon]; lambda <= a drags the particle to +u ("yes"), otherwise
// to -u ("no"). epsilon = 1 gives the quantum spin probabilities,
// epsilon = 0 a deterministic test.

#ifndef HMS_SPHERE_H
#define HMS_SPHERE_H

#include <array>
#include <complex>

#include "hms/operational.h"
#include "hms/random.h"

namespace hms {

using Vec3 = std::array<double, 3>;

double dot(const Vec3 &a, const Vec3 &b) noexcept;
double norm(const Vec3 &v) noexcept;

/// Unit measurement axis.
class Direction {
   public:
    static constexpr double kNormTolerance = 1e-12;

    /// (sin t cos p, sin t sin p, cos t); theta in [0, pi], phi in [0, 2pi).
    static Direction from_angles(double theta, double phi = 0.0);
    /// Throws unless |v| = 1 within kNormTolerance.
    static Direction from_vector(const Vec3 &v);

    const Vec3 &vector() const noexcept { return v_; }
    Direction opposite() const noexcept { return Direction({-v_[0], -v_[1], -v_[2]}); }
    double dot(const Direction &other) const noexcept { return hms::dot(v_, other.v_); }

    bool operator==(const Direction &) const = default;

   private:
    explicit Direction(const Vec3 &v) : v_(v) {}
    Vec3 v_;
};

/// Point r*u(theta, phi) of the ball; r = 1 is a pure state.
class BlochState {
   public:
    static constexpr double kNormTolerance = 1e-12;

    static BlochState from_spherical(double r, double theta, double phi = 0.0);
    static BlochState from_vector(const Vec3 &v);
    static BlochState center() noexcept { return BlochState({0.0, 0.0, 0.0}); }
    static BlochState surface(const Direction &u) noexcept { return BlochState(u.vector()); }

    const Vec3 &vector() const noexcept { return v_; }
    double radius() const noexcept { return norm(v_); }
    bool is_pure() const noexcept;

    bool operator==(const BlochState &) const = default;

   private:
    explicit BlochState(const Vec3 &v) : v_(v) {}
    Vec3 v_;
};

/// Normalized pair of amplitudes (c0, c1).
class Spinor {
   public:
    static constexpr double kNormTolerance = 1e-12;

    Spinor(std::complex<double> c0, std::complex<double> c1);

    /// (cos(t/2) e^{-ip/2}, sin(t/2) e^{ip/2}).
    static Spinor from_angles(double theta, double phi);

    std::complex<double> c0() const noexcept { return c0_; }
    std::complex<double> c1() const noexcept { return c1_; }

    /// Surface point of the spinor: (2 Re c0*c1, 2 Im c0*c1, |c0|^2 - |c1|^2).
    BlochState to_state() const;

   private:
    std::complex<double> c0_;
    std::complex<double> c1_;
};

/// 2x2 complex matrix, row-major.
class DensityMatrix {
   public:
    using Entries = std::array<std::complex<double>, 4>;

    explicit DensityMatrix(const Entries &entries) : m_(entries) {}

    /// Outer product |psi><psi|.
    static DensityMatrix projector(const Spinor &psi);

    std::complex<double> operator()(int row, int col) const noexcept { return m_[2 * row + col]; }
    const Entries &entries() const noexcept { return m_; }

    std::complex<double> trace() const noexcept { return m_[0] + m_[3]; }
    DensityMatrix operator*(const DensityMatrix &rhs) const noexcept;
    /// Largest entrywise |a - b|.
    double max_abs_diff(const DensityMatrix &other) const noexcept;
    bool is_hermitian(double tol) const noexcept;
    /// Eigenvalues in ascending order (assumes Hermitian input).
    std::array<double, 2> eigenvalues() const noexcept;

   private:
    Entries m_;
};

/// Half-length of the breakable part of the elastic, in [0, 1].
class Epsilon {
   public:
    explicit Epsilon(double value);
    double value() const noexcept { return value_; }
    bool operator==(const Epsilon &) const = default;

   private:
    double value_;
};

enum class MeasurementOutcome { kYes, kNo };

struct MeasurementResult {
    MeasurementOutcome outcome;
    BlochState post_state;
};

/// Landing point a = v.u of the state on the elastic.
double projection(const BlochState &s, const Direction &u) noexcept;

/// Yes/no distribution of the elastic test along u. For epsilon > 0 the yes
/// probability is 1 for a >= eps, 0 for a <= -eps, (eps + a) / (2 eps)
/// between. For epsilon = 0: yes iff a >= 0.
OutcomeProb outcome_probability(const BlochState &s, const Direction &u, Epsilon eps);

/// Same law, starting from the projection.
OutcomeProb outcome_probability(double a, Epsilon eps);

/// Outcome when the elastic breaks at `break_point` with the particle stuck at
/// `landing_point`: yes iff break_point <= landing_point.
MeasurementOutcome elastic_outcome(double break_point, double landing_point) noexcept;

/// Draws one break point and collapses to +u (yes) or -u (no). A break
/// exactly at the landing point answers yes. No random number is consumed
/// when the outcome is already certain.
MeasurementResult sample_measurement(const BlochState &s, const Direction &u, Epsilon eps, RandomStream &rng);

DensityMatrix to_density_matrix(const BlochState &s);

/// Inverse of to_density_matrix. Throws ValidationError for non-Hermitian,
/// trace != 1 or non positive semidefinite input.
BlochState from_density_matrix(const DensityMatrix &d, double tol = 1e-10);

}  // namespace hms

#endif  // HMS_SPHERE_H
