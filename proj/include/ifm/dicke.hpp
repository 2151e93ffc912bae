#pragma once

#include <array>

#include "ifm/qstate.hpp"

namespace ifm {

// Two-particle collision space, probe (x) target, flattened row-major over
// {free, scattered} for each particle:
//   0: probe free,      target free
//   1: probe free,      target scattered
//   2: probe scattered, target free
//   3: probe scattered, target scattered
template <typename Scalar>
using DickeState = Eigen::Matrix<Complex<Scalar>, 4, 1>;

template <typename Scalar>
using TargetVector = Eigen::Matrix<Complex<Scalar>, 2, 1>;

inline constexpr std::array<const char*, 4> kDickeBasisLabels = {
    "freeP_freeT", "freeP_scattT", "scattP_freeT", "scattP_scattT"};

inline constexpr std::array<const char*, 2> kTargetBasisLabels = {"freeT",
                                                                  "scattT"};

// Collision superposition weights: amplitude alpha for the miss branch (both
// particles keep flying free) and beta for the hit branch (both scatter),
// with |alpha|^2 + |beta|^2 = 1.
template <typename Scalar>
struct DickeConfig {
  Complex<Scalar> alpha{};
  Complex<Scalar> beta{};
};

template <typename Scalar>
void validate(const DickeConfig<Scalar>& cfg) {
  const Scalar s = std::norm(cfg.alpha) + std::norm(cfg.beta);
  if (!(std::abs(s - Scalar(1)) <= Scalar(kUnitNormTol))) {
    throw InvalidConfigError(
        "DickeConfig: |alpha|^2 + |beta|^2 = " +
        std::to_string(static_cast<double>(s)) + " must equal 1");
  }
}

// Post-collision state alpha |free, free> + beta |scattered, scattered>.
// Momentum conservation forbids the mixed branches, which is what makes a
// null result on the probe informative about the target.
template <typename Scalar>
DickeState<Scalar> dicke_state(const DickeConfig<Scalar>& cfg) {
  validate(cfg);
  DickeState<Scalar> v = DickeState<Scalar>::Zero();
  v[0] = cfg.alpha;
  v[3] = cfg.beta;
  return v / v.norm();
}

// Target state and probability after finding the probe still free.
template <typename Scalar>
struct NullResult {
  TargetVector<Scalar> target;
  Scalar probability{};
};

// Projects the probe onto its free mode and renormalizes the target factor.
// For the collision state above the surviving branch is pure |free>: the
// null result collapses the target with certainty despite no interaction
// having occurred.
template <typename Scalar>
NullResult<Scalar> condition_on_null(const DickeState<Scalar>& s) {
  TargetVector<Scalar> proj;
  proj << s[0], s[1];
  const Scalar p = proj.squaredNorm();
  if (p <= Scalar(kZeroProbabilityTol)) {
    throw ZeroProbabilityError(
        "condition_on_null: the free-probe branch has vanishing probability");
  }
  return {phase_normalized(proj), p};
}

// Probe-target entanglement of the collision state, closed form: the binary
// entropy -|alpha|^2 ln |alpha|^2 - |beta|^2 ln |beta|^2 in nats.
template <typename Scalar>
Scalar dicke_entanglement(const DickeConfig<Scalar>& cfg) {
  validate(cfg);
  return detail::entropy_term(std::norm(cfg.alpha)) +
         detail::entropy_term(std::norm(cfg.beta));
}

// The same entanglement computed the long way: trace out the probe and
// diagonalize the 2x2 target reduction.
template <typename Scalar>
Scalar dicke_entanglement_numeric(const DickeState<Scalar>& s) {
  return von_neumann_entropy(eig_hermitian(reduced_density_cols(s, 2, 2)));
}

}  // namespace ifm
