#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "ifm/qstate.hpp"

namespace ifm {

// Object preparation: amplitude alpha on region X, beta on region Y, with
// |alpha|^2 + |beta|^2 = 1.
template <typename Scalar>
struct EVConfig {
  Complex<Scalar> alpha{};
  Complex<Scalar> beta{};
};

// Photon-object coupling strengths: gamma is the amplitude for the photon to
// pass the object untouched, delta the amplitude for absorption, with
// |gamma|^2 + |delta|^2 = 1.
template <typename Scalar>
struct InteractionSpec {
  Complex<Scalar> gamma{};
  Complex<Scalar> delta{};

  // The opaque object of the classic bomb test: certain absorption.
  static InteractionSpec absorbing() {
    return {Complex<Scalar>(0), Complex<Scalar>(1)};
  }

  // Real transparency g in [0, 1] with delta fixed on the positive branch.
  static InteractionSpec from_gamma(Scalar g) {
    if (!(g >= Scalar(0) && g <= Scalar(1))) {
      throw InvalidSpecError("InteractionSpec::from_gamma: gamma = " +
                             std::to_string(static_cast<double>(g)) +
                             " is outside [0, 1]");
    }
    return {Complex<Scalar>(g), Complex<Scalar>(std::sqrt(Scalar(1) - g * g))};
  }
};

template <typename Scalar>
void validate(const EVConfig<Scalar>& cfg) {
  const Scalar s = std::norm(cfg.alpha) + std::norm(cfg.beta);
  if (!(std::abs(s - Scalar(1)) <= Scalar(kUnitNormTol))) {
    throw InvalidConfigError(
        "EVConfig: |alpha|^2 + |beta|^2 = " +
        std::to_string(static_cast<double>(s)) + " must equal 1");
  }
}

template <typename Scalar>
void validate(const InteractionSpec<Scalar>& spec) {
  const Scalar s = std::norm(spec.gamma) + std::norm(spec.delta);
  if (!(std::abs(s - Scalar(1)) <= Scalar(kUnitNormTol))) {
    throw InvalidSpecError(
        "InteractionSpec: |gamma|^2 + |delta|^2 = " +
        std::to_string(static_cast<double>(s)) + " must equal 1");
  }
}

// Snapshot of the joint state after each optical element.
template <typename Scalar>
struct StageTrace {
  JointState<Scalar> psi0;       // prepared input
  JointState<Scalar> psi1;       // after first beam splitter
  JointState<Scalar> psi2;       // after the photon-object interaction
  JointState<Scalar> psi3;       // after the mirrors
  JointState<Scalar> psi_final;  // after second beam splitter
};

// Click probabilities at the light detector (photon exits in arm x), the dark
// detector (arm y), and the no-click absorption record.
template <typename Scalar>
struct DetectorDistribution {
  Scalar p_ld{};
  Scalar p_dd{};
  Scalar p_abs{};
};

enum class Outcome : int { LD = 0, DD = 1, ABS = 2 };

constexpr const char* label(Outcome o) {
  switch (o) {
    case Outcome::LD:
      return "LD";
    case Outcome::DD:
      return "DD";
    case Outcome::ABS:
      return "ABS";
  }
  return "?";
}

inline constexpr std::array<Outcome, 3> kOutcomes = {Outcome::LD, Outcome::DD,
                                                     Outcome::ABS};

// Closed-form and pipeline-numeric values of the same entanglement entropy,
// reported side by side so disagreement is immediately visible.
template <typename Scalar>
struct EntanglementValue {
  Scalar closed_form{};
  Scalar numeric{};
};

// 50/50 beam splitter on the photon sector: the transmitted amplitude keeps
// its phase, the reflected amplitude picks up i, the vacuum is untouched.
template <typename Scalar>
PhotonMatrix<Scalar> beam_splitter_matrix() {
  using C = Complex<Scalar>;
  const Scalar r = Scalar(1) / std::numbers::sqrt2_v<Scalar>;
  const C ir(0, r);
  PhotonMatrix<Scalar> u;
  u << C(r), ir, C(0),
       ir, C(r), C(0),
       C(0), C(0), C(1);
  return u;
}

// Arm-swapping mirror pair; each reflection contributes a phase of -1 on the
// swapped single-photon modes.
template <typename Scalar>
PhotonMatrix<Scalar> mirror_matrix() {
  using C = Complex<Scalar>;
  PhotonMatrix<Scalar> u;
  u << C(0), C(-1), C(0),
       C(-1), C(0), C(0),
       C(0), C(0), C(1);
  return u;
}

// Applies a photon-sector unitary as u (x) identity on the object factor.
// The row-major joint layout makes this a single 3x4 matrix product.
template <typename Scalar>
JointState<Scalar> apply_photon_unitary(const JointState<Scalar>& s,
                                        const PhotonMatrix<Scalar>& u) {
  using RowMat =
      Eigen::Matrix<Complex<Scalar>, kPhotonDim, kObjectDim, Eigen::RowMajor>;
  JointState<Scalar> out;
  Eigen::Map<RowMat>(out.data()) = u * Eigen::Map<const RowMat>(s.data());
  return out;
}

template <typename Scalar>
JointState<Scalar> apply_bs1(const JointState<Scalar>& s) {
  return apply_photon_unitary(s, beam_splitter_matrix<Scalar>());
}

template <typename Scalar>
JointState<Scalar> apply_bs2(const JointState<Scalar>& s) {
  return apply_photon_unitary(s, beam_splitter_matrix<Scalar>());
}

template <typename Scalar>
JointState<Scalar> apply_mirrors(const JointState<Scalar>& s) {
  return apply_photon_unitary(s, mirror_matrix<Scalar>());
}

namespace detail {

// Unitary rotation on the two-dimensional span of a (photon present, object
// ground) level g and its absorption partner (vacuum, object excited) x:
//   g -> gamma g + delta x,   x -> -conj(delta) g + conj(gamma) x.
// The second column is forced by unitarity; physically prepared inputs never
// populate x before the interaction, so only the first column is ever probed
// by the pipeline.
template <typename Scalar>
void rotate_absorption_pair(JointState<Scalar>& s, int ground_index,
                            int excited_index,
                            const InteractionSpec<Scalar>& spec) {
  const Complex<Scalar> g = s[ground_index];
  const Complex<Scalar> x = s[excited_index];
  s[ground_index] = spec.gamma * g - std::conj(spec.delta) * x;
  s[excited_index] = spec.delta * g + std::conj(spec.gamma) * x;
}

}  // namespace detail

// Photon-object interaction: a photon crossing the region that holds the
// object is transmitted with amplitude gamma or absorbed with amplitude
// delta, exciting the object in place. A photon in the other arm, or no
// photon, leaves the object alone.
template <typename Scalar>
JointState<Scalar> apply_interaction(const JointState<Scalar>& s,
                                     const InteractionSpec<Scalar>& spec) {
  validate(spec);
  JointState<Scalar> out = s;
  detail::rotate_absorption_pair(
      out, basis_index(PhotonMode::OneX, ObjectState::GX),
      basis_index(PhotonMode::Vac, ObjectState::EX), spec);
  detail::rotate_absorption_pair(
      out, basis_index(PhotonMode::OneY, ObjectState::GY),
      basis_index(PhotonMode::Vac, ObjectState::EY), spec);
  return out;
}

// Photon injected in arm x, object prepared in (alpha, beta) across the two
// ground regions.
template <typename Scalar>
JointState<Scalar> initial_state(const EVConfig<Scalar>& cfg) {
  validate(cfg);
  JointState<Scalar> v = JointState<Scalar>::Zero();
  v[basis_index(PhotonMode::OneX, ObjectState::GX)] = cfg.alpha;
  v[basis_index(PhotonMode::OneX, ObjectState::GY)] = cfg.beta;
  return make_state(v);
}

// Full staged evolution: prepare, split, interact, reflect, recombine.
template <typename Scalar>
StageTrace<Scalar> run_ev(const EVConfig<Scalar>& cfg,
                          const InteractionSpec<Scalar>& spec) {
  StageTrace<Scalar> t;
  t.psi0 = initial_state(cfg);
  t.psi1 = apply_bs1(t.psi0);
  t.psi2 = apply_interaction(t.psi1, spec);
  t.psi3 = apply_mirrors(t.psi2);
  t.psi_final = apply_bs2(t.psi3);
  return t;
}

// Born weights of the three photon sectors of a normalized joint state.
template <typename Scalar>
DetectorDistribution<Scalar> detector_probabilities(const JointState<Scalar>& s) {
  using RowMat =
      Eigen::Matrix<Complex<Scalar>, kPhotonDim, kObjectDim, Eigen::RowMajor>;
  const Eigen::Map<const RowMat> m(s.data());
  DetectorDistribution<Scalar> d;
  d.p_ld = m.row(static_cast<int>(PhotonMode::OneX)).squaredNorm();
  d.p_dd = m.row(static_cast<int>(PhotonMode::OneY)).squaredNorm();
  d.p_abs = m.row(static_cast<int>(PhotonMode::Vac)).squaredNorm();
  return d;
}

// Object state post-selected on one detector outcome: the matching photon row,
// renormalized and phase-fixed. Throws if that outcome cannot occur.
template <typename Scalar>
ObjectVector<Scalar> conditional_object_state(const JointState<Scalar>& s,
                                              Outcome outcome) {
  using RowMat =
      Eigen::Matrix<Complex<Scalar>, kPhotonDim, kObjectDim, Eigen::RowMajor>;
  const Eigen::Map<const RowMat> m(s.data());
  const ObjectVector<Scalar> row =
      m.row(static_cast<int>(outcome)).transpose();
  if (row.squaredNorm() <= Scalar(kZeroProbabilityTol)) {
    throw ZeroProbabilityError(std::string("conditional_object_state: outcome ") +
                               label(outcome) + " has vanishing probability");
  }
  return phase_normalized(row);
}

// Which-region correlation picked up by a dark-detector click:
// C = (|alpha|^2 - |beta|^2)^2. Zero exactly at the balanced preparation,
// where the click pins the object to the antisymmetric superposition.
template <typename Scalar>
Scalar correlation_c(const EVConfig<Scalar>& cfg) {
  validate(cfg);
  const Scalar d = std::norm(cfg.alpha) - std::norm(cfg.beta);
  return d * d;
}

namespace detail {

// x ln sqrt(x) = (x/2) ln x, the term shape shared by both closed forms.
template <typename Scalar>
Scalar half_x_ln_x(Scalar x) {
  return x > Scalar(0) ? Scalar(0.5) * x * std::log(x) : Scalar(0);
}

}  // namespace detail

// Analytic eigenvalues of the photon reduction of the final state, descending.
// The vacuum row contributes |delta|^2 / 2 directly; the 2x2 block over the
// single-photon rows has trace t = (|1+gamma|^2 + |1-gamma|^2) / 4 and
// determinant (|1+gamma|^2 |1-gamma|^2 / 16) (1 - c^2) with
// c = |alpha|^2 - |beta|^2.
template <typename Scalar>
std::array<Scalar, 3> closed_form_photon_spectrum(
    const EVConfig<Scalar>& cfg, const InteractionSpec<Scalar>& spec) {
  validate(cfg);
  validate(spec);
  const Scalar c = std::norm(cfg.alpha) - std::norm(cfg.beta);
  const Scalar mp = std::norm(Complex<Scalar>(1) + spec.gamma);
  const Scalar mm = std::norm(Complex<Scalar>(1) - spec.gamma);
  const Scalar t = (mp + mm) / Scalar(4);
  const Scalar det = (mp * mm / Scalar(16)) * (Scalar(1) - c * c);
  const Scalar disc =
      std::sqrt(std::max(t * t - Scalar(4) * det, Scalar(0)));
  std::array<Scalar, 3> ev = {(t + disc) / Scalar(2), (t - disc) / Scalar(2),
                              std::norm(spec.delta) / Scalar(2)};
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// Entropy of the closed-form spectrum above, in nats.
template <typename Scalar>
Scalar closed_form_entanglement(const EVConfig<Scalar>& cfg,
                                const InteractionSpec<Scalar>& spec) {
  const auto ev = closed_form_photon_spectrum(cfg, spec);
  return detail::entropy_term(ev[0]) + detail::entropy_term(ev[1]) +
         detail::entropy_term(ev[2]);
}

// Entanglement of the final state against the preparation amplitude, for the
// fully absorbing object:
//   E = ln 2 - a ln sqrt(a) - (1 - a) ln sqrt(1 - a),  a = |alpha|^2,
// paired with the entropy obtained by running the pipeline and diagonalizing
// the photon reduction numerically.
template <typename Scalar>
EntanglementValue<Scalar> entanglement_alpha(const EVConfig<Scalar>& cfg) {
  validate(cfg);
  const Scalar a = std::norm(cfg.alpha);
  EntanglementValue<Scalar> e;
  e.closed_form = std::numbers::ln2_v<Scalar> - detail::half_x_ln_x(a) -
                  detail::half_x_ln_x(Scalar(1) - a);
  const StageTrace<Scalar> t = run_ev(cfg, InteractionSpec<Scalar>::absorbing());
  e.numeric = entanglement_entropy(t.psi_final, Subsystem::Photon);
  return e;
}

// Entanglement of the final state against the transparency g, for the object
// prepared entirely in the photon arm (alpha = 0):
//   E = ln 2 - (1 + g^2) ln sqrt(1 + g^2) - (1 - g^2) ln sqrt(1 - g^2),
// again paired with the pipeline-numeric entropy.
template <typename Scalar>
EntanglementValue<Scalar> entanglement_gamma(Scalar g) {
  const InteractionSpec<Scalar> spec = InteractionSpec<Scalar>::from_gamma(g);
  const Scalar g2 = g * g;
  EntanglementValue<Scalar> e;
  e.closed_form = std::numbers::ln2_v<Scalar> -
                  detail::half_x_ln_x(Scalar(1) + g2) -
                  detail::half_x_ln_x(Scalar(1) - g2);
  const EVConfig<Scalar> cfg{Complex<Scalar>(0), Complex<Scalar>(1)};
  const StageTrace<Scalar> t = run_ev(cfg, spec);
  e.numeric = entanglement_entropy(t.psi_final, Subsystem::Photon);
  return e;
}

}  // namespace ifm
