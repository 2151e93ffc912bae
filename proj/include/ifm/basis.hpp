#pragma once

#include <array>

namespace ifm {

// Photon occupation of the two interferometer arms. OneX is the single photon
// in arm x, OneY in arm y, Vac the photon lost to absorption.
enum class PhotonMode : int { OneX = 0, OneY = 1, Vac = 2 };

// Object position/excitation label: ground in region X or Y, excited
// (absorbed the photon) in region X or Y.
enum class ObjectState : int { GX = 0, GY = 1, EX = 2, EY = 3 };

inline constexpr int kPhotonDim = 3;
inline constexpr int kObjectDim = 4;
inline constexpr int kJointDim = kPhotonDim * kObjectDim;

// Row-major layout of the joint basis: photon index is the row, object index
// the column. This is the one place the flattening convention lives; the
// reduced-density maps in qstate.hpp rely on it.
constexpr int basis_index(PhotonMode p, ObjectState o) {
  return kObjectDim * static_cast<int>(p) + static_cast<int>(o);
}

constexpr PhotonMode photon_of(int joint_index) {
  return static_cast<PhotonMode>(joint_index / kObjectDim);
}

constexpr ObjectState object_of(int joint_index) {
  return static_cast<ObjectState>(joint_index % kObjectDim);
}

constexpr const char* label(PhotonMode p) {
  switch (p) {
    case PhotonMode::OneX:
      return "1x0y";
    case PhotonMode::OneY:
      return "0x1y";
    case PhotonMode::Vac:
      return "0x0y";
  }
  return "?";
}

constexpr const char* label(ObjectState o) {
  switch (o) {
    case ObjectState::GX:
      return "GX";
    case ObjectState::GY:
      return "GY";
    case ObjectState::EX:
      return "EX";
    case ObjectState::EY:
      return "EY";
  }
  return "?";
}

inline constexpr std::array<PhotonMode, kPhotonDim> kPhotonModes = {
    PhotonMode::OneX, PhotonMode::OneY, PhotonMode::Vac};

inline constexpr std::array<ObjectState, kObjectDim> kObjectStates = {
    ObjectState::GX, ObjectState::GY, ObjectState::EX, ObjectState::EY};

}  // namespace ifm
