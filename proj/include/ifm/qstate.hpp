#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "ifm/basis.hpp"
#include "ifm/errors.hpp"

namespace ifm {

template <typename Scalar>
using Complex = std::complex<Scalar>;

// Pure state of the photon (x) object system, flattened row-major per
// basis_index(). Always unit norm once it leaves make_state().
template <typename Scalar>
using JointState = Eigen::Matrix<Complex<Scalar>, kJointDim, 1>;

template <typename Scalar>
using PhotonVector = Eigen::Matrix<Complex<Scalar>, kPhotonDim, 1>;

template <typename Scalar>
using ObjectVector = Eigen::Matrix<Complex<Scalar>, kObjectDim, 1>;

template <typename Scalar>
using PhotonMatrix = Eigen::Matrix<Complex<Scalar>, kPhotonDim, kPhotonDim>;

template <typename Scalar>
using DensityMatrix =
    Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// Eigenvalues of a density matrix, sorted descending.
template <typename Scalar>
struct Spectrum {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;
};

enum class Subsystem { Photon, Object };

// Tolerances. Unit-norm is the invariant the library maintains internally;
// the looser precondition tolerance is what we demand of caller-supplied
// vectors before renormalizing or rejecting.
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kNormPrecondTol = 1e-9;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kSpectrumTraceTol = 1e-9;
inline constexpr double kEigenvalueClampTol = 1e-10;
inline constexpr double kZeroProbabilityTol = 1e-12;

namespace detail {

// -x ln x with the measure-zero limit 0 ln 0 = 0.
template <typename Scalar>
Scalar entropy_term(Scalar x) {
  return x > Scalar(0) ? -x * std::log(x) : Scalar(0);
}

template <typename Derived>
void check_finite(const Eigen::MatrixBase<Derived>& v, const char* where) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto z = Complex<double>(v(i));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteError(std::string(where) + ": entry " + std::to_string(i) +
                           " is not finite");
    }
  }
}

}  // namespace detail

// Scales a 12-amplitude vector to unit norm, preserving relative phases.
// Rejects non-finite entries and the all-zero vector.
template <typename Derived>
auto make_state(const Eigen::MatrixBase<Derived>& amplitudes)
    -> JointState<typename Eigen::NumTraits<typename Derived::Scalar>::Real> {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (amplitudes.rows() != kJointDim || amplitudes.cols() != 1) {
    throw Error("make_state: expected a " + std::to_string(kJointDim) +
                "-component column vector, got " +
                std::to_string(amplitudes.rows()) + "x" +
                std::to_string(amplitudes.cols()));
  }
  detail::check_finite(amplitudes, "make_state");
  JointState<Real> v = amplitudes.template cast<Complex<Real>>();
  const Real n = v.norm();
  if (n == Real(0)) {
    throw AllZeroError("make_state: every amplitude is zero");
  }
  return v / n;
}

// |photon> (x) |object> basis vector.
template <typename Scalar = double>
JointState<Scalar> basis_state(PhotonMode p, ObjectState o) {
  JointState<Scalar> v = JointState<Scalar>::Zero();
  v[basis_index(p, o)] = Complex<Scalar>(1);
  return v;
}

// <a|b>, conjugate-linear in the first argument.
template <typename DerivedA, typename DerivedB>
auto inner_product(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  return a.dot(b);
}

// |<a|b>|^2 for two normalized vectors; the Born weight of b on a.
template <typename DerivedA, typename DerivedB>
auto overlap_squared(const Eigen::MatrixBase<DerivedA>& a,
                     const Eigen::MatrixBase<DerivedB>& b) ->
    typename Eigen::NumTraits<typename DerivedA::Scalar>::Real {
  using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
  if (std::abs(a.norm() - Real(1)) > Real(kNormPrecondTol)) {
    throw NotNormalizedError("overlap_squared: first argument is not unit norm");
  }
  if (std::abs(b.norm() - Real(1)) > Real(kNormPrecondTol)) {
    throw NotNormalizedError("overlap_squared: second argument is not unit norm");
  }
  return std::norm(a.dot(b));
}

// Reduced density matrix of the row subsystem of a pure bipartite vector laid
// out row-major as rows x cols: rho = M M^dagger with M(r, c) = psi[cols*r + c].
template <typename Derived>
auto reduced_density_rows(const Eigen::MatrixBase<Derived>& psi,
                          Eigen::Index rows, Eigen::Index cols)
    -> DensityMatrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real> {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Mat = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  if (psi.size() != rows * cols) {
    throw Error("reduced_density_rows: vector length " +
                std::to_string(psi.size()) + " does not factor as " +
                std::to_string(rows) + "x" + std::to_string(cols));
  }
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = Complex<Real>(psi(cols * r + c));
    }
  }
  return m * m.adjoint();
}

// Reduced density matrix of the column subsystem: rho = M^T conj(M).
template <typename Derived>
auto reduced_density_cols(const Eigen::MatrixBase<Derived>& psi,
                          Eigen::Index rows, Eigen::Index cols)
    -> DensityMatrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real> {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Mat = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  if (psi.size() != rows * cols) {
    throw Error("reduced_density_cols: vector length " +
                std::to_string(psi.size()) + " does not factor as " +
                std::to_string(rows) + "x" + std::to_string(cols));
  }
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = Complex<Real>(psi(cols * r + c));
    }
  }
  return m.transpose() * m.conjugate();
}

// Traces the complementary subsystem out of a normalized joint pure state.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const JointState<Scalar>& s, Subsystem keep) {
  return keep == Subsystem::Photon
             ? reduced_density_rows(s, kPhotonDim, kObjectDim)
             : reduced_density_cols(s, kPhotonDim, kObjectDim);
}

namespace detail {

template <typename Scalar>
struct HermitianEigenDecomposition {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;  // descending
  Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>
      vectors;  // matching columns
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Each (p, q)
// step first rotates the phase of a_pq onto the real axis, then applies the
// classic real Givens rotation that zeroes it. Dimensions here are tiny
// (n <= 4), so the quadratic sweep and the explicit matrix products are
// plenty fast and keep every arithmetic step visible.
template <typename Scalar>
HermitianEigenDecomposition<Scalar> jacobi_hermitian(
    Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> a,
    Scalar off_tol = Scalar(1e-14), int max_sweeps = 100) {
  using C = Complex<Scalar>;
  using Mat = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  Mat v = Mat::Identity(n, n);

  const auto off_norm = [&a, n]() {
    Scalar s = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        s += Scalar(2) * std::norm(a(p, q));
      }
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > off_tol; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const C apq = a(p, q);
        const Scalar h = std::abs(apq);
        if (h == Scalar(0)) {
          continue;
        }
        // Phase rotation diag(1, e^{-i phi}) makes the pivot real...
        const C e = std::polar(Scalar(1), -std::arg(apq));
        // ...and the angle halving the remaining 2x2 real block zeroes it.
        const Scalar theta =
            Scalar(0.5) *
            std::atan2(Scalar(2) * h, a(q, q).real() - a(p, p).real());
        const Scalar c = std::cos(theta);
        const Scalar s = std::sin(theta);
        Mat j = Mat::Identity(n, n);
        j(p, p) = C(c);
        j(p, q) = C(s);
        j(q, p) = -s * e;
        j(q, q) = c * e;
        a = (j.adjoint() * a * j).eval();
        v = (v * j).eval();
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index k) {
    return a(i, i).real() > a(k, k).real();
  });

  HermitianEigenDecomposition<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = a(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(i)])
                        .real();
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace detail

// Eigenvalues of a Hermitian matrix, descending. Rejects matrices whose
// anti-Hermitian part exceeds the tolerance, then diagonalizes the
// symmetrized matrix with the Jacobi solver above.
template <typename Scalar>
Spectrum<Scalar> eig_hermitian(const DensityMatrix<Scalar>& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw NotHermitianError("eig_hermitian: matrix is not square");
  }
  detail::check_finite(m.reshaped(), "eig_hermitian");
  const Scalar asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > Scalar(kHermitianTol)) {
    throw NotHermitianError(
        "eig_hermitian: anti-Hermitian part has max entry " +
        std::to_string(static_cast<double>(asym)));
  }
  const DensityMatrix<Scalar> sym = (m + m.adjoint()) / Scalar(2);
  return Spectrum<Scalar>{detail::jacobi_hermitian<Scalar>(sym).values};
}

// Shannon entropy of a density-matrix spectrum, in nats. Eigenvalues in
// [-1e-10, 0) are rounding debris and clamp to zero; anything more negative,
// or a trace away from one, is a real defect and throws.
template <typename Scalar>
Scalar von_neumann_entropy(const Spectrum<Scalar>& spectrum) {
  const auto& ev = spectrum.eigenvalues;
  if (ev.size() == 0) {
    throw InvalidSpectrumError("von_neumann_entropy: empty spectrum");
  }
  Scalar trace = 0;
  Scalar h = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const Scalar lambda = ev[i];
    if (!std::isfinite(static_cast<double>(lambda))) {
      throw InvalidSpectrumError("von_neumann_entropy: eigenvalue " +
                                 std::to_string(i) + " is not finite");
    }
    if (lambda < Scalar(-kEigenvalueClampTol)) {
      throw InvalidSpectrumError(
          "von_neumann_entropy: eigenvalue " +
          std::to_string(static_cast<double>(lambda)) +
          " is negative beyond rounding tolerance");
    }
    trace += lambda;
    h += detail::entropy_term(std::max(lambda, Scalar(0)));
  }
  if (std::abs(trace - Scalar(1)) > Scalar(kSpectrumTraceTol)) {
    throw InvalidSpectrumError("von_neumann_entropy: eigenvalues sum to " +
                               std::to_string(static_cast<double>(trace)) +
                               ", expected 1");
  }
  return std::max(h, Scalar(0));
}

// Entanglement entropy of a normalized joint pure state: the von Neumann
// entropy of either reduction (they agree for pure states).
template <typename Scalar>
Scalar entanglement_entropy(const JointState<Scalar>& s, Subsystem sub) {
  return von_neumann_entropy(eig_hermitian(partial_trace(s, sub)));
}

// Unit-norm copy with the first non-negligible component rotated onto the
// positive real axis, removing the global-phase ambiguity so post-selected
// states compare bitwise-stably.
template <typename Derived>
auto phase_normalized(const Eigen::MatrixBase<Derived>& v)
    -> Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, 1> out = v;
  const Real n = out.norm();
  if (n == Real(0)) {
    throw AllZeroError("phase_normalized: every component is zero");
  }
  out /= n;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const Real mag = std::abs(out[i]);
    if (mag > Real(kUnitNormTol)) {
      out *= std::conj(out[i]) / Scalar(mag);
      break;
    }
  }
  return out;
}

}  // namespace ifm
