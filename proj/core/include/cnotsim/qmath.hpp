// Copyright 2026 The cnotsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace cnotsim {

using Complex = std::complex<double>;

/// Single-qubit operator.
using Op2 = Eigen::Matrix2cd;
/// Two-qubit operator, basis |q1 q2> with qubit 1 the most significant bit.
using Op4 = Eigen::Matrix4cd;
/// Linear map on 4x4 density matrices in column-stacking convention,
/// vec(A X B) = (B^T kron A) vec(X).
using Superop = Eigen::Matrix<Complex, 16, 16>;

inline constexpr Complex kI{0.0, 1.0};

namespace pauli {
Op2 identity();
Op2 x();
Op2 y();
Op2 z();
/// |0><1|. With H = -(eps/2) sigma_z the state |1> is the excited state.
Op2 lowering();
}  // namespace pauli

/// Kronecker product, left factor is the more significant subsystem.
template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  constexpr int kRowsA = A::RowsAtCompileTime, kRowsB = B::RowsAtCompileTime;
  constexpr int kColsA = A::ColsAtCompileTime, kColsB = B::ColsAtCompileTime;
  constexpr int kRows = (kRowsA == Eigen::Dynamic || kRowsB == Eigen::Dynamic)
                            ? Eigen::Dynamic
                            : kRowsA * kRowsB;
  constexpr int kCols = (kColsA == Eigen::Dynamic || kColsB == Eigen::Dynamic)
                            ? Eigen::Dynamic
                            : kColsA * kColsB;
  using Scalar = typename A::Scalar;
  Eigen::Matrix<Scalar, kRows, kCols> out(a.rows() * b.rows(),
                                          a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Runtime-checked two-qubit Kronecker product for dynamically sized inputs.
/// Throws std::invalid_argument unless both factors are 2x2.
Eigen::MatrixXcd kron_qubits(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b);

/// Largest |a_ij|.
template <typename A>
double max_abs(const Eigen::MatrixBase<A>& a) {
  return a.cwiseAbs().maxCoeff();
}

/// max_ij |a - a^dagger|.
template <typename A>
double hermiticity_error(const Eigen::MatrixBase<A>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// max_ij |u^dagger u - I|.
template <typename A>
double unitarity_error(const Eigen::MatrixBase<A>& u) {
  using Mat = Eigen::Matrix<typename A::Scalar, A::ColsAtCompileTime,
                            A::ColsAtCompileTime>;
  const Mat gram = u.adjoint() * u;
  return (gram - Mat::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

/// Frobenius norm of a - b. Throws std::invalid_argument on shape mismatch.
template <typename A, typename B>
double frobenius_distance(const Eigen::MatrixBase<A>& a,
                          const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: dimension mismatch");
  }
  return (a - b).norm();
}

/// exp(-i h t) for Hermitian h given in angular-frequency units (rad/s) and
/// t in seconds. Computed from the eigendecomposition of h, so the result is
/// unitary to rounding. Throws std::invalid_argument if h is not Hermitian
/// within 1e-12 relative to its largest entry.
Op2 expm_hermitian_generator(const Op2& h, double t);
Op4 expm_hermitian_generator(const Op4& h, double t);

/// exp(g t) for a general 16x16 generator (Lindblad superoperators).
Superop expm_general(const Superop& generator, double t);

/// Superoperator of rho -> u rho u^dagger.
Superop conjugation_superop(const Op4& u);

}  // namespace cnotsim
