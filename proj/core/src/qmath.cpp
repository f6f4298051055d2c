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

#include "cnotsim/qmath.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace cnotsim {

namespace pauli {

Op2 identity() { return Op2::Identity(); }

Op2 x() {
  Op2 m;
  m << 0, 1, 1, 0;
  return m;
}

Op2 y() {
  Op2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Op2 z() {
  Op2 m;
  m << 1, 0, 0, -1;
  return m;
}

Op2 lowering() {
  Op2 m;
  m << 0, 1, 0, 0;
  return m;
}

}  // namespace pauli

Eigen::MatrixXcd kron_qubits(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw std::invalid_argument("kron_qubits: both factors must be 2x2");
  }
  return kron(a, b);
}

namespace {

template <typename Mat>
Mat expm_hermitian_impl(const Mat& h, double t) {
  const double scale = max_abs(h);
  if (hermiticity_error(h) > 1e-12 * std::max(scale, 1.0)) {
    throw std::invalid_argument(
        "expm_hermitian_generator: generator is not Hermitian");
  }
  if (scale == 0.0) return Mat::Identity();
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Mat hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> solver(hs);
  using Vec = Eigen::Matrix<Complex, Mat::RowsAtCompileTime, 1>;
  Vec phases;
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  const auto& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace

Op2 expm_hermitian_generator(const Op2& h, double t) {
  return expm_hermitian_impl(h, t);
}

Op4 expm_hermitian_generator(const Op4& h, double t) {
  return expm_hermitian_impl(h, t);
}

Superop expm_general(const Superop& generator, double t) {
  const Eigen::MatrixXcd scaled = generator * t;
  return scaled.exp();
}

Superop conjugation_superop(const Op4& u) {
  return kron(u.conjugate(), u);
}

}  // namespace cnotsim
