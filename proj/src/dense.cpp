// Copyright 2026 The reas-sim Authors
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

#include "reas/dense.hpp"

#include <stdexcept>

namespace reas {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix hermitian_rotation(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const auto& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    phases(i) = std::exp(Complex(0, -t * vals(i)));
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues().minCoeff() < 1e-12)
    throw std::invalid_argument("polar projection of a singular matrix");
  return svd.matrixU() * svd.matrixV().adjoint();
}

bool is_unitary(const Matrix& m, double tol) {
  Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() < tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

double operator_distance_up_to_phase(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("dimension mismatch");
  if (!is_unitary(u, 1e-8) || !is_unitary(v, 1e-8))
    throw std::invalid_argument("operator distance requires unitary inputs");
  // min_phi ||u - e^{i phi} v||_F / sqrt(dim); the optimum phase aligns v
  // with u, e^{i phi} = tr(v^dag u)/|tr(v^dag u)|. Formed by subtraction
  // rather than through sqrt(2 - 2|tr|/dim), which loses half the
  // significant digits near zero.
  Complex tr = (v.adjoint() * u).trace();
  Complex phase = (std::abs(tr) < 1e-300) ? Complex(1, 0) : tr / std::abs(tr);
  double dim = static_cast<double>(u.rows());
  return (u - phase * v).norm() / std::sqrt(dim);
}

double trace_distance(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace reas
