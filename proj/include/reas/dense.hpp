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

#ifndef REAS_DENSE_HPP
#define REAS_DENSE_HPP

#include <complex>

#include <Eigen/Dense>

namespace reas {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix kron(const Matrix& a, const Matrix& b);

// exp(-i t H) for Hermitian H, exactly unitary via the spectral decomposition.
Matrix hermitian_rotation(const Matrix& h, double t);

// Polar projection M (M^dag M)^{-1/2}, the nearest unitary to M.
Matrix polar_unitary(const Matrix& m);

bool is_unitary(const Matrix& m, double tol = 1e-10);
bool is_hermitian(const Matrix& m, double tol = 1e-10);

// min_phi ||u - e^{i phi} v||_F / sqrt(dim) = sqrt(2 - 2|tr(u^dag v)|/dim).
// Both arguments must be unitary.
double operator_distance_up_to_phase(const Matrix& u, const Matrix& v);

// 1/2 ||a - b||_1 for Hermitian a, b.
double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace reas

#endif  // REAS_DENSE_HPP
