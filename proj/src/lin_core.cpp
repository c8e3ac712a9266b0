// Copyright 2026 The bosonlab Authors
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

#include "bosonlab/lin_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bosonlab {

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  const Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_unitary(const Matrix& u, const char* what, double tol) {
  if (u.rows() != u.cols()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= tol)) {
    throw ValidationError(std::string(what) + ": not unitary (defect " +
                          std::to_string(defect) + ")");
  }
}

ComplexUnitary::ComplexUnitary(Matrix m, double tol) : m_(std::move(m)) {
  require_unitary(m_, "ComplexUnitary", tol);
}

ComplexUnitary ComplexUnitary::identity(int n) {
  return ComplexUnitary(Matrix::Identity(n, n));
}

ComplexUnitary ComplexUnitary::adjoint() const {
  return ComplexUnitary(m_.adjoint());
}

Gate2 Eigen2::reconstruct() const {
  Gate2 d = Gate2::Zero();
  d(0, 0) = std::polar(1.0, phases[0]);
  d(1, 1) = std::polar(1.0, phases[1]);
  return basis * d * basis.adjoint();
}

namespace {

Matrix ginibre(int rows, int cols, Rng& rng) {
  Matrix z(rows, cols);
  const double s = std::sqrt(0.5);
  // Column-major fill keeps the stream order independent of Eigen internals.
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(r, c) = Complex(s * re, s * im);
    }
  }
  return z;
}

Matrix orthonormal_columns(const Matrix& z) {
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(z.rows(), z.cols());
  const Matrix& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    const Complex r = packed(j, j);
    const double mag = std::abs(r);
    q.col(j) *= (mag > 0.0) ? r / mag : Complex(1.0);
  }
  return q;
}

double principal_phase(Complex z) {
  const double phi = std::arg(z);
  return (phi <= -std::numbers::pi) ? std::numbers::pi : phi;
}

}  // namespace

ComplexUnitary haar_unitary(int n, Rng& rng) {
  if (n != 1 && n != 2) {
    throw DimensionError("haar_unitary: order must be 1 or 2, got " +
                         std::to_string(n));
  }
  return ComplexUnitary(orthonormal_columns(ginibre(n, n, rng)));
}

Gate2 haar_gate(Rng& rng) { return haar_unitary(2, rng).matrix(); }

ComplexUnitary haar_unitary_global(int n, Rng& rng) {
  if (n < 1) throw DimensionError("haar_unitary_global: order must be >= 1");
  return ComplexUnitary(orthonormal_columns(ginibre(n, n, rng)), 1e-9);
}

Matrix haar_columns(int modes, int k, Rng& rng) {
  if (modes < 1 || k < 0 || k > modes) {
    throw DimensionError("haar_columns: need 0 <= k <= modes");
  }
  return orthonormal_columns(ginibre(modes, k, rng));
}

Eigen2 eig_unitary2(const Gate2& u) {
  require_unitary(u, "eig_unitary2");
  const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
  const Complex half_trace = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex l1 = half_trace + disc;
  const Complex l2 = half_trace - disc;

  Eigen2 out;
  if (std::abs(l1 - l2) < 1e-12) {
    // Unitary matrices are normal, so a double eigenvalue means a scalar.
    out.basis = Gate2::Identity();
    out.phases = {principal_phase(u(0, 0)), principal_phase(u(1, 1))};
    return out;
  }

  // Two candidate eigenvectors for l1; keep the better conditioned one.
  Eigen::Vector2cd v(b, l1 - a);
  const Eigen::Vector2cd w(l1 - d, c);
  if (w.norm() > v.norm()) v = w;
  v.normalize();
  out.basis.col(0) = v;
  out.basis.col(1) = Eigen::Vector2cd(-std::conj(v(1)), std::conj(v(0)));

  // Read the phases back from the rotated matrix so they match the basis.
  const Gate2 diag = out.basis.adjoint() * u * out.basis;
  out.phases = {principal_phase(diag(0, 0)), principal_phase(diag(1, 1))};
  return out;
}

ComplexUnitary compose(const ComplexUnitary& a, const ComplexUnitary& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("compose: dimension mismatch");
  }
  return ComplexUnitary(a.matrix() * b.matrix(), 1e-9);
}

}  // namespace bosonlab
