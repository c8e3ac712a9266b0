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

#ifndef BOSONLAB_LIN_CORE_HPP_
#define BOSONLAB_LIN_CORE_HPP_

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "bosonlab/errors.hpp"
#include "bosonlab/rng.hpp"

namespace bosonlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Gate2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTolerance = 1e-10;

// max |(U^dagger U - I)_ij|
double unitarity_defect(const Matrix& u);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Throws ValidationError if the defect exceeds tol.
void require_unitary(const Matrix& u, const char* what,
                     double tol = kUnitaryTolerance);

class ComplexUnitary {
 public:
  explicit ComplexUnitary(Matrix m, double tol = kUnitaryTolerance);

  static ComplexUnitary identity(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  ComplexUnitary adjoint() const;

 private:
  Matrix m_;
};

// U = L diag(e^{i phases}) L^dagger with L unitary and phases in (-pi, pi].
struct Eigen2 {
  Gate2 basis;
  std::array<double, 2> phases{};

  Gate2 reconstruct() const;
};

// Haar-random unitary of order 1 or 2, the local gate distribution.
ComplexUnitary haar_unitary(int n, Rng& rng);
Gate2 haar_gate(Rng& rng);

// Haar-random unitary of any order (Ginibre matrix, QR, phase fix).
ComplexUnitary haar_unitary_global(int n, Rng& rng);
// First k columns of a Haar-random M x M unitary, without forming the rest.
Matrix haar_columns(int modes, int k, Rng& rng);

Eigen2 eig_unitary2(const Gate2& u);

ComplexUnitary compose(const ComplexUnitary& a, const ComplexUnitary& b);

}  // namespace bosonlab

#endif  // BOSONLAB_LIN_CORE_HPP_
