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

// Precision-generic evaluation of the Cayley path. Instantiated with
// std::complex<double> and with a Boost.Multiprecision complex type.

#ifndef BOSONLAB_SRC_DETAIL_CAYLEY_PATH_HPP_
#define BOSONLAB_SRC_DETAIL_CAYLEY_PATH_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_complex.hpp>

#include "bosonlab/cayley.hpp"

namespace bosonlab::detail {

using ExtendedComplex = boost::multiprecision::cpp_complex<250>;

template <class Cx>
struct RealOf {
  using type = typename boost::multiprecision::component_type<Cx>::type;
};
template <>
struct RealOf<std::complex<double>> {
  using type = double;
};

template <class Cx>
using RealT = typename RealOf<Cx>::type;

template <class Cx>
RealT<Cx> abs2(const Cx& z) {
  using std::imag;
  using std::real;
  const RealT<Cx> re = real(z), im = imag(z);
  return re * re + im * im;
}

template <class Cx>
Cx lift(const Complex& z) {
  return Cx(RealT<Cx>(z.real()), RealT<Cx>(z.imag()));
}

// Dense column-major M x k block.
template <class Cx>
struct Block {
  int rows = 0;
  int cols = 0;
  std::vector<Cx> data;

  Block(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Cx(0)) {}
  Cx& operator()(int r, int c) { return data[static_cast<std::size_t>(c) * rows + r]; }
  const Cx& operator()(int r, int c) const {
    return data[static_cast<std::size_t>(c) * rows + r];
  }
};

template <class Cx>
Cx ryser(const Block<Cx>& a) {
  const int n = a.rows;
  if (n == 0) return Cx(1);
  std::vector<Cx> rowsum(n, Cx(0));
  Cx total(0);
  std::uint64_t subset = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    int j = 0;
    while (((k >> j) & 1) == 0) ++j;
    const bool adding = ((subset >> j) & 1) == 0;
    subset ^= std::uint64_t{1} << j;
    for (int i = 0; i < n; ++i) {
      if (adding) {
        rowsum[i] += a(i, j);
      } else {
        rowsum[i] -= a(i, j);
      }
    }
    Cx prod = rowsum[0];
    for (int i = 1; i < n; ++i) prod *= rowsum[i];
    int bits = 0;
    for (std::uint64_t s = subset; s; s &= s - 1) ++bits;
    if (bits & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n & 1) ? Cx(-total) : total;
}

// Rows of x picked out (with repetition) by the occupied modes of s.
template <class Cx>
Block<Cx> select_rows(const Block<Cx>& x, const OutcomeConfig& s) {
  const std::vector<int> rows = s.mode_list();
  Block<Cx> out(static_cast<int>(rows.size()), x.cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int c = 0; c < x.cols; ++c) out(static_cast<int>(i), c) = x(rows[i], c);
  }
  return out;
}

template <class Cx>
void apply_pair(Block<Cx>& x, int a, int b, const Cx w[2][2]) {
  for (int c = 0; c < x.cols; ++c) {
    const Cx xa = x(a, c), xb = x(b, c);
    x(a, c) = w[0][0] * xa + w[0][1] * xb;
    x(b, c) = w[1][0] * xa + w[1][1] * xb;
  }
}

template <class Cx>
Block<Cx> apply_gates(const Circuit& circuit, Block<Cx> x) {
  const std::vector<GatePlacement> placements = circuit.architecture().placements();
  for (std::size_t k = 0; k < placements.size(); ++k) {
    Cx w[2][2];
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) w[r][c] = lift<Cx>(circuit.gates()[k](r, c));
    }
    apply_pair(x, placements[k].mode_a - 1, placements[k].mode_b - 1, w);
  }
  return x;
}

// One-photon-per-listed-mode input columns, optionally routed through p.
template <class Cx>
Block<Cx> input_columns(int modes, const OutcomeConfig& t, const Permutation* p) {
  const std::vector<int> cols = t.mode_list();
  Block<Cx> x(modes, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const int row = p ? (*p)[cols[j]] : cols[j];
    x(row, static_cast<int>(j)) = Cx(1);
  }
  return x;
}

// A(theta) = Per((V(theta) P1)_{s,t}) (prod_i q_i(theta))^N, evaluated
// without division: each gate contributes its numerator L diag(p_j) L^dagger
// G_i on its pair and q_i on every other mode. With conjugate = true the
// model evaluates conj(A(conj(theta))).
template <class Cx>
class PathModel {
 public:
  using Real = RealT<Cx>;

  PathModel(const PathInstance& inst, bool conjugate) : inst_(inst) {
    using std::conj;
    using std::cos;
    using std::sin;
    const std::vector<GatePlacement> placements = inst.worst.architecture().placements();
    gates_.reserve(placements.size());
    for (std::size_t k = 0; k < placements.size(); ++k) {
      GateData g;
      g.a = placements[k].mode_a - 1;
      g.b = placements[k].mode_b - 1;
      const Eigen2& eig = inst.haar[k];
      Cx l[2][2];
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          l[r][c] = lift<Cx>(conjugate ? std::conj(eig.basis(r, c)) : eig.basis(r, c));
          g.w[r][c] = lift<Cx>(conjugate ? std::conj(inst.worst.gates()[k](r, c))
                                         : inst.worst.gates()[k](r, c));
        }
      }
      orthonormalize(l);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) g.l[r][c] = l[r][c];
      }
      for (int j = 0; j < 2; ++j) {
        const Real phi = Real(conjugate ? -eig.phases[j] : eig.phases[j]);
        const Real half = phi / 2;
        g.unit[j] = Cx(cos(phi), sin(phi));
        g.half[j] = Cx(cos(half), sin(half));
        g.half_conj[j] = Cx(cos(half), -sin(half));
        g.sin_half[j] = sin(half);
      }
      gates_.push_back(g);
    }
  }

  Cx amplitude(const Cx& theta) const {
    using std::conj;
    const Cx i_unit(Real(0), Real(1));
    Block<Cx> x = input_columns<Cx>(inst_.worst.modes(), inst_.t, &inst_.p1);
    for (const GateData& g : gates_) {
      Cx e[2], p[2];
      for (int j = 0; j < 2; ++j) e[j] = i_unit * theta * g.half[j] * Cx(g.sin_half[j]);
      const Cx q = (Cx(1) + e[0]) * (Cx(1) + e[1]);
      for (int j = 0; j < 2; ++j) {
        p[j] = g.unit[j] * (Cx(1) - i_unit * theta * g.half_conj[j] * Cx(g.sin_half[j])) *
               (Cx(1) + e[1 - j]);
      }
      Cx num[2][2];
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          num[r][c] = g.l[r][0] * p[0] * conj(g.l[c][0]) + g.l[r][1] * p[1] * conj(g.l[c][1]);
        }
      }
      Cx w[2][2];
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) w[r][c] = num[r][0] * g.w[0][c] + num[r][1] * g.w[1][c];
      }
      for (int row = 0; row < x.rows; ++row) {
        if (row == g.a || row == g.b) continue;
        for (int c = 0; c < x.cols; ++c) x(row, c) *= q;
      }
      apply_pair(x, g.a, g.b, w);
    }
    return ryser(select_rows(x, inst_.s));
  }

  // prod_s s! prod_t t!
  Real factorials() const {
    Real out(1);
    for (const OutcomeConfig* cfg : {&inst_.s, &inst_.t}) {
      for (int v : cfg->occupation()) {
        for (int k = 2; k <= v; ++k) out *= k;
      }
    }
    return out;
  }

  // p_s(V(theta) P1) Q(theta) for real theta.
  Real value(const Real& theta) const {
    return abs2(amplitude(Cx(theta, Real(0)))) / factorials();
  }

  Real big_q(const Real& theta) const {
    Real prod(1);
    for (const GateData& g : gates_) {
      for (int j = 0; j < 2; ++j) {
        const Real s = g.sin_half[j];
        prod *= Real(1) - theta * (Real(2) - theta) * s * s;
      }
    }
    Real out(1);
    for (int n = 0; n < inst_.t.total(); ++n) out *= prod;
    return out;
  }

 private:
  struct GateData {
    int a = 0;
    int b = 0;
    Cx l[2][2];
    Cx w[2][2];
    Cx unit[2];
    Cx half[2];
    Cx half_conj[2];
    Real sin_half[2];
  };

  // Gram-Schmidt on the columns, so L is unitary to the working precision.
  static void orthonormalize(Cx l[2][2]) {
    using std::conj;
    using std::sqrt;
    const Real n0 = sqrt(abs2(l[0][0]) + abs2(l[1][0]));
    l[0][0] /= Cx(n0);
    l[1][0] /= Cx(n0);
    const Cx overlap = conj(l[0][0]) * l[0][1] + conj(l[1][0]) * l[1][1];
    l[0][1] -= overlap * l[0][0];
    l[1][1] -= overlap * l[1][0];
    const Real n1 = sqrt(abs2(l[0][1]) + abs2(l[1][1]));
    l[0][1] /= Cx(n1);
    l[1][1] /= Cx(n1);
  }

  const PathInstance& inst_;
  std::vector<GateData> gates_;
};

}  // namespace bosonlab::detail

#endif  // BOSONLAB_SRC_DETAIL_CAYLEY_PATH_HPP_
