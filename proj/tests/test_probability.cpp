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

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "bosonlab/architecture.hpp"
#include "bosonlab/probability.hpp"

namespace bosonlab {
namespace {

using Poly = std::map<std::vector<int>, Complex>;

double factorial(int n) { return std::tgamma(n + 1.0); }

// Expands prod_i (sum_j U_{j i} a_j^dag)^{t_i} |0> as a polynomial in the
// creation operators and reads off the amplitude of |s>.
double creation_operator_probability(const Matrix& u, const OutcomeConfig& s,
                                     const OutcomeConfig& t) {
  const int m = static_cast<int>(u.rows());
  Poly poly{{std::vector<int>(m, 0), Complex(1.0)}};
  for (int i = 0; i < m; ++i) {
    for (int rep = 0; rep < t[i]; ++rep) {
      Poly next;
      for (const auto& [mono, coef] : poly) {
        for (int j = 0; j < m; ++j) {
          std::vector<int> k = mono;
          ++k[j];
          next[k] += coef * u(j, i);
        }
      }
      poly = std::move(next);
    }
  }
  auto it = poly.find(s.occupation());
  if (it == poly.end()) return 0.0;
  double norm = 1.0;
  for (int j = 0; j < m; ++j) norm *= factorial(s[j]) / factorial(t[j]);
  return std::norm(it->second) * norm;
}

Matrix random_complex(int rows, int cols, Rng& rng) {
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = Complex(rng.normal(), rng.normal());
  }
  return a;
}

Matrix random_symmetric(int n, Rng& rng) {
  Matrix a = random_complex(n, n, rng);
  return (a + a.transpose()) / 2.0;
}

TEST(Outcome, ParseAndFormat) {
  OutcomeConfig s = OutcomeConfig::parse("1|0|2");
  EXPECT_EQ(s.total(), 3);
  EXPECT_FALSE(s.collision_free());
  EXPECT_EQ(s.str(), "1|0|2");
  EXPECT_EQ(s.mode_list(), (std::vector<int>{0, 2, 2}));
  EXPECT_EQ(OutcomeConfig::first_modes(4, 2).str(), "1|1|0|0");
  EXPECT_EQ(OutcomeConfig::from_modes(4, {1, 3}).str(), "0|1|0|1");
  EXPECT_EQ(s.concat(OutcomeConfig::parse("0|1")).str(), "1|0|2|0|1");
  EXPECT_EQ(s.permuted(Permutation({2, 0, 1})).str(), "0|2|1");
  EXPECT_THROW(OutcomeConfig::parse("1|-1"), ValidationError);
  EXPECT_THROW(OutcomeConfig::first_modes(2, 3), ValidationError);
}

TEST(Outcome, EnumerationIsLexicographicAndComplete) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 4; ++n) {
      std::vector<OutcomeConfig> all = enumerate_outcomes(m, n);
      EXPECT_EQ(static_cast<double>(all.size()), binomial(m + n - 1, n));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
      for (const auto& s : all) EXPECT_EQ(s.total(), n);
    }
  }
  EXPECT_THROW(enumerate_outcomes(64, 8), CapacityError);
}

TEST(Permanent, RyserMatchesNaive) {
  Rng rng(1);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix a = random_complex(n, n, rng);
      Complex naive = permanent_naive(a);
      EXPECT_LE(std::abs(permanent(a) - naive), 1e-10 * std::max(1.0, std::abs(naive)));
      EXPECT_LE(std::abs(permanent_serial(a) - naive),
                1e-10 * std::max(1.0, std::abs(naive)));
    }
  }
}

TEST(Permanent, OnesGiveFactorial) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_NEAR(permanent(Matrix::Ones(n, n)).real(), factorial(n), 1e-9 * factorial(n));
  }
}

TEST(Permanent, SerialAndParallelAgreeOnLargeOrders) {
  Rng rng(2);
  for (int n : {14, 16}) {
    Matrix a = random_complex(n, n, rng) / std::sqrt(static_cast<double>(n));
    Complex p = permanent(a), s = permanent_serial(a);
    EXPECT_LE(std::abs(p - s), 1e-9 * std::max(1.0, std::abs(s)));
  }
}

TEST(Permanent, Errors) {
  EXPECT_THROW(permanent(Matrix::Ones(2, 3)), DimensionError);
  EXPECT_THROW(permanent(Matrix::Ones(21, 21)), CapacityError);
  EXPECT_THROW(permanent_naive(Matrix::Ones(11, 11)), CapacityError);
}

TEST(Probability, HongOuMandelDip) {
  Matrix bs(2, 2);
  bs << 1, 1, 1, -1;
  bs /= std::sqrt(2.0);
  ComplexUnitary u(bs);
  OutcomeConfig t = OutcomeConfig::parse("1|1");
  EXPECT_LE(output_probability(u, t, t), 1e-14);
  EXPECT_NEAR(output_probability(u, OutcomeConfig::parse("2|0"), t), 0.5, 1e-14);
  EXPECT_NEAR(output_probability(u, OutcomeConfig::parse("0|2"), t), 0.5, 1e-14);
}

TEST(Probability, MatchesCreationOperatorExpansion) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexUnitary u = haar_unitary_global(4, rng);
    for (const auto& t : {OutcomeConfig::parse("1|1|1|0"), OutcomeConfig::parse("2|0|1|0")}) {
      for (const auto& s : enumerate_outcomes(4, 3)) {
        EXPECT_NEAR(output_probability(u, s, t),
                    creation_operator_probability(u.matrix(), s, t), 1e-12);
      }
    }
  }
}

TEST(Probability, DistributionsNormalize) {
  Rng rng(4);
  for (int m = 2; m <= 6; ++m) {
    for (int n = 1; n <= 3; ++n) {
      ComplexUnitary u = haar_unitary_global(m, rng);
      double total = 0.0;
      for (const auto& [s, p] : full_distribution(u, OutcomeConfig::first_modes(m, std::min(n, m)))) {
        EXPECT_GE(p, 0.0);
        total += p;
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(Probability, SerialAndParallelDistributionsAgree) {
  Rng rng(5);
  ComplexUnitary u = circuit_unitary(random_local_circuit(build_kaleidoscope(8, 1), rng));
  OutcomeConfig t = OutcomeConfig::first_modes(8, 4);
  Distribution a = full_distribution(u, t), b = full_distribution_serial(u, t);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_NEAR(a[i].second, b[i].second, 1e-15);
  }
}

TEST(Probability, CsvLayout) {
  Distribution d{{OutcomeConfig::parse("1|0"), 0.25}, {OutcomeConfig::parse("0|1"), 0.75}};
  std::ostringstream out;
  write_distribution_csv(out, d);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "outcome,probability");
  EXPECT_NE(out.str().find("1|0,0.25"), std::string::npos);
}

TEST(Probability, IdentityCircuitIsDeterministic) {
  ComplexUnitary id = ComplexUnitary::identity(4);
  OutcomeConfig t = OutcomeConfig::parse("0|2|1|0");
  EXPECT_NEAR(output_probability(id, t, t), 1.0, 1e-15);
  EXPECT_EQ(output_probability(id, OutcomeConfig::parse("1|1|1|0"), t), 0.0);
  EXPECT_THROW(output_probability(id, OutcomeConfig::parse("1|1|0|0"), t), ValidationError);
}

TEST(Hafnian, MatchesEnumeration) {
  Rng rng(6);
  for (int n = 2; n <= 10; n += 2) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix a = random_symmetric(n, rng);
      Complex e = hafnian_by_enumeration(a);
      EXPECT_LE(std::abs(hafnian(a) - e), 1e-10 * std::max(1.0, std::abs(e)));
    }
  }
}

TEST(Hafnian, OnesGiveDoubleFactorial) {
  double df = 1.0;
  for (int n = 2; n <= 16; n += 2) {
    df *= n - 1;
    EXPECT_NEAR(hafnian(Matrix::Ones(n, n)).real(), df, 1e-9 * df);
  }
  EXPECT_EQ(hafnian(Matrix::Zero(0, 0)), Complex(1.0));
  EXPECT_THROW(hafnian(Matrix::Ones(3, 3)), DimensionError);
  Matrix asym = Matrix::Zero(2, 2);
  asym(0, 1) = 1.0;
  EXPECT_THROW(hafnian(asym), ValidationError);
}

TEST(Gbs, IdentityCircuitGivesNoCoincidences) {
  ComplexUnitary id = ComplexUnitary::identity(4);
  EXPECT_NEAR(gbs_probability(id, OutcomeConfig::parse("1|1|0|0"), {0.7}), 0.0, 1e-15);
}

TEST(Gbs, VacuumProbability) {
  Rng rng(7);
  ComplexUnitary u = haar_unitary_global(6, rng);
  const double r = 0.4;
  EXPECT_NEAR(gbs_probability(u, OutcomeConfig::first_modes(6, 0), {r}),
              std::pow(std::cosh(r), -6), 1e-14);
}

TEST(Gbs, InvariantUnderInputPermutation) {
  Rng rng(8);
  ComplexUnitary u = haar_unitary_global(6, rng);
  Permutation p = sample_permutation(6, rng);
  ComplexUnitary up(u.matrix() * p.matrix());
  for (const auto& s : {OutcomeConfig::parse("1|1|0|0|0|0"), OutcomeConfig::parse("0|1|1|0|1|1")}) {
    EXPECT_NEAR(gbs_probability(u, s, {0.5}), gbs_probability(up, s, {0.5}), 1e-14);
  }
}

TEST(Gbs, MeanPhotonsAndErrors) {
  GbsParams g{0.5};
  EXPECT_NEAR(g.mean_photons(4), 4 * std::pow(std::sinh(0.5), 2), 1e-14);
  ComplexUnitary id = ComplexUnitary::identity(4);
  EXPECT_THROW(gbs_probability(id, OutcomeConfig::parse("1|0|0|0"), g), ValidationError);
  EXPECT_THROW(gbs_probability(id, OutcomeConfig::parse("2|0|0|0"), g), ValidationError);
  EXPECT_THROW(gbs_probability(id, OutcomeConfig::parse("1|1|0"), g), DimensionError);
}

}  // namespace
}  // namespace bosonlab
