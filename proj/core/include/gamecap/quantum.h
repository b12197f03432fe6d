// Copyright 2026 The gamecap Authors.
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

// A small dense quantum kernel: density matrices, POVMs, and the Born rule
// for K local parties sharing one state. Dimensions stay at or below 2^10.

#ifndef GAMECAP_QUANTUM_H_
#define GAMECAP_QUANTUM_H_

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gamecap/common.h"
#include "gamecap/correlations.h"

namespace gamecap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kStateTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

class DensityMatrix {
 public:
  // Throws ValidationError unless Hermitian and unit-trace within 1e-10 and
  // the smallest eigenvalue is >= -1e-9.
  explicit DensityMatrix(Matrix rho);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(int dimension);

  int dimension() const { return static_cast<int>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }

 private:
  Matrix rho_;
};

Matrix kron(const Matrix& a, const Matrix& b);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

// POVM for one party and one question: one operator per answer.
using MeasurementSet = std::vector<Matrix>;

struct MeasurementReport {
  bool valid = true;
  double min_eigenvalue = 0.0;       // smallest over all operators
  double completeness_error = 0.0;   // max |sum_a Pi_a - I| entry
};

MeasurementReport validate_measurement(const MeasurementSet& povm,
                                       double tol = kPsdTol);

struct QuantumStrategy {
  Sizes local_dims;
  // Joint state on the tensor product of the local systems, party 1 the
  // most significant factor.
  DensityMatrix state;
  // measurements[i][q_i] is party i's POVM for question q_i.
  std::vector<std::vector<MeasurementSet>> measurements;

  Sizes question_sizes() const;
  Sizes answer_sizes() const;
  // Throws ValidationError on inconsistent dimensions or invalid POVMs.
  void validate() const;
};

// P(a|q) = Re Tr((Pi^1_{a_1|q_1} x ... x Pi^K_{a_K|q_K}) rho), evaluated by
// contracting one party at a time and sharing question prefixes.
CorrelationTable born_table(const QuantumStrategy& strategy);

// Maximally entangled two-qubit state with the standard optimal CHSH
// measurement angles (0, pi/4) and (pi/8, -pi/8).
QuantumStrategy make_tsirelson_chsh();

// Two EPR pairs and the Pauli magic square; wins the magic square game with
// certainty.
QuantumStrategy make_mermin_peres();

// GHZ state; parties measure X on question 0 and Y on question 1, realized as
// an S^dagger phase for q_i = 1 followed by a Hadamard. 3 <= K <= 10.
QuantumStrategy make_ghz_parity(int num_parties);

}  // namespace gamecap

#endif  // GAMECAP_QUANTUM_H_
