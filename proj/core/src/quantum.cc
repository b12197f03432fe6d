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

#include "gamecap/quantum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <Eigen/Eigenvalues>

namespace gamecap {

namespace {

double hermitian_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalue solve failed");
  }
  return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  const double herm = hermitian_error(rho_);
  if (herm > kStateTol) {
    throw ValidationError("density matrix not Hermitian (error " +
                          std::to_string(herm) + ")");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTol) {
    throw ValidationError("density matrix trace " + std::to_string(tr.real()) +
                          " != 1");
  }
  const double lo = min_eigenvalue(rho_);
  if (lo < -kPsdTol) {
    throw ValidationError("density matrix has eigenvalue " +
                          std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw ValidationError("zero state vector");
  const Vector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dimension) {
  if (dimension <= 0) throw InvalidArgument("dimension must be positive");
  return DensityMatrix(Matrix::Identity(dimension, dimension) /
                       static_cast<double>(dimension));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

MeasurementReport validate_measurement(const MeasurementSet& povm,
                                       double tol) {
  MeasurementReport report;
  if (povm.empty()) {
    report.valid = false;
    return report;
  }
  const Eigen::Index d = povm.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const Matrix& op : povm) {
    if (op.rows() != d || op.cols() != d) {
      throw InvalidArgument("measurement operators differ in dimension");
    }
    double lo = min_eigenvalue(op);
    // A non-Hermitian operator is not PSD.
    const double herm = hermitian_error(op);
    if (herm > tol) lo = std::min(lo, -herm);
    report.min_eigenvalue = std::min(report.min_eigenvalue, lo);
    sum += op;
  }
  report.completeness_error =
      (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  report.valid =
      report.min_eigenvalue >= -tol && report.completeness_error <= tol;
  return report;
}

Sizes QuantumStrategy::question_sizes() const {
  Sizes out;
  for (const auto& party : measurements) {
    out.push_back(static_cast<int>(party.size()));
  }
  return out;
}

Sizes QuantumStrategy::answer_sizes() const {
  Sizes out;
  for (const auto& party : measurements) {
    out.push_back(party.empty() ? 0 : static_cast<int>(party.front().size()));
  }
  return out;
}

void QuantumStrategy::validate() const {
  if (local_dims.size() < 2 || measurements.size() != local_dims.size()) {
    throw ValidationError("quantum strategy: party count mismatch");
  }
  Index total = 1;
  for (int d : local_dims) {
    if (d <= 0) throw ValidationError("quantum strategy: bad local dimension");
    total *= d;
  }
  if (total != state.dimension()) {
    throw ValidationError("quantum strategy: state dimension " +
                          std::to_string(state.dimension()) +
                          " != product of local dimensions " +
                          std::to_string(total));
  }
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    if (measurements[i].empty()) {
      throw ValidationError("quantum strategy: party " + std::to_string(i) +
                            " has no questions");
    }
    const std::size_t outcomes = measurements[i].front().size();
    for (std::size_t q = 0; q < measurements[i].size(); ++q) {
      const MeasurementSet& povm = measurements[i][q];
      if (povm.size() != outcomes) {
        throw ValidationError("quantum strategy: party " + std::to_string(i) +
                              " answer count varies with the question");
      }
      for (const Matrix& op : povm) {
        if (op.rows() != local_dims[i] || op.cols() != local_dims[i]) {
          throw ValidationError("quantum strategy: operator dimension does "
                                "not match party " + std::to_string(i));
        }
      }
      const MeasurementReport r = validate_measurement(povm);
      if (!r.valid) {
        throw ValidationError(
            "quantum strategy: invalid POVM for party " + std::to_string(i) +
            " question " + std::to_string(q) + " (min eigenvalue " +
            std::to_string(r.min_eigenvalue) + ", completeness error " +
            std::to_string(r.completeness_error) + ")");
      }
    }
  }
}

namespace {

// Tr_1((op x I) r) where the first factor has dimension op.rows().
Matrix contract_first(const Matrix& r, const Matrix& op) {
  const Eigen::Index d = op.rows();
  const Eigen::Index rest = r.rows() / d;
  Matrix out = Matrix::Zero(rest, rest);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const Complex w = op(a, c);
      if (w == Complex(0.0, 0.0)) continue;
      out.noalias() += w * r.block(c * rest, a * rest, rest, rest);
    }
  }
  return out;
}

struct BornContext {
  const QuantumStrategy& strategy;
  Sizes qs;
  Sizes as;
  Index na;
  std::vector<double>& out;
  double max_imag = 0.0;
};

void born_recurse(BornContext& ctx, int party, const Matrix& r, Index q_prefix,
                  Index a_prefix) {
  const int k = static_cast<int>(ctx.qs.size());
  if (party == k) {
    const Complex p = r(0, 0);
    ctx.max_imag = std::max(ctx.max_imag, std::abs(p.imag()));
    ctx.out[q_prefix * ctx.na + a_prefix] = p.real();
    return;
  }
  for (int q = 0; q < ctx.qs[party]; ++q) {
    for (int a = 0; a < ctx.as[party]; ++a) {
      const Matrix& op = ctx.strategy.measurements[party][q][a];
      const Matrix next = contract_first(r, op);
      born_recurse(ctx, party + 1, next, q_prefix * ctx.qs[party] + q,
                   a_prefix * ctx.as[party] + a);
    }
  }
}

}  // namespace

CorrelationTable born_table(const QuantumStrategy& strategy) {
  strategy.validate();
  const Sizes qs = strategy.question_sizes();
  const Sizes as = strategy.answer_sizes();
  const Index nq = product(qs);
  const Index na = product(as);
  std::vector<double> probs(nq * na, 0.0);
  BornContext ctx{strategy, qs, as, na, probs};
  born_recurse(ctx, 0, strategy.state.matrix(), 0, 0);
  if (ctx.max_imag >= 1e-10) {
    throw NumericError("Born rule produced imaginary residue " +
                       std::to_string(ctx.max_imag));
  }
  for (double& p : probs) {
    if (p < 0.0 && p > -1e-10) p = 0.0;
  }
  return CorrelationTable(qs, as, std::move(probs));
}

namespace {

Matrix projector(const Vector& v) { return v * v.adjoint(); }

Matrix pauli_i() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Maximally entangled state sum_k |k>|k> / sqrt(d).
DensityMatrix max_entangled(int d) {
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < d; ++k) psi(k * d + k) = 1.0;
  return DensityMatrix::pure(psi);
}

MeasurementSet real_basis(double theta) {
  Vector v(2);
  Vector w(2);
  v << std::cos(theta), std::sin(theta);
  w << -std::sin(theta), std::cos(theta);
  return {projector(v), projector(w)};
}

}  // namespace

QuantumStrategy make_tsirelson_chsh() {
  constexpr double kPi = std::numbers::pi;
  QuantumStrategy s{{2, 2}, max_entangled(2), {}};
  s.measurements = {
      {real_basis(0.0), real_basis(kPi / 4)},
      {real_basis(kPi / 8), real_basis(-kPi / 8)},
  };
  return s;
}

QuantumStrategy make_mermin_peres() {
  const Matrix i2 = pauli_i();
  const Matrix x = pauli_x();
  const Matrix y = pauli_y();
  const Matrix z = pauli_z();
  // Rows multiply to +I, columns to -I.
  const Matrix square[3][3] = {
      {kron(x, i2), kron(i2, x), kron(x, x)},
      {kron(i2, z), kron(z, i2), kron(z, z)},
      {-kron(x, z), -kron(z, x), kron(y, y)},
  };
  const Matrix id4 = Matrix::Identity(4, 4);

  // Joint eigenprojector of three commuting observables; bit j of the
  // answer selects eigenvalue (-1)^bit of observable j.
  auto joint = [&](const Matrix* obs[3]) {
    MeasurementSet povm;
    for (int answer = 0; answer < 8; ++answer) {
      Matrix p = id4;
      for (int j = 0; j < 3; ++j) {
        const double sign = ((answer >> j) & 1) ? -1.0 : 1.0;
        p = p * (0.5 * (id4 + sign * *obs[j]));
      }
      povm.push_back(p);
    }
    return povm;
  };

  // Party 2 measures transposed observables so that on the maximally
  // entangled state its outcomes match party 1's on the shared cell.
  Matrix transposed[3][3];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) transposed[r][c] = square[r][c].transpose();
  }

  QuantumStrategy s{{4, 4}, max_entangled(4), {}};
  s.measurements.resize(2);
  for (int row = 0; row < 3; ++row) {
    const Matrix* obs[3] = {&square[row][0], &square[row][1], &square[row][2]};
    s.measurements[0].push_back(joint(obs));
  }
  for (int col = 0; col < 3; ++col) {
    const Matrix* obs[3] = {&transposed[0][col], &transposed[1][col],
                            &transposed[2][col]};
    s.measurements[1].push_back(joint(obs));
  }
  return s;
}

QuantumStrategy make_ghz_parity(int num_parties) {
  if (num_parties < 3 || num_parties > 10) {
    throw InvalidArgument("GHZ parity strategy needs 3 <= K <= 10, got " +
                          std::to_string(num_parties));
  }
  const Index dim = Index{1} << num_parties;
  Vector psi = Vector::Zero(dim);
  psi(0) = 1.0;
  psi(dim - 1) = 1.0;

  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Matrix s_dag(2, 2);
  s_dag << 1, 0, 0, Complex(0, -1);

  std::vector<MeasurementSet> local(2);
  for (int q = 0; q < 2; ++q) {
    const Matrix u = q == 0 ? h : Matrix(h * s_dag);
    for (int a = 0; a < 2; ++a) {
      Vector e = Vector::Zero(2);
      e(a) = 1.0;
      // Pi_a = U^dagger |a><a| U.
      local[q].push_back(u.adjoint() * projector(e) * u);
    }
  }

  QuantumStrategy s{Sizes(num_parties, 2), DensityMatrix::pure(psi), {}};
  s.measurements.assign(num_parties, local);
  return s;
}

}  // namespace gamecap
