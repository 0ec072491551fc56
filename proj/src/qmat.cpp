// Copyright 2026 The ctcsim Authors
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

#include "ctcsim/qmat.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace ctcsim {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_dim(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

ComplexMatrix matrix_unit(int i, int j, int dim) {
  if (dim <= 0 || i < 0 || j < 0 || i >= dim || j >= dim) {
    throw std::invalid_argument("matrix_unit: index out of range");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c) {
  return tensor(tensor(a, b), c);
}

ComplexMatrix partial_trace(const ComplexMatrix& x, Keep keep) {
  if (x.rows() != 4 || x.cols() != 4) {
    throw std::invalid_argument("partial_trace: expected a 4x4 matrix");
  }
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        if (keep == Keep::CV) {
          // Tr_CR: sum over the first factor's diagonal.
          out(i, j) += x(2 * k + i, 2 * k + j);
        } else {
          // Tr_CV: sum over the second factor's diagonal.
          out(i, j) += x(2 * i + k, 2 * j + k);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace_3q_keep_last(const ComplexMatrix& x) {
  if (x.rows() != 8 || x.cols() != 8) {
    throw std::invalid_argument(
        "partial_trace_3q_keep_last: expected an 8x8 matrix");
  }
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 4; ++k) {
        out(i, j) += x(2 * k + i, 2 * k + j);
      }
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  if (hermiticity_deviation(m) > 1e-10) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

PureState::PureState(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
  if (!is_power_of_two(amps_.size())) {
    throw std::invalid_argument("PureState: length must be a power of two");
  }
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: amplitudes not normalized");
  }
  nqubits_ = log2_dim(amps_.size());
}

PureState PureState::zero() {
  Eigen::VectorXcd v(2);
  v << 1.0, 0.0;
  return PureState(v);
}

PureState PureState::one() {
  Eigen::VectorXcd v(2);
  v << 0.0, 1.0;
  return PureState(v);
}

PureState PureState::plus() {
  Eigen::VectorXcd v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return PureState(v);
}

PureState PureState::minus() {
  Eigen::VectorXcd v(2);
  v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return PureState(v);
}

PureState PureState::bell_phi() {
  Eigen::VectorXcd v(4);
  v << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return PureState(v);
}

DensityOperator::DensityOperator(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || !is_power_of_two(mat_.rows())) {
    throw std::invalid_argument(
        "DensityOperator: matrix must be square with power-of-two dimension");
  }
  if (hermiticity_deviation(mat_) > kTolHerm) {
    throw std::invalid_argument("DensityOperator: matrix not Hermitian");
  }
  if (std::abs(mat_.trace().real() - 1.0) > kTolTrace ||
      std::abs(mat_.trace().imag()) > kTolTrace) {
    throw std::invalid_argument("DensityOperator: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_,
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kTolPositivity) {
    throw std::invalid_argument("DensityOperator: matrix not positive");
  }
  nqubits_ = log2_dim(mat_.rows());
}

Complex DensityOperator::operator()(int r, int c) const {
  if (r < 0 || c < 0 || r >= dim() || c >= dim()) {
    throw std::out_of_range("DensityOperator: index out of range");
  }
  return mat_(r, c);
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  const auto& v = psi.amplitudes();
  return DensityOperator(v * v.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(int nqubits) {
  const int d = 1 << nqubits;
  return DensityOperator(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& xi) {
  if (rho.rows() != xi.rows() || rho.cols() != xi.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho - xi,
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityOperator& rho, const DensityOperator& xi) {
  return trace_distance(rho.matrix(), xi.matrix());
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (double lam : hermitian_eigenvalues(rho.matrix())) {
    lam = std::max(lam, 0.0);
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector bloch_from_state(const DensityOperator& rho) {
  if (rho.nqubits() != 1) {
    throw std::invalid_argument("bloch_from_state: expected a single qubit");
  }
  const ComplexMatrix& m = rho.matrix();
  return BlochVector{2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
                     (m(0, 0) - m(1, 1)).real()};
}

DensityOperator state_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + kTolPositivity) {
    throw std::invalid_argument("state_from_bloch: |r| > 1");
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + r.z);
  m(1, 1) = 0.5 * (1.0 - r.z);
  m(1, 0) = 0.5 * Complex(r.x, r.y);
  m(0, 1) = std::conj(m(1, 0));
  return DensityOperator(std::move(m));
}

}  // namespace ctcsim
