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

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ctcsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kTolHerm = 1e-12;
inline constexpr double kTolTrace = 1e-12;
inline constexpr double kTolPositivity = 1e-10;

/// Which qubit of a two-qubit operator survives a partial trace.
/// Ordering convention: first tensor factor is CR, second is CV.
enum class Keep { CR, CV };

/// |i><j| on a dim-dimensional space.
ComplexMatrix matrix_unit(int i, int j, int dim);

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c);

/// Partial trace of a 4x4 two-qubit operator, keeping the requested qubit.
ComplexMatrix partial_trace(const ComplexMatrix& x, Keep keep);

/// Partial trace of an 8x8 three-qubit operator (order B, M, T) over the
/// first two qubits, keeping the last.
ComplexMatrix partial_trace_3q_keep_last(const ComplexMatrix& x);

/// Ascending eigenvalues of a Hermitian matrix. Throws on non-Hermitian
/// input (deviation above 1e-10).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Unit-norm pure state on 2^n amplitudes.
class PureState {
 public:
  explicit PureState(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  int nqubits() const { return nqubits_; }

  static PureState zero();
  static PureState one();
  static PureState plus();
  static PureState minus();
  static PureState bell_phi();  // [|00> + |11>]/sqrt(2)

 private:
  Eigen::VectorXcd amps_;
  int nqubits_;
};

/// Hermitian, unit-trace, positive matrix on a 2^n-dimensional space.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  int nqubits() const { return nqubits_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  Complex operator()(int r, int c) const;

  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(int nqubits = 1);

 private:
  ComplexMatrix mat_;
  int nqubits_;
};

/// (1/2) Tr |rho - xi|.
double trace_distance(const DensityOperator& rho, const DensityOperator& xi);
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& xi);

/// -sum lambda log2 lambda, eigenvalues clipped at zero.
double von_neumann_entropy(const DensityOperator& rho);

/// Real parameterization rho = (I + r.sigma)/2 of a single-qubit state.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

BlochVector bloch_from_state(const DensityOperator& rho);
DensityOperator state_from_bloch(const BlochVector& r);

}  // namespace ctcsim
