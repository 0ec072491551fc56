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

#include "ctcsim/gates.hpp"

#include <cmath>

namespace ctcsim {

Unitary::Unitary(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0 ||
      (mat_.rows() & (mat_.rows() - 1)) != 0) {
    throw std::invalid_argument(
        "Unitary: matrix must be square with power-of-two dimension");
  }
  const ComplexMatrix gram = mat_.adjoint() * mat_;
  if ((gram - ComplexMatrix::Identity(mat_.rows(), mat_.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-12) {
    throw std::invalid_argument("Unitary: U'U != I");
  }
  int k = 0;
  while ((Eigen::Index{1} << k) < mat_.rows()) ++k;
  nqubits_ = k;
}

Unitary hadamard() {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return Unitary(h);
}

Unitary swap_gate() {
  return Unitary(matrix_unit(0, 0, 4) + matrix_unit(3, 3, 4) +
                 matrix_unit(2, 1, 4) + matrix_unit(1, 2, 4));
}

Unitary cnot(int control, int target, int nqubits) {
  if (nqubits < 2 || control == target || control < 0 || target < 0 ||
      control >= nqubits || target >= nqubits) {
    throw std::invalid_argument("cnot: bad qubit indices");
  }
  const int dim = 1 << nqubits;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  // Qubit 0 is the leftmost factor, i.e. the highest bit of the index.
  const int cbit = nqubits - 1 - control;
  const int tbit = nqubits - 1 - target;
  for (int col = 0; col < dim; ++col) {
    const int row = (col >> cbit) & 1 ? col ^ (1 << tbit) : col;
    u(row, col) = 1.0;
  }
  return Unitary(u);
}

Unitary controlled_hadamard() {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  return Unitary(tensor(matrix_unit(0, 0, 2), i2) +
                 tensor(matrix_unit(1, 1, 2), hadamard().matrix()));
}

Unitary fig1_unitary() {
  return Unitary(controlled_hadamard().matrix() * swap_gate().matrix());
}

Unitary fig5_unitary() {
  const ComplexMatrix cnot_tb = cnot(2, 0, 3).matrix();
  const ComplexMatrix cnot_bm = cnot(0, 1, 3).matrix();
  const ComplexMatrix swap_mt =
      tensor(ComplexMatrix::Identity(2, 2), swap_gate().matrix());
  return Unitary(swap_mt * cnot_bm * cnot_tb);
}

Unitary pctc_system_unitary() {
  return Unitary(tensor(fig1_unitary().matrix(), ComplexMatrix::Identity(2, 2)));
}

}  // namespace ctcsim
