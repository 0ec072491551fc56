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

#include "ctcsim/qmat.hpp"

namespace ctcsim {

/// Square matrix with U. U = I within 1e-12, dimension 2^n.
class Unitary {
 public:
  explicit Unitary(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  int nqubits() const { return nqubits_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  ComplexMatrix mat_;
  int nqubits_;
};

Unitary hadamard();
Unitary swap_gate();
/// CNOT on an n-qubit register; qubit 0 is the leftmost tensor factor.
Unitary cnot(int control, int target, int nqubits);
/// Control on the first qubit, Hadamard on the second.
Unitary controlled_hadamard();

/// Two-qubit coupling of the distinguishing circuit, order (CR, CV):
/// |00><00| + |01><10| + |1+><01| + |1-><11|, equal to H_C * SWAP.
Unitary fig1_unitary();

/// Three-qubit coupling of the unproven-theorem circuit, order (B, M, T):
/// SWAP_MT * CNOT_BM * CNOT_TB (CNOT_TB acts first).
Unitary fig5_unitary();

/// fig1_unitary on (SYS, C) tensored with identity on B.
Unitary pctc_system_unitary();

}  // namespace ctcsim
