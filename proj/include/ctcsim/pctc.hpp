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

#include <array>

#include "ctcsim/channels.hpp"
#include "ctcsim/gates.hpp"
#include "ctcsim/qmat.hpp"

namespace ctcsim {

/// Entries of the noisy Bell resource chi_CB in the computational basis,
/// normalized so that a0 + a1 + b0 + b1 = 1:
///   chi = a0|00><00| + b0|10><10| + a1|01><01| + b1|11><11|
///       + c|11><00| + c*|00><11|.
struct BellCoefficients {
  double a0;
  double a1;
  double b0;
  double b1;
  Complex c;
};

BellCoefficients bell_coefficients(const DaviesParams& d);

/// The thermal channel applied to the C side of the Bell projector,
/// order (C, B).
DensityOperator noisy_bell(const DaviesParams& d);

struct PctcResult {
  DensityOperator rho_f;          // normalized output
  double postselection_weight;    // trace before normalization
};

/// Post-selected output: project the (C, B) pair of
/// U[rho_i (x) chi_CB]U' onto the Bell state, trace out (C, B),
/// renormalize. Throws when the post-selection weight vanishes.
PctcResult pctc_output(const DensityOperator& rho_i, const DaviesParams& d);

/// Same transform with an arbitrary two-qubit resource in place of the
/// noisy Bell state.
PctcResult pctc_output_with_resource(const DensityOperator& rho_i,
                                     const DensityOperator& chi_cb);

/// The six Bell-sandwich operators <Phi|_CB U |xy>_CB for
/// xy = 00, 10, 00, 11, 01, 11 (indices I..VI).
std::array<ComplexMatrix, 6> l_operators();

/// Same output assembled from the sandwich decomposition; requires a pure
/// input.
PctcResult pctc_output_via_l(const DensityOperator& rho_i,
                             const DaviesParams& d);

/// Raised when the post-selected outcome has probability zero.
class ZeroPostselectionError : public std::runtime_error {
 public:
  ZeroPostselectionError()
      : std::runtime_error("postselection probability zero") {}
};

}  // namespace ctcsim
