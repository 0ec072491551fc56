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

#include <optional>
#include <vector>

#include "ctcsim/channels.hpp"
#include "ctcsim/gates.hpp"
#include "ctcsim/qmat.hpp"

namespace ctcsim {

/// Affine set of CV fixed points intersected with the Bloch ball.
///
/// The consistency map acts on Bloch vectors as r -> Mr + c; the set is
/// `particular` plus the span of `null_directions` (orthonormal basis of
/// ker(I - M)). For a one-dimensional family, `feasible_interval` is the
/// closed parameter range along the null direction keeping |r| <= 1.
struct CtcSolutionSet {
  BlochVector particular;
  std::vector<Eigen::Vector3d> null_directions;
  int dimension = 0;
  std::optional<std::pair<double, double>> feasible_interval;

  /// The state particular + s * null_directions[0]; s must lie in the
  /// feasible interval. For dimension 0 use s = 0.
  DensityOperator member(double s = 0.0) const;
};

enum class Selection { unique, max_entropy_selected, ambiguous };

struct DeutschResult {
  DensityOperator tau;
  DensityOperator rho_f;
  CtcSolutionSet solution_set;
  Selection selection = Selection::unique;
};

/// The CV marginal Tr_CR{U(rho_i (x) tau)U'}. For a two-qubit unitary
/// rho_i is one qubit; for a three-qubit unitary rho_i is the two CR
/// qubits and the trace keeps the last qubit.
DensityOperator lambda_map(const Unitary& u, const DensityOperator& rho_i,
                           const DensityOperator& tau);

/// Superoperator of tau -> D(Lambda(tau)) for fixed rho_i; linear in tau.
QuantumChannel noisy_consistency_map(const Unitary& u,
                                     const DensityOperator& rho_i,
                                     const DaviesParams& d);

/// Superoperator of Lambda alone (noiseless consistency map).
QuantumChannel consistency_map(const Unitary& u, const DensityOperator& rho_i);

/// Exact affine fixed-point solve in Bloch coordinates. Singular values of
/// (I - M) below 1e-9 are treated as null directions.
CtcSolutionSet solve_fixed_point(const QuantumChannel& map);

/// Iterates tau <- map(tau) until successive iterates are closer than tol
/// in trace distance. Independent oracle for solve_fixed_point.
DensityOperator fixed_point_iterate(const QuantumChannel& map,
                                    const DensityOperator& start,
                                    double tol = 1e-12,
                                    long max_iter = 1000000);

/// Unique solution for dimension 0; the entropy maximizer over the feasible
/// segment for dimension 1 (golden-section search, parameter tolerance
/// 1e-10). Dimension >= 2 is rejected.
DensityOperator select_max_entropy(const CtcSolutionSet& s);

/// The CR marginal Tr_CV{U(rho_i (x) tau)U'}.
DensityOperator deutsch_output(const Unitary& u, const DensityOperator& rho_i,
                               const DensityOperator& tau);

/// Full solve for the given circuit and input: fixed-point set, entropy
/// selection when ambiguous, and the CR output.
DeutschResult deutsch_solve(const Unitary& u, const DensityOperator& rho_i,
                            const std::optional<DaviesParams>& d);

enum class Fig1Input { minus, zero };

/// Closed-form CV fixed point of the noisy two-qubit circuit.
DensityOperator closed_form_tau(Fig1Input input, const DaviesParams& d);
/// Closed-form CR output of the noisy two-qubit circuit.
DensityOperator closed_form_rho_f(Fig1Input input, const DaviesParams& d);

}  // namespace ctcsim
