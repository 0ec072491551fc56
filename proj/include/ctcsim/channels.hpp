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

#include <functional>

#include "ctcsim/qmat.hpp"

namespace ctcsim {

/// Thermal weak-coupling channel parameters (p, A, G, omega, t).
/// Validity: p in [0, 1/2], A >= 0, t >= 0 and G >= A/2.
struct DaviesParams {
  double p;
  double A;
  double G;
  double omega;
  double t;

  DaviesParams(double p, double A, double G, double omega, double t);

  /// Skips the G >= A/2 gate. Exists only so the CP-violation diagnostics
  /// can be exercised; regular code must use the checked constructor.
  static DaviesParams unchecked(double p, double A, double G, double omega,
                                double t);

  DaviesParams with_time(double new_t) const;

 private:
  DaviesParams() = default;
};

/// Linear superoperator on single-qubit operators, stored as a 4x4 matrix
/// acting on column-stacked 2x2 operators: vec(rho) = (rho00, rho10, rho01,
/// rho11).
class QuantumChannel {
 public:
  explicit QuantumChannel(Eigen::Matrix4cd superoperator);

  const Eigen::Matrix4cd& superoperator() const { return s_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  DensityOperator apply(const DensityOperator& rho) const;

  static QuantumChannel identity();
  /// Builds the superoperator by feeding the four matrix units through fn.
  static QuantumChannel from_action(
      const std::function<ComplexMatrix(const ComplexMatrix&)>& fn);

 private:
  Eigen::Matrix4cd s_;
};

/// Linear extension of the thermal channel's four basis-action rules to an
/// arbitrary 2x2 operator.
ComplexMatrix davies_action(const DaviesParams& d, const ComplexMatrix& rho);

DensityOperator davies_apply(const DaviesParams& d, const DensityOperator& rho);

QuantumChannel davies_superoperator(const DaviesParams& d);

/// p = 1/(1 + e^{omega/T}); limits T->0+ and T->inf handled explicitly.
double temperature_to_p(double omega, double T);

/// p|1><1| + (1-p)|0><0|.
DensityOperator gibbs_state(double p);

struct CptpReport {
  enum class Status { valid, trace_violation, cp_violation };
  Status status = Status::valid;
  double trace_delta = 0.0;   // max |Tr(ch(E_ij)) - delta_ij|
  double min_choi_eig = 0.0;  // smallest Choi eigenvalue

  bool valid() const { return status == Status::valid; }
};

CptpReport is_cptp(const QuantumChannel& ch);

/// (ch1 o ch2)(rho) = ch1(ch2(rho)).
QuantumChannel compose(const QuantumChannel& ch1, const QuantumChannel& ch2);

}  // namespace ctcsim
