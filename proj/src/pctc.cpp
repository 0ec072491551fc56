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

#include "ctcsim/pctc.hpp"

#include <cmath>

namespace ctcsim {

namespace {

constexpr double kZeroWeight = 1e-14;

// Unnormalized 2x2 SYS block <Phi|_CB U [rho (x) chi] U' |Phi>_CB.
ComplexMatrix unnormalized_output(const ComplexMatrix& rho,
                                  const ComplexMatrix& chi) {
  const ComplexMatrix u = pctc_system_unitary().matrix();
  const ComplexMatrix x = u * tensor(rho, chi) * u.adjoint();
  const Eigen::VectorXcd phi = PureState::bell_phi().amplitudes();
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          out(i, j) += std::conj(phi(a)) * x(4 * i + a, 4 * j + b) * phi(b);
        }
      }
    }
  }
  return out;
}

PctcResult normalize(ComplexMatrix out) {
  const double weight = out.trace().real();
  if (weight < kZeroWeight) throw ZeroPostselectionError();
  return PctcResult{DensityOperator(out / weight), weight};
}

}  // namespace

BellCoefficients bell_coefficients(const DaviesParams& d) {
  const double f = 1.0 - std::exp(-d.A * d.t);
  BellCoefficients bc;
  bc.a0 = 0.5 * (1.0 - d.p * f);
  bc.b0 = 0.5 * d.p * f;
  bc.a1 = 0.5 * (1.0 - d.p) * f;
  bc.b1 = 0.5 * (1.0 - (1.0 - d.p) * f);
  // |11><00| entry; the phase follows the channel's |1><0| rule.
  bc.c = 0.5 * std::exp(Complex(-d.G * d.t, d.omega * d.t));
  return bc;
}

DensityOperator noisy_bell(const DaviesParams& d) {
  // |Phi><Phi| = (1/2) sum_ij E_ij (x) E_ij; apply the channel to the C
  // factor of each term.
  ComplexMatrix chi = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix e = matrix_unit(i, j, 2);
      chi += 0.5 * tensor(davies_action(d, e), e);
    }
  }
  return DensityOperator(std::move(chi));
}

PctcResult pctc_output(const DensityOperator& rho_i, const DaviesParams& d) {
  if (rho_i.nqubits() != 1) {
    throw std::invalid_argument("pctc_output: expected a single-qubit input");
  }
  return normalize(
      unnormalized_output(rho_i.matrix(), noisy_bell(d).matrix()));
}

PctcResult pctc_output_with_resource(const DensityOperator& rho_i,
                                     const DensityOperator& chi_cb) {
  if (rho_i.nqubits() != 1 || chi_cb.nqubits() != 2) {
    throw std::invalid_argument(
        "pctc_output_with_resource: expected a qubit input and a two-qubit "
        "resource");
  }
  return normalize(unnormalized_output(rho_i.matrix(), chi_cb.matrix()));
}

std::array<ComplexMatrix, 6> l_operators() {
  const ComplexMatrix u = pctc_system_unitary().matrix();
  const Eigen::VectorXcd phi = PureState::bell_phi().amplitudes();
  // CB basis kets for indices I..VI.
  constexpr int kets[6] = {0, 2, 0, 3, 1, 3};
  std::array<ComplexMatrix, 6> ls;
  for (int n = 0; n < 6; ++n) {
    ComplexMatrix l = ComplexMatrix::Zero(2, 2);
    for (int sp = 0; sp < 2; ++sp) {
      for (int s = 0; s < 2; ++s) {
        for (int a = 0; a < 4; ++a) {
          l(sp, s) += std::conj(phi(a)) * u(4 * sp + a, 4 * s + kets[n]);
        }
      }
    }
    ls[n] = std::move(l);
  }
  return ls;
}

PctcResult pctc_output_via_l(const DensityOperator& rho_i,
                             const DaviesParams& d) {
  if (rho_i.nqubits() != 1) {
    throw std::invalid_argument(
        "pctc_output_via_l: expected a single-qubit input");
  }
  const ComplexMatrix rho = rho_i.matrix();
  if (std::abs((rho * rho).trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "pctc_output_via_l: the decomposition requires a pure input");
  }
  const auto l = l_operators();
  const BellCoefficients bc = bell_coefficients(d);
  ComplexMatrix out = bc.a0 * l[0] * rho * l[0].adjoint() +
                      bc.b0 * l[1] * rho * l[1].adjoint() +
                      std::conj(bc.c) * l[2] * rho * l[3].adjoint() +
                      bc.c * l[3] * rho * l[2].adjoint() +
                      bc.a1 * l[4] * rho * l[4].adjoint() +
                      bc.b1 * l[5] * rho * l[5].adjoint();
  return normalize(std::move(out));
}

}  // namespace ctcsim
