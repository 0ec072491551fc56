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

#include "ctcsim/channels.hpp"

#include <cmath>

namespace ctcsim {

namespace {

void validate_common(double p, double A, double t) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument("DaviesParams: p must lie in [0, 1/2]");
  }
  if (!(A >= 0.0)) {
    throw std::invalid_argument("DaviesParams: A must be >= 0");
  }
  if (!(t >= 0.0)) {
    throw std::invalid_argument("DaviesParams: t must be >= 0");
  }
}

}  // namespace

DaviesParams::DaviesParams(double p_, double A_, double G_, double omega_,
                           double t_)
    : p(p_), A(A_), G(G_), omega(omega_), t(t_) {
  validate_common(p, A, t);
  if (!(G >= A / 2.0)) {
    throw std::invalid_argument("DaviesParams: violates G >= A/2");
  }
}

DaviesParams DaviesParams::unchecked(double p, double A, double G, double omega,
                                     double t) {
  validate_common(p, A, t);
  DaviesParams d;
  d.p = p;
  d.A = A;
  d.G = G;
  d.omega = omega;
  d.t = t;
  return d;
}

DaviesParams DaviesParams::with_time(double new_t) const {
  DaviesParams d = *this;
  if (!(new_t >= 0.0)) {
    throw std::invalid_argument("DaviesParams: t must be >= 0");
  }
  d.t = new_t;
  return d;
}

QuantumChannel::QuantumChannel(Eigen::Matrix4cd superoperator)
    : s_(std::move(superoperator)) {}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("QuantumChannel::apply: expected a 2x2 matrix");
  }
  Eigen::Vector4cd v;
  v << rho(0, 0), rho(1, 0), rho(0, 1), rho(1, 1);  // column stacking
  Eigen::Vector4cd w = s_ * v;
  ComplexMatrix out(2, 2);
  out << w(0), w(2), w(1), w(3);
  return out;
}

DensityOperator QuantumChannel::apply(const DensityOperator& rho) const {
  return DensityOperator(apply(rho.matrix()));
}

QuantumChannel QuantumChannel::identity() {
  return QuantumChannel(Eigen::Matrix4cd::Identity());
}

QuantumChannel QuantumChannel::from_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& fn) {
  Eigen::Matrix4cd s;
  for (int col = 0; col < 2; ++col) {
    for (int row = 0; row < 2; ++row) {
      ComplexMatrix out = fn(matrix_unit(row, col, 2));
      const int k = 2 * col + row;
      s(0, k) = out(0, 0);
      s(1, k) = out(1, 0);
      s(2, k) = out(0, 1);
      s(3, k) = out(1, 1);
    }
  }
  return QuantumChannel(s);
}

ComplexMatrix davies_action(const DaviesParams& d, const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("davies_action: expected a 2x2 matrix");
  }
  const double f = 1.0 - std::exp(-d.A * d.t);
  const Complex up = std::exp(Complex(-d.G * d.t, d.omega * d.t));
  ComplexMatrix out(2, 2);
  out(0, 0) = rho(0, 0) * (1.0 - d.p * f) + rho(1, 1) * (1.0 - d.p) * f;
  out(1, 1) = rho(0, 0) * d.p * f + rho(1, 1) * (1.0 - (1.0 - d.p) * f);
  out(1, 0) = up * rho(1, 0);
  out(0, 1) = std::conj(up) * rho(0, 1);
  return out;
}

DensityOperator davies_apply(const DaviesParams& d, const DensityOperator& rho) {
  if (rho.nqubits() != 1) {
    throw std::invalid_argument("davies_apply: expected a single qubit");
  }
  return DensityOperator(davies_action(d, rho.matrix()));
}

QuantumChannel davies_superoperator(const DaviesParams& d) {
  return QuantumChannel::from_action(
      [&d](const ComplexMatrix& m) { return davies_action(d, m); });
}

double temperature_to_p(double omega, double T) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("temperature_to_p: omega must be > 0");
  }
  if (!(T >= 0.0)) {
    throw std::invalid_argument("temperature_to_p: T must be >= 0");
  }
  if (T == 0.0) return 0.0;
  if (std::isinf(T)) return 0.5;
  // Stable form of exp(-w/2T)/[exp(-w/2T)+exp(w/2T)]; the naive version
  // overflows for T << omega.
  return 1.0 / (1.0 + std::exp(omega / T));
}

DensityOperator gibbs_state(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument("gibbs_state: p must lie in [0, 1/2]");
  }
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0 - p;
  m(1, 1) = p;
  return DensityOperator(std::move(m));
}

CptpReport is_cptp(const QuantumChannel& ch) {
  CptpReport report;
  // Trace preservation: Tr(ch(E_ij)) must equal delta_ij.
  double max_dev = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix out = ch.apply(matrix_unit(i, j, 2));
      const double expected = (i == j) ? 1.0 : 0.0;
      max_dev = std::max(max_dev, std::abs(out.trace() - Complex(expected)));
    }
  }
  report.trace_delta = max_dev;

  // Choi matrix: sum_ij E_ij (x) ch(E_ij); positive iff completely positive.
  ComplexMatrix choi = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      choi += tensor(matrix_unit(i, j, 2), ch.apply(matrix_unit(i, j, 2)));
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(choi,
                                                      Eigen::EigenvaluesOnly);
  report.min_choi_eig = solver.eigenvalues().minCoeff();

  if (report.trace_delta > 1e-12) {
    report.status = CptpReport::Status::trace_violation;
  } else if (report.min_choi_eig < -1e-10) {
    report.status = CptpReport::Status::cp_violation;
  } else {
    report.status = CptpReport::Status::valid;
  }
  return report;
}

QuantumChannel compose(const QuantumChannel& ch1, const QuantumChannel& ch2) {
  return QuantumChannel(ch1.superoperator() * ch2.superoperator());
}

}  // namespace ctcsim
