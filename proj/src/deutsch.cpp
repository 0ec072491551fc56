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

#include "ctcsim/deutsch.hpp"

#include <cmath>
#include <sstream>

namespace ctcsim {

namespace {

constexpr double kRankTol = 1e-9;

ComplexMatrix pauli(int k) {
  ComplexMatrix m(2, 2);
  switch (k) {
    case 0:
      m << 0, 1, 1, 0;
      break;
    case 1:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

ComplexMatrix lambda_action(const Unitary& u, const ComplexMatrix& rho_i,
                            const ComplexMatrix& tau) {
  const ComplexMatrix x =
      u.matrix() * tensor(rho_i, tau) * u.matrix().adjoint();
  if (u.dim() == 4) return partial_trace(x, Keep::CV);
  return partial_trace_3q_keep_last(x);
}

void check_lambda_dims(const Unitary& u, const DensityOperator& rho_i,
                       const DensityOperator& tau) {
  if (tau.nqubits() != 1 || rho_i.dim() * tau.dim() != u.dim() ||
      (u.dim() != 4 && u.dim() != 8)) {
    throw std::invalid_argument("lambda_map: dimension mismatch");
  }
}

// Bloch components of a 2x2 operator: b_k = Tr(sigma_k m).
Eigen::Vector3d bloch_components(const ComplexMatrix& m) {
  Eigen::Vector3d b;
  for (int k = 0; k < 3; ++k) b(k) = (pauli(k) * m).trace().real();
  return b;
}

}  // namespace

DensityOperator lambda_map(const Unitary& u, const DensityOperator& rho_i,
                           const DensityOperator& tau) {
  check_lambda_dims(u, rho_i, tau);
  return DensityOperator(lambda_action(u, rho_i.matrix(), tau.matrix()));
}

QuantumChannel consistency_map(const Unitary& u, const DensityOperator& rho_i) {
  const ComplexMatrix rho = rho_i.matrix();
  return QuantumChannel::from_action([&u, &rho](const ComplexMatrix& m) {
    return lambda_action(u, rho, m);
  });
}

QuantumChannel noisy_consistency_map(const Unitary& u,
                                     const DensityOperator& rho_i,
                                     const DaviesParams& d) {
  const ComplexMatrix rho = rho_i.matrix();
  return QuantumChannel::from_action([&u, &rho, &d](const ComplexMatrix& m) {
    return davies_action(d, lambda_action(u, rho, m));
  });
}

DensityOperator CtcSolutionSet::member(double s) const {
  Eigen::Vector3d r(particular.x, particular.y, particular.z);
  if (!null_directions.empty()) {
    r += s * null_directions.front();
  } else if (s != 0.0) {
    throw std::invalid_argument("CtcSolutionSet: no free direction");
  }
  return state_from_bloch(BlochVector{r(0), r(1), r(2)});
}

CtcSolutionSet solve_fixed_point(const QuantumChannel& map) {
  // Affine action on Bloch vectors: r -> Mr + c.
  Eigen::Matrix3d m;
  for (int j = 0; j < 3; ++j) {
    m.col(j) = 0.5 * bloch_components(map.apply(pauli(j)));
  }
  const Eigen::Vector3d c =
      0.5 * bloch_components(map.apply(ComplexMatrix::Identity(2, 2)));

  const Eigen::Matrix3d lhs = Eigen::Matrix3d::Identity() - m;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      lhs, Eigen::ComputeFullU | Eigen::ComputeFullV);

  CtcSolutionSet set;
  // Min-norm least-squares solution via the thresholded pseudoinverse.
  Eigen::Vector3d r = Eigen::Vector3d::Zero();
  const Eigen::Vector3d utc = svd.matrixU().transpose() * c;
  for (int k = 0; k < 3; ++k) {
    const double sv = svd.singularValues()(k);
    if (sv >= kRankTol) {
      r += (utc(k) / sv) * svd.matrixV().col(k);
    } else {
      set.null_directions.push_back(svd.matrixV().col(k));
    }
  }
  set.dimension = static_cast<int>(set.null_directions.size());
  set.particular = BlochVector{r(0), r(1), r(2)};

  if ((lhs * r - c).norm() > 1e-8) {
    throw std::runtime_error(
        "solve_fixed_point: linear system inconsistent; the map is not "
        "trace-preserving on qubit states");
  }
  if (r.norm() > 1.0 + kTolPositivity) {
    throw std::runtime_error(
        "solve_fixed_point: no density-operator solution (|r| > 1)");
  }

  if (set.dimension == 1) {
    // |r + s n|^2 <= 1 as a quadratic in s (n is a unit vector).
    const Eigen::Vector3d n = set.null_directions.front();
    const double b = r.dot(n);
    const double disc = b * b - (r.squaredNorm() - 1.0);
    if (disc < 0.0) {
      throw std::runtime_error(
          "solve_fixed_point: empty feasible interval for the family");
    }
    const double root = std::sqrt(disc);
    set.feasible_interval = {-b - root, -b + root};
  }
  return set;
}

DensityOperator fixed_point_iterate(const QuantumChannel& map,
                                    const DensityOperator& start, double tol,
                                    long max_iter) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("fixed_point_iterate: tol must be > 0");
  }
  ComplexMatrix tau = start.matrix();
  double residual = 0.0;
  for (long it = 0; it < max_iter; ++it) {
    ComplexMatrix next = map.apply(tau);
    residual = trace_distance(next, tau);
    tau = std::move(next);
    if (residual < tol) return DensityOperator(tau);
  }
  std::ostringstream msg;
  msg << "fixed_point_iterate: no convergence after " << max_iter
      << " iterations (last residual " << residual << ")";
  throw std::runtime_error(msg.str());
}

DensityOperator select_max_entropy(const CtcSolutionSet& s) {
  if (s.dimension >= 2) {
    throw std::domain_error(
        "select_max_entropy: ambiguity dimension >= 2 unsupported");
  }
  if (s.dimension == 0) return s.member();

  // Entropy is strictly concave along the segment, so golden-section search
  // finds the unique maximizer.
  double a = s.feasible_interval->first;
  double b = s.feasible_interval->second;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = von_neumann_entropy(s.member(x1));
  double f2 = von_neumann_entropy(s.member(x2));
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = von_neumann_entropy(s.member(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = von_neumann_entropy(s.member(x1));
    }
  }

  // Entropy comparisons lose resolution once the bracket is within the
  // flat top, which stalls the accuracy near sqrt(machine epsilon). Qubit
  // entropy decreases strictly with the Bloch radius, so the maximizer is
  // the exact minimizer of the quadratic |particular + s*n|^2; one closed
  // form step recovers full precision.
  const Eigen::Vector3d rp(s.particular.x, s.particular.y, s.particular.z);
  const Eigen::Vector3d& n = s.null_directions[0];
  const double s_star = -rp.dot(n) / n.squaredNorm();
  if (s_star >= s.feasible_interval->first &&
      s_star <= s.feasible_interval->second) {
    return s.member(s_star);
  }
  return s.member(0.5 * (a + b));
}

DensityOperator deutsch_output(const Unitary& u, const DensityOperator& rho_i,
                               const DensityOperator& tau) {
  check_lambda_dims(u, rho_i, tau);
  const ComplexMatrix x =
      u.matrix() * tensor(rho_i.matrix(), tau.matrix()) * u.matrix().adjoint();
  if (u.dim() == 4) return DensityOperator(partial_trace(x, Keep::CR));
  // Three-qubit circuit: the CR marginal covers the first two qubits.
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 2; ++k) out(i, j) += x(2 * i + k, 2 * j + k);
    }
  }
  return DensityOperator(out);
}

DeutschResult deutsch_solve(const Unitary& u, const DensityOperator& rho_i,
                            const std::optional<DaviesParams>& d) {
  const QuantumChannel map =
      d ? noisy_consistency_map(u, rho_i, *d) : consistency_map(u, rho_i);
  CtcSolutionSet set = solve_fixed_point(map);
  if (set.dimension >= 2) {
    throw std::domain_error(
        "deutsch_solve: ambiguity dimension >= 2 unsupported");
  }
  DensityOperator tau = select_max_entropy(set);
  DensityOperator rho_f = deutsch_output(u, rho_i, tau);
  const Selection sel =
      set.dimension == 0 ? Selection::unique : Selection::max_entropy_selected;
  return DeutschResult{std::move(tau), std::move(rho_f), std::move(set), sel};
}

DensityOperator closed_form_tau(Fig1Input input, const DaviesParams& d) {
  const double ea = std::exp(-d.A * d.t);
  const Complex ag = std::exp(-d.t * Complex(d.A + d.G, d.omega));
  const Complex g = std::exp(-d.t * Complex(d.G, d.omega));
  ComplexMatrix tau(2, 2);
  if (input == Fig1Input::minus) {
    tau(0, 0) = -2.0 * (d.p * ea - ea - d.p + 1.0) / (ea - 2.0);
    tau(0, 1) = (d.p * ag - g * d.p - ag + g) / (ea - 2.0);
  } else {
    tau(0, 0) = -(2.0 * d.p * ea - ea - 2.0 * d.p + 2.0) / (ea - 2.0);
    tau(0, 1) = d.p * (ag - g) / (ea - 2.0);
  }
  tau(1, 1) = 1.0 - tau(0, 0).real();
  tau(1, 0) = std::conj(tau(0, 1));
  return DensityOperator(std::move(tau));
}

DensityOperator closed_form_rho_f(Fig1Input input, const DaviesParams& d) {
  const DensityOperator tau = closed_form_tau(input, d);
  ComplexMatrix rho = tau.matrix();
  const double scale = std::sqrt(2.0) / 2.0;
  const Complex off =
      input == Fig1Input::minus ? -scale * rho(0, 1) : scale * rho(0, 1);
  rho(0, 1) = off;
  rho(1, 0) = std::conj(off);
  return DensityOperator(std::move(rho));
}

}  // namespace ctcsim
