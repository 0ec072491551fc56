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

#include "ctcsim/analysis.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace ctcsim {

double q_minus_closed(const DaviesParams& d) {
  const double ea = std::exp(d.A * d.t);
  return 0.5 * std::sqrt(2.0) * (ea - 1.0) * std::exp(-d.G * d.t) *
         std::sqrt(8.0 * std::exp(2.0 * d.G * d.t) + 1.0) * (1.0 - d.p) /
         (2.0 * ea - 1.0);
}

double q_zero_closed(const DaviesParams& d) {
  const double ea = std::exp(d.A * d.t);
  return 0.5 * std::sqrt(2.0) * d.p * (ea - 1.0) * std::exp(-d.G * d.t) *
         std::sqrt(8.0 * std::exp(2.0 * d.G * d.t) + 1.0) /
         (2.0 * ea - 1.0);
}

double r_numeric(const DaviesParams& d) {
  const Unitary u = fig1_unitary();
  const DeutschResult zero =
      deutsch_solve(u, DensityOperator::from_pure(PureState::zero()), d);
  const DeutschResult minus =
      deutsch_solve(u, DensityOperator::from_pure(PureState::minus()), d);
  return trace_distance(zero.rho_f, minus.rho_f);
}

double r_paper_formula(const DaviesParams& d) {
  const double eat = std::exp(d.A * d.t);
  const double q = 1.0 - 4.0 * d.p + 4.0 * d.p * d.p;
  return std::exp(-d.t * d.G) / (4.0 * eat - 1.0) *
         (q * (2.0 * eat * eat - 4.0 * eat + 2.0) +
          4.0 * std::exp(2.0 * d.t * d.G));
}

double GridAxis::at(int i) const {
  if (count == 1) return start;
  return start + (stop - start) * static_cast<double>(i) /
                     static_cast<double>(count - 1);
}

std::vector<DistinguishabilityRecord> sweep(const SweepGrid& grid) {
  for (const GridAxis* axis :
       {&grid.p, &grid.A, &grid.G, &grid.omega, &grid.t}) {
    if (axis->count < 1 || axis->start > axis->stop) {
      throw std::invalid_argument("sweep: invalid grid axis");
    }
  }
  std::vector<DistinguishabilityRecord> records;
  records.reserve(static_cast<std::size_t>(grid.p.count) * grid.A.count *
                  grid.G.count * grid.omega.count * grid.t.count);
  for (int ip = 0; ip < grid.p.count; ++ip) {
    for (int ia = 0; ia < grid.A.count; ++ia) {
      for (int ig = 0; ig < grid.G.count; ++ig) {
        for (int iw = 0; iw < grid.omega.count; ++iw) {
          for (int it = 0; it < grid.t.count; ++it) {
            const DaviesParams d(grid.p.at(ip), grid.A.at(ia), grid.G.at(ig),
                                 grid.omega.at(iw), grid.t.at(it));
            records.push_back(DistinguishabilityRecord{
                d, q_minus_closed(d), q_zero_closed(d), r_numeric(d),
                r_paper_formula(d)});
          }
        }
      }
    }
  }
  return records;
}

namespace {

PureState haar_random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(2);
  v << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
  return PureState(v / v.norm());
}

}  // namespace

ConjectureReport conjecture_harness(int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("conjecture_harness: trials must be >= 1");
  }
  ConjectureReport report;
  report.trials = trials;
  report.seed = seed;
  report.max_violation = -std::numeric_limits<double>::infinity();
  const Unitary u = fig1_unitary();

  for (int trial = 0; trial < trials; ++trial) {
    // Per-trial substream: deterministic and independent of other trials.
    std::seed_seq seq{static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    PureState psi1 = haar_random_qubit(rng);
    PureState psi2 = haar_random_qubit(rng);
    // The conjecture concerns non-orthogonal pairs.
    while (std::abs(psi1.amplitudes().dot(psi2.amplitudes())) < 1e-6) {
      psi2 = haar_random_qubit(rng);
    }
    const DensityOperator rho1 = DensityOperator::from_pure(psi1);
    const DensityOperator rho2 = DensityOperator::from_pure(psi2);

    const double p = 0.5 * unif(rng);
    const double A = 2.0 - 2.0 * unif(rng) * (1.0 - 1e-12);  // A > 0
    const double G = A / 2.0 + 2.0 * unif(rng);
    const double t = 5.0 - 5.0 * unif(rng) * (1.0 - 1e-12);  // t > 0
    const DaviesParams noisy(p, A, G, 1.0, t);
    const DaviesParams dephasing(p, 0.0, G, 1.0, t);

    const double dist_noisy =
        trace_distance(deutsch_solve(u, rho1, noisy).rho_f,
                       deutsch_solve(u, rho2, noisy).rho_f);
    const double dist_ref =
        trace_distance(deutsch_solve(u, rho1, dephasing).rho_f,
                       deutsch_solve(u, rho2, dephasing).rho_f);

    const double excess = dist_noisy - dist_ref;
    report.max_violation = std::max(report.max_violation, excess);
    if (excess > 1e-9) {
      report.violating_pairs.push_back(
          ConjectureReport::Violation{trial, noisy, dist_noisy, dist_ref});
    }
  }
  return report;
}

}  // namespace ctcsim
