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

#include <cstdint>
#include <string>
#include <vector>

#include "ctcsim/channels.hpp"
#include "ctcsim/deutsch.hpp"

namespace ctcsim {

/// Closed-form trace distance between the noisy circuit output for input
/// |-> and the noiseless output |1><1|.
double q_minus_closed(const DaviesParams& d);

/// Closed-form trace distance between the noisy circuit output for input
/// |0> and the noiseless output |0><0|.
double q_zero_closed(const DaviesParams& d);

/// Trace distance between the two circuit outputs for inputs |0> and |->,
/// computed through the full fixed-point pipeline. The ground truth for R.
double r_numeric(const DaviesParams& d);

/// Literal evaluation of the published closed form for R. Retained for
/// discrepancy reporting only: it fails its own sanity limits (4/3 at t=0,
/// values outside [0,1] on the A=0 plane) and is never used as truth.
double r_paper_formula(const DaviesParams& d);

struct GridAxis {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double at(int i) const;
};

struct SweepGrid {
  GridAxis p;
  GridAxis A;
  GridAxis G;
  GridAxis omega;
  GridAxis t;
};

struct DistinguishabilityRecord {
  DaviesParams params;
  double q_minus;
  double q_zero;
  double r_numeric;
  double r_paper_formula;
};

/// One record per grid point, ordered by grid index (p outermost, t
/// innermost). Every grid point must satisfy the channel validity
/// constraints; an invalid point raises an argument error up front.
std::vector<DistinguishabilityRecord> sweep(const SweepGrid& grid);

struct ConjectureReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;  // largest noisy-minus-dephasing excess seen
  struct Violation {
    int trial;
    DaviesParams params;
    double noisy_distance;
    double dephasing_distance;
  };
  std::vector<Violation> violating_pairs;
};

/// Randomized never-enhancement check: Haar-random non-orthogonal pure
/// input pairs, random valid channel parameters with A > 0, circuit output
/// distance under noise compared against the A = 0 reference with the same
/// (p, G, omega, t). Deterministic given the seed (per-trial substreams).
ConjectureReport conjecture_harness(int trials, std::uint64_t seed);

}  // namespace ctcsim
