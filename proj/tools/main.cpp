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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctcsim/analysis.hpp"
#include "ctcsim/channels.hpp"
#include "ctcsim/deutsch.hpp"
#include "ctcsim/gates.hpp"
#include "ctcsim/pctc.hpp"
#include "ctcsim/qmat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgument = 2;
constexpr int kExitAmbiguity = 3;
constexpr int kExitZeroPostselection = 4;
constexpr int kExitIo = 5;

std::string fmt_real(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, v);
  return buf;
}

std::string fmt_matrix(const ctcsim::ComplexMatrix& m, int precision) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << "  ";
      out << "(" << fmt_real(m(r, c).real(), precision) << ", "
          << fmt_real(m(r, c).imag(), precision) << ")";
    }
    out << "\n";
  }
  return out.str();
}

// Named state {0, 1, plus, minus} or an explicit Bloch triple "x,y,z".
ctcsim::DensityOperator parse_state(const std::string& s) {
  using ctcsim::PureState;
  if (s == "0") return ctcsim::DensityOperator::from_pure(PureState::zero());
  if (s == "1") return ctcsim::DensityOperator::from_pure(PureState::one());
  if (s == "plus" || s == "+")
    return ctcsim::DensityOperator::from_pure(PureState::plus());
  if (s == "minus" || s == "-")
    return ctcsim::DensityOperator::from_pure(PureState::minus());
  double x, y, z;
  char sep1, sep2;
  std::istringstream in(s);
  if (!(in >> x >> sep1 >> y >> sep2 >> z) || sep1 != ',' || sep2 != ',') {
    throw std::invalid_argument("unknown state '" + s +
                                "' (use 0, 1, plus, minus or x,y,z)");
  }
  return ctcsim::state_from_bloch(ctcsim::BlochVector{x, y, z});
}

struct ParamFlags {
  double p = 0.0;
  double A = 0.0;
  double G = 0.0;
  double omega = 1.0;
  double t = 0.0;

  void attach(CLI::App* cmd, bool required) {
    cmd->add_option("--p", p, "temperature parameter in [0, 1/2]")
        ->required(required);
    cmd->add_option("--A", A, "energy-relaxation rate")->required(required);
    cmd->add_option("--G", G, "dephasing rate")->required(required);
    cmd->add_option("--omega", omega, "qubit energy splitting (default 1)");
    cmd->add_option("--t", t, "exposure time")->required(required);
  }

  ctcsim::DaviesParams make() const {
    return ctcsim::DaviesParams(p, A, G, omega, t);
  }
};

std::uint64_t resolve_seed(CLI::App* cmd, std::uint64_t flag_value) {
  if (cmd->count("--seed") > 0) return flag_value;
  if (const char* env = std::getenv("CTCSIM_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return flag_value;
}

void print_deutsch_result(const ctcsim::DeutschResult& res, int precision) {
  std::cout << "solution dimension: " << res.solution_set.dimension << "\n";
  if (res.solution_set.dimension == 1) {
    const auto& iv = *res.solution_set.feasible_interval;
    std::cout << "feasible interval: [" << fmt_real(iv.first, precision)
              << ", " << fmt_real(iv.second, precision) << "]\n";
    std::cout << "selection: max_entropy\n";
  } else {
    std::cout << "selection: unique\n";
  }
  std::cout << "tau:\n" << fmt_matrix(res.tau.matrix(), precision);
  std::cout << "entropy(tau): "
            << fmt_real(ctcsim::von_neumann_entropy(res.tau), precision)
            << "\n";
  std::cout << "rho_f:\n" << fmt_matrix(res.rho_f.matrix(), precision);
}

// "start:stop:count", "start:stop" (count 2) or a single fixed value.
ctcsim::GridAxis parse_axis(const std::string& s) {
  ctcsim::GridAxis axis;
  const auto first = s.find(':');
  if (first == std::string::npos) {
    axis.start = axis.stop = std::stod(s);
    axis.count = 1;
    return axis;
  }
  const auto second = s.find(':', first + 1);
  axis.start = std::stod(s.substr(0, first));
  if (second == std::string::npos) {
    axis.stop = std::stod(s.substr(first + 1));
    axis.count = 2;
  } else {
    axis.stop = std::stod(s.substr(first + 1, second - first - 1));
    axis.count = std::stoi(s.substr(second + 1));
  }
  return axis;
}

int run(int argc, char** argv) {
  CLI::App app{"Qubit circuits with closed timelike curves under thermal "
               "weak-coupling noise"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key = value configuration file");

  int precision = 15;
  app.add_option("--precision", precision,
                 "significant digits for printed reals")
      ->check(CLI::Range(6, 17));

  // davies: evolve a state through the thermal channel.
  auto* davies = app.add_subcommand("davies", "apply the thermal channel");
  ParamFlags davies_params;
  davies_params.attach(davies, true);
  std::string davies_state = "0";
  davies->add_option("--state", davies_state, "input state");

  // deutsch: two-qubit distinguishing circuit.
  auto* deutsch = app.add_subcommand(
      "deutsch", "solve the two-qubit D-CTC distinguishing circuit");
  ParamFlags deutsch_params;
  deutsch_params.attach(deutsch, false);
  std::string deutsch_input = "minus";
  deutsch->add_option("--input", deutsch_input, "CR input state");

  // unproven: three-qubit knowledge-generation circuit.
  auto* unproven = app.add_subcommand(
      "unproven", "solve the three-qubit unproven-theorem circuit");
  ParamFlags unproven_params;
  unproven_params.attach(unproven, false);

  // pctc: post-selected teleportation circuit.
  auto* pctc = app.add_subcommand(
      "pctc", "run the post-selected CTC circuit with a noisy Bell resource");
  ParamFlags pctc_params;
  pctc_params.attach(pctc, false);
  std::string pctc_input = "1";
  pctc->add_option("--input", pctc_input, "system input state");
  std::string pctc_resource = "phi";
  pctc->add_option("--resource", pctc_resource,
                   "resource pair: phi (noisy Bell) or a basis label 00..11");

  // sweep: CSV emission over a parameter grid.
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "emit distinguishability records over a parameter grid");
  std::string axis_p = "0.25", axis_a = "1", axis_g = "1", axis_w = "1",
              axis_t = "0:5:200";
  std::string sweep_out;
  sweep_cmd->add_option("--p", axis_p, "p grid (value or start:stop:count)");
  sweep_cmd->add_option("--A", axis_a, "A grid");
  sweep_cmd->add_option("--G", axis_g, "G grid");
  sweep_cmd->add_option("--omega", axis_w, "omega grid");
  sweep_cmd->add_option("--t", axis_t, "t grid");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();

  // conjecture: randomized never-enhancement harness.
  auto* conjecture = app.add_subcommand(
      "conjecture", "randomized never-enhancement harness");
  int trials = 1000;
  std::uint64_t seed = 42;
  std::string conjecture_out;
  conjecture->add_option("--trials", trials, "number of trials");
  conjecture->add_option("--seed", seed, "RNG seed");
  conjecture->add_option("--out", conjecture_out, "report file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitArgument;
  }

  if (davies->parsed()) {
    const ctcsim::DaviesParams d = davies_params.make();
    const ctcsim::DensityOperator out =
        ctcsim::davies_apply(d, parse_state(davies_state));
    std::cout << "state:\n" << fmt_matrix(out.matrix(), precision);
    const ctcsim::CptpReport report =
        ctcsim::is_cptp(ctcsim::davies_superoperator(d));
    std::cout << "cptp: " << (report.valid() ? "valid" : "violated")
              << " (trace_delta " << fmt_real(report.trace_delta, precision)
              << ", min_choi_eig " << fmt_real(report.min_choi_eig, precision)
              << ")\n";
    std::cout << "gibbs_distance: "
              << fmt_real(ctcsim::trace_distance(out, ctcsim::gibbs_state(d.p)),
                          precision)
              << "\n";
    return kExitOk;
  }

  if (deutsch->parsed()) {
    std::optional<ctcsim::DaviesParams> d;
    if (deutsch->count("--t") > 0) d = deutsch_params.make();
    const auto res = ctcsim::deutsch_solve(ctcsim::fig1_unitary(),
                                           parse_state(deutsch_input), d);
    print_deutsch_result(res, precision);
    return kExitOk;
  }

  if (unproven->parsed()) {
    std::optional<ctcsim::DaviesParams> d;
    if (unproven->count("--t") > 0) d = unproven_params.make();
    const ctcsim::DensityOperator book_input(
        ctcsim::tensor(ctcsim::matrix_unit(0, 0, 2),
                       ctcsim::matrix_unit(0, 0, 2)));
    const auto res =
        ctcsim::deutsch_solve(ctcsim::fig5_unitary(), book_input, d);
    print_deutsch_result(res, precision);
    return kExitOk;
  }

  if (pctc->parsed()) {
    const ctcsim::DaviesParams d =
        pctc->count("--t") > 0
            ? pctc_params.make()
            : ctcsim::DaviesParams(0.0, 0.0, 0.0, 1.0, 0.0);
    ctcsim::PctcResult res = [&] {
      if (pctc_resource == "phi") {
        return ctcsim::pctc_output(parse_state(pctc_input), d);
      }
      if (pctc_resource.size() != 2 ||
          pctc_resource.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("unknown resource '" + pctc_resource +
                                    "'");
      }
      const int idx = 2 * (pctc_resource[0] - '0') + (pctc_resource[1] - '0');
      return ctcsim::pctc_output_with_resource(
          parse_state(pctc_input),
          ctcsim::DensityOperator(ctcsim::matrix_unit(idx, idx, 4)));
    }();
    std::cout << "rho_f:\n" << fmt_matrix(res.rho_f.matrix(), precision);
    std::cout << "postselection_weight: "
              << fmt_real(res.postselection_weight, precision) << "\n";
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    ctcsim::SweepGrid grid{parse_axis(axis_p), parse_axis(axis_a),
                           parse_axis(axis_g), parse_axis(axis_w),
                           parse_axis(axis_t)};
    const auto records = ctcsim::sweep(grid);
    std::ofstream out(sweep_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << sweep_out << "\n";
      return kExitIo;
    }
    out << "p,A,G,omega,t,Q_minus,Q_zero,R_numeric,R_paper,R_discrepancy\n";
    for (const auto& rec : records) {
      out << fmt_real(rec.params.p, precision) << ","
          << fmt_real(rec.params.A, precision) << ","
          << fmt_real(rec.params.G, precision) << ","
          << fmt_real(rec.params.omega, precision) << ","
          << fmt_real(rec.params.t, precision) << ","
          << fmt_real(rec.q_minus, precision) << ","
          << fmt_real(rec.q_zero, precision) << ","
          << fmt_real(rec.r_numeric, precision) << ","
          << fmt_real(rec.r_paper_formula, precision) << ","
          << fmt_real(rec.r_paper_formula - rec.r_numeric, precision) << "\n";
    }
    if (!out.good()) {
      std::cerr << "write failed: " << sweep_out << "\n";
      return kExitIo;
    }
    std::cout << records.size() << " rows written to " << sweep_out << "\n";
    return kExitOk;
  }

  if (conjecture->parsed()) {
    if (trials < 1) {
      std::cerr << "conjecture: --trials must be >= 1\n";
      return kExitArgument;
    }
    const std::uint64_t effective_seed = resolve_seed(conjecture, seed);
    const auto report = ctcsim::conjecture_harness(trials, effective_seed);
    std::ostringstream body;
    body << "trials: " << report.trials << "\n"
         << "seed: " << report.seed << "\n"
         << "violations: " << report.violating_pairs.size() << "\n"
         << "max_violation: " << fmt_real(report.max_violation, precision)
         << "\n";
    for (const auto& v : report.violating_pairs) {
      body << "violation trial=" << v.trial << " p="
           << fmt_real(v.params.p, precision) << " A="
           << fmt_real(v.params.A, precision) << " G="
           << fmt_real(v.params.G, precision) << " t="
           << fmt_real(v.params.t, precision) << " noisy="
           << fmt_real(v.noisy_distance, precision) << " dephasing="
           << fmt_real(v.dephasing_distance, precision) << "\n";
    }
    if (!conjecture_out.empty()) {
      std::ofstream out(conjecture_out, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open output file: " << conjecture_out << "\n";
        return kExitIo;
      }
      out << body.str();
    }
    std::cout << body.str();
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ctcsim::ZeroPostselectionError& e) {
    std::cerr << e.what() << "\n";
    return kExitZeroPostselection;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitAmbiguity;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitArgument;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
