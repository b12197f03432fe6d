// Copyright 2026 The gamecap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Capacity engines: point-to-point Blahut-Arimoto and the generalized
// (multi-transmitter, product-input) variant that maximizes I(X_[K]; Y_[K])
// over P_X1 ... P_XK.

#ifndef GAMECAP_CAPACITY_H_
#define GAMECAP_CAPACITY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gamecap/channels.h"
#include "gamecap/games.h"

namespace gamecap {

// One simplex vector per transmitter.
using ProductDistribution = std::vector<std::vector<double>>;

// Throws InvalidArgument unless each factor is nonnegative and sums to 1
// within 1e-12 (after the sizes match `input_sizes`).
void validate_product_distribution(const ProductDistribution& dist,
                                   std::span<const int> input_sizes);

// Joint law of independent inputs, mixed-radix over the factor sizes.
std::vector<double> joint_of(const ProductDistribution& dist);

// I(X;Y) in bits for a joint input law over the channel's joint inputs.
double mutual_information(const Channel& channel,
                          std::span<const double> joint_input);
double mutual_information(const Channel& channel,
                          const ProductDistribution& dist);
double mutual_information(const SubChannel& sub,
                          std::span<const double> input);

enum class InitMode { kUniform, kRandomDirichlet };

struct GbaConfig {
  double tolerance = 1e-9;  // on the per-cycle objective improvement, bits
  int max_iterations = 20000;
  int num_starts = 50;
  std::uint64_t rng_seed = 0;
  InitMode init = InitMode::kRandomDirichlet;
  // Keep the per-cycle objective history of every start.
  bool record_history = false;
  // 0: GAMECAP_WORKERS from the environment, else hardware concurrency.
  int workers = 0;

  void validate() const;
};

struct StartTrace {
  int iterations = 0;
  double final_value = 0.0;
  bool converged = false;
  // GBA: objective (bits) at the start point, then after each cycle.
  // Point-to-point BA: I(Q) (bits) at the top of each iteration.
  std::vector<double> history;
};

struct CapacityResult {
  double value = 0.0;  // bits
  ProductDistribution argmax;
  std::vector<StartTrace> starts;
  int best_start = 0;

  int converged_starts() const;
  // max - min of final values over starts.
  double spread() const;
};

// Standard Blahut-Arimoto from the uniform input. Stops once
// max_x D(x) - I(Q), an upper bound on the distance to capacity, drops below
// `tol` bits. On hitting max_iter the last iterate is returned with
// converged = false.
CapacityResult ba_point_to_point(const SubChannel& sub, double tol = 1e-9,
                                 int max_iter = 100000);

// Generalized Blahut-Arimoto with cyclic per-transmitter updates
// Q_i(x_i) <- Q_i(x_i) exp(D_i(x_i)) / Z, where D_i averages
// sum_y P(y|x) ln(P(y|x)/P(y)) over the other transmitters' current laws and
// P(y) is refreshed after every transmitter. The best of cfg.num_starts
// starts is returned (lowest start index on ties).
CapacityResult gba_sum_capacity(const Channel& channel, const GbaConfig& cfg);

struct GapResult {
  double closed_form = 0.0;
  double gba_value = 0.0;
  double gap = 0.0;
  // Set when a slightly negative raw gap (within kGapClampTol) was clamped.
  bool clamped = false;
  double raw_gap = 0.0;
  int converged_starts = 0;
  CapacityResult gba;
};

inline constexpr double kGapClampTol = 1e-6;

// closed form minus GBA value. Throws ValidationError if the channel fails
// validation and NumericError if the GBA value exceeds the closed form by
// more than kGapClampTol.
GapResult cooperation_gap(const Channel& channel, const Game& game,
                          const GbaConfig& cfg);

struct SweepRow {
  double eta = 0.0;
  double closed_form = 0.0;
  double gba_value = 0.0;
  double gap = 0.0;
  int converged_starts = 0;
};

// Per eta in the grid (each in [0, 0.5)): per-receiver channel with
// eta_w = 1 - eta, eta_l = eta, and its cooperation gap. Rows sorted by eta.
std::vector<SweepRow> eta_sweep(const Game& game, std::vector<double> grid,
                                const GbaConfig& cfg);

// eta,closed_form_bits,gba_bits,gap_bits,converged_starts
std::string sweep_to_csv(std::span<const SweepRow> rows);

// Parses "start:stop:step" (stop exclusive) or a comma-separated list.
std::vector<double> parse_eta_grid(const std::string& text);

}  // namespace gamecap

#endif  // GAMECAP_CAPACITY_H_
