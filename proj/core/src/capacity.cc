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

#include "gamecap/capacity.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "gamecap/entropy.h"
#include "gamecap/rng.h"
#include "gamecap/simulate.h"

namespace gamecap {

void validate_product_distribution(const ProductDistribution& dist,
                                   std::span<const int> input_sizes) {
  if (dist.size() != input_sizes.size()) {
    throw InvalidArgument("product distribution has " +
                          std::to_string(dist.size()) + " factors, expected " +
                          std::to_string(input_sizes.size()));
  }
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (static_cast<int>(dist[i].size()) != input_sizes[i]) {
      throw InvalidArgument("factor " + std::to_string(i) + " has length " +
                            std::to_string(dist[i].size()) + ", expected " +
                            std::to_string(input_sizes[i]));
    }
    double total = 0.0;
    for (double p : dist[i]) {
      if (!(p >= 0.0)) throw InvalidArgument("negative input probability");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw InvalidArgument("factor " + std::to_string(i) + " sums to " +
                            std::to_string(total));
    }
  }
}

std::vector<double> joint_of(const ProductDistribution& dist) {
  std::vector<double> joint = {1.0};
  for (const auto& factor : dist) {
    std::vector<double> next;
    next.reserve(joint.size() * factor.size());
    for (double p : joint) {
      for (double f : factor) next.push_back(p * f);
    }
    joint = std::move(next);
  }
  return joint;
}

namespace {

// I(X;Y) in nats for a row-major channel matrix.
double mutual_information_nats(std::span<const double> probs, Index nx,
                               Index ny, std::span<const double> px) {
  std::vector<double> py(ny, 0.0);
  for (Index x = 0; x < nx; ++x) {
    if (px[x] == 0.0) continue;
    const double* row = probs.data() + x * ny;
    for (Index y = 0; y < ny; ++y) py[y] += px[x] * row[y];
  }
  double info = 0.0;
  for (Index x = 0; x < nx; ++x) {
    if (px[x] == 0.0) continue;
    const double* row = probs.data() + x * ny;
    double d = 0.0;
    for (Index y = 0; y < ny; ++y) {
      if (row[y] > 0.0) d += row[y] * std::log(row[y] / py[y]);
    }
    info += px[x] * d;
  }
  return std::max(info, 0.0);
}

}  // namespace

double mutual_information(const Channel& channel,
                          std::span<const double> joint_input) {
  if (static_cast<Index>(joint_input.size()) != channel.num_inputs()) {
    throw InvalidArgument("input distribution has " +
                          std::to_string(joint_input.size()) +
                          " entries, channel has " +
                          std::to_string(channel.num_inputs()) + " inputs");
  }
  return mutual_information_nats(channel.probs(), channel.num_inputs(),
                                 channel.num_outputs(), joint_input) /
         kLn2;
}

double mutual_information(const Channel& channel,
                          const ProductDistribution& dist) {
  validate_product_distribution(dist, channel.input_sizes());
  const auto joint = joint_of(dist);
  return mutual_information(channel, joint);
}

double mutual_information(const SubChannel& sub,
                          std::span<const double> input) {
  if (static_cast<int>(input.size()) != sub.num_inputs) {
    throw InvalidArgument("input distribution length mismatch");
  }
  return mutual_information_nats(sub.probs, sub.num_inputs, sub.num_outputs,
                                 input) /
         kLn2;
}

void GbaConfig::validate() const {
  if (!(tolerance > 0.0)) throw InvalidArgument("GBA tolerance must be > 0");
  if (num_starts < 1) throw InvalidArgument("GBA needs at least one start");
  if (max_iterations < 1) {
    throw InvalidArgument("GBA max_iterations must be >= 1");
  }
}

int CapacityResult::converged_starts() const {
  return static_cast<int>(std::count_if(
      starts.begin(), starts.end(),
      [](const StartTrace& s) { return s.converged; }));
}

double CapacityResult::spread() const {
  if (starts.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(
      starts.begin(), starts.end(), [](const auto& a, const auto& b) {
        return a.final_value < b.final_value;
      });
  return hi->final_value - lo->final_value;
}

CapacityResult ba_point_to_point(const SubChannel& sub, double tol,
                                 int max_iter) {
  sub.validate();
  if (!(tol > 0.0) || max_iter < 1) {
    throw InvalidArgument("ba_point_to_point: tol > 0 and max_iter >= 1");
  }
  const int nx = sub.num_inputs;
  const int ny = sub.num_outputs;
  std::vector<double> q(nx, 1.0 / nx);
  std::vector<double> py(ny);
  std::vector<double> d(nx);
  StartTrace trace;

  auto refresh = [&] {
    std::fill(py.begin(), py.end(), 0.0);
    for (int x = 0; x < nx; ++x) {
      for (int y = 0; y < ny; ++y) py[y] += q[x] * sub(x, y);
    }
    for (int x = 0; x < nx; ++x) {
      double v = 0.0;
      for (int y = 0; y < ny; ++y) {
        const double p = sub(x, y);
        if (p > 0.0) v += p * std::log(p / py[y]);
      }
      d[x] = v;
    }
  };

  for (int it = 1; it <= max_iter; ++it) {
    refresh();
    double info = 0.0;
    for (int x = 0; x < nx; ++x) info += q[x] * d[x];
    const double upper = *std::max_element(d.begin(), d.end());
    trace.iterations = it;
    trace.history.push_back(info / kLn2);
    if ((upper - info) / kLn2 < tol) {
      trace.converged = true;
      break;
    }
    const double shift = upper;
    double z = 0.0;
    for (int x = 0; x < nx; ++x) {
      q[x] *= std::exp(d[x] - shift);
      z += q[x];
    }
    for (auto& v : q) v /= z;
  }

  CapacityResult result;
  result.value = mutual_information(sub, q);
  trace.final_value = result.value;
  result.argmax = {q};
  result.starts.push_back(std::move(trace));
  return result;
}

namespace {

// One generalized-BA run on a shared channel.
class GbaRun {
 public:
  GbaRun(const Channel& channel, std::span<const double> neg_entropy)
      : channel_(channel),
        neg_entropy_(neg_entropy),
        sizes_(channel.input_sizes()),
        k_(channel.num_tx()),
        nx_(channel.num_inputs()),
        ny_(channel.num_outputs()),
        digits_(nx_ * k_),
        weight_(nx_),
        score_(nx_),
        py_(ny_),
        log_py_(ny_) {
    std::vector<int> d(k_);
    for (Index x = 0; x < nx_; ++x) {
      decode_mixed_radix(x, sizes_, d);
      std::copy(d.begin(), d.end(), digits_.begin() + x * k_);
    }
  }

  StartTrace run(ProductDistribution& q, const GbaConfig& cfg) {
    StartTrace trace;
    double prev = objective(q);
    if (cfg.record_history) trace.history.push_back(prev);
    for (int it = 1; it <= cfg.max_iterations; ++it) {
      for (int i = 0; i < k_; ++i) update(q, i);
      const double cur = objective(q);
      trace.iterations = it;
      if (cfg.record_history) trace.history.push_back(cur);
      const double gain = cur - prev;
      prev = cur;
      if (gain < cfg.tolerance) {
        trace.converged = true;
        break;
      }
    }
    trace.final_value = prev;
    return trace;
  }

  // I(X;Y) in bits for the product law q; refreshes score_.
  double objective(const ProductDistribution& q) {
    refresh(q);
    double info = 0.0;
    for (Index x = 0; x < nx_; ++x) info += weight_[x] * score_[x];
    return std::max(info, 0.0) / kLn2;
  }

 private:
  // weight_(x) = prod_j q_j(x_j); py_, log_py_, and
  // score_(x) = sum_y P(y|x) ln(P(y|x) / P(y)).
  void refresh(const ProductDistribution& q) {
    std::fill(py_.begin(), py_.end(), 0.0);
    const auto probs = channel_.probs();
    for (Index x = 0; x < nx_; ++x) {
      double w = 1.0;
      const int* d = &digits_[x * k_];
      for (int j = 0; j < k_; ++j) w *= q[j][d[j]];
      weight_[x] = w;
      if (w == 0.0) continue;
      const double* row = probs.data() + x * ny_;
      for (Index y = 0; y < ny_; ++y) py_[y] += w * row[y];
    }
    for (Index y = 0; y < ny_; ++y) {
      log_py_[y] = py_[y] > 0.0 ? std::log(py_[y]) : 0.0;
    }
    for (Index x = 0; x < nx_; ++x) {
      const double* row = probs.data() + x * ny_;
      double cross = 0.0;
      for (Index y = 0; y < ny_; ++y) cross += row[y] * log_py_[y];
      score_[x] = neg_entropy_[x] - cross;
    }
  }

  void update(ProductDistribution& q, int i) {
    refresh(q);
    std::vector<double> exponent(sizes_[i], 0.0);
    for (Index x = 0; x < nx_; ++x) {
      const int* d = &digits_[x * k_];
      double w = 1.0;
      for (int j = 0; j < k_; ++j) {
        if (j != i) w *= q[j][d[j]];
      }
      exponent[d[i]] += w * score_[x];
    }
    double shift = -std::numeric_limits<double>::infinity();
    for (int xi = 0; xi < sizes_[i]; ++xi) {
      if (q[i][xi] > 0.0) shift = std::max(shift, exponent[xi]);
    }
    double z = 0.0;
    for (int xi = 0; xi < sizes_[i]; ++xi) {
      q[i][xi] = q[i][xi] > 0.0 ? q[i][xi] * std::exp(exponent[xi] - shift)
                                : 0.0;
      z += q[i][xi];
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
      throw NumericError("generalized Blahut-Arimoto: input law of "
                         "transmitter " + std::to_string(i) + " collapsed");
    }
    for (auto& v : q[i]) v /= z;
  }

  const Channel& channel_;
  std::span<const double> neg_entropy_;
  Sizes sizes_;
  int k_;
  Index nx_;
  Index ny_;
  std::vector<int> digits_;
  std::vector<double> weight_;
  std::vector<double> score_;
  std::vector<double> py_;
  std::vector<double> log_py_;
};

ProductDistribution initial_point(const Channel& channel,
                                  const GbaConfig& cfg, int start) {
  ProductDistribution q;
  auto rng = Xoshiro256::for_stream(cfg.rng_seed, StreamDomain::kGbaStart,
                                    static_cast<std::uint64_t>(start));
  for (int size : channel.input_sizes()) {
    if (cfg.init == InitMode::kUniform) {
      q.emplace_back(size, 1.0 / size);
    } else {
      q.push_back(rng.dirichlet(size));
    }
  }
  return q;
}

}  // namespace

CapacityResult gba_sum_capacity(const Channel& channel, const GbaConfig& cfg) {
  cfg.validate();
  std::vector<double> neg_entropy(channel.num_inputs());
  for (Index x = 0; x < channel.num_inputs(); ++x) {
    neg_entropy[x] = -entropy_nats(channel.row(x));
  }

  const int n = cfg.num_starts;
  std::vector<StartTrace> traces(n);
  std::vector<ProductDistribution> finals(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    GbaRun run(channel, neg_entropy);
    for (int s = next++; s < n; s = next++) {
      ProductDistribution q = initial_point(channel, cfg, s);
      traces[s] = run.run(q, cfg);
      finals[s] = std::move(q);
    }
  };
  const int workers = std::min(resolve_workers(cfg.workers), n);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  CapacityResult result;
  result.best_start = 0;
  for (int s = 1; s < n; ++s) {
    if (traces[s].final_value > traces[result.best_start].final_value) {
      result.best_start = s;
    }
  }
  result.argmax = finals[result.best_start];
  result.value = mutual_information(channel, joint_of(result.argmax));
  result.starts = std::move(traces);
  return result;
}

GapResult cooperation_gap(const Channel& channel, const Game& game,
                          const GbaConfig& cfg) {
  const GameChannelReport report = validate_game_channel(channel, game);
  GapResult out;
  out.closed_form = closed_form_sum_capacity(report);
  out.gba = gba_sum_capacity(channel, cfg);
  out.gba_value = out.gba.value;
  out.converged_starts = out.gba.converged_starts();
  out.raw_gap = out.closed_form - out.gba_value;
  out.gap = out.raw_gap;
  if (out.raw_gap < 0.0) {
    if (out.raw_gap < -kGapClampTol) {
      throw NumericError("GBA value " + std::to_string(out.gba_value) +
                         " exceeds the closed-form sum capacity " +
                         std::to_string(out.closed_form));
    }
    out.gap = 0.0;
    out.clamped = true;
  }
  return out;
}

std::vector<SweepRow> eta_sweep(const Game& game, std::vector<double> grid,
                                const GbaConfig& cfg) {
  for (double eta : grid) {
    if (!(eta >= 0.0 && eta < 0.5)) {
      throw InvalidArgument("eta grid value " + std::to_string(eta) +
                            " outside [0, 0.5)");
    }
  }
  std::sort(grid.begin(), grid.end());
  std::vector<SweepRow> rows;
  for (double eta : grid) {
    const std::string where = "at eta=" + std::to_string(eta) + ": ";
    try {
      const Channel channel =
          build_game_channel(game, ChannelParams::from_eta(eta));
      const GapResult gap = cooperation_gap(channel, game, cfg);
      rows.push_back({eta, gap.closed_form, gap.gba_value, gap.gap,
                      gap.converged_starts});
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(where + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    } catch (const NumericError& e) {
      throw NumericError(where + e.what());
    }
  }
  return rows;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "eta,closed_form_bits,gba_bits,gap_bits,converged_starts\n";
  out << std::fixed;
  for (const auto& r : rows) {
    out << std::setprecision(6) << r.eta << ',' << std::setprecision(10)
        << r.closed_form << ',' << r.gba_value << ',' << r.gap << ','
        << r.converged_starts << '\n';
  }
  return out.str();
}

std::vector<double> parse_eta_grid(const std::string& text) {
  auto to_double = [&text](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("malformed eta grid '" + text + "'");
    }
  };
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() != 3) {
      throw InvalidArgument("eta grid must be start:stop:step, got '" + text +
                            "'");
    }
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0)) throw InvalidArgument("eta grid step must be > 0");
    for (int k = 0;; ++k) {
      // Rounded to 1e-12 so 0.02 * 3 prints as 0.06.
      const double v = std::round((start + k * step) * 1e12) / 1e12;
      if (v >= stop - 1e-12) break;
      grid.push_back(v);
    }
  } else {
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ',');) {
      grid.push_back(to_double(part));
    }
  }
  if (grid.empty()) throw InvalidArgument("eta grid is empty");
  return grid;
}

}  // namespace gamecap
