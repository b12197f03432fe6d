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

// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library's numerics: predicates are written
// out directly and information quantities use the textbook formulas.

#ifndef GAMECAP_TESTS_ORACLES_H_
#define GAMECAP_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline double h2(double p) {
  double h = 0.0;
  if (p > 0) h -= p * std::log2(p);
  if (p < 1) h -= (1 - p) * std::log2(1 - p);
  return h;
}

inline double entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

// I(X;Y) in bits; w[x * ny + y] = P(y|x).
inline double mutual_info(const std::vector<double>& px,
                          const std::vector<double>& w, int ny) {
  const int nx = static_cast<int>(px.size());
  std::vector<double> py(ny, 0.0);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) py[y] += px[x] * w[x * ny + y];
  }
  double hy = entropy(py);
  double hyx = 0.0;
  for (int x = 0; x < nx; ++x) {
    std::vector<double> row(w.begin() + x * ny, w.begin() + (x + 1) * ny);
    hyx += px[x] * entropy(row);
  }
  return hy - hyx;
}

inline int bit(int v, int j) { return (v >> j) & 1; }
inline int popcount3(int v) { return bit(v, 0) + bit(v, 1) + bit(v, 2); }

inline bool chsh(int q1, int q2, int a1, int a2) {
  return ((a1 + a2) % 2) == ((q1 * q2) % 2);
}

inline bool magic_square(int q1, int q2, int a1, int a2) {
  return popcount3(a1) % 2 == 0 && popcount3(a2) % 2 == 1 &&
         bit(a1, q2) == bit(a2, q1);
}

inline bool parity(const std::vector<int>& q, const std::vector<int>& a) {
  int sq = 0;
  int sa = 0;
  for (int v : q) sq += v;
  for (int v : a) sa += v;
  if (sq % 2 == 1) return true;
  return sa % 2 == (sq / 2) % 2;
}

// Best classical value for a game with binary questions and the given
// per-party answer count, from random restarts of coordinate ascent over
// deterministic strategies. `win(q, a)` is the predicate.
inline double hill_climb(
    int parties, int num_questions, int num_answers,
    const std::function<bool(const std::vector<int>&,
                             const std::vector<int>&)>& win,
    int restarts, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> pick(0, num_answers - 1);
  auto value = [&](const std::vector<std::vector<int>>& f) {
    int wins = 0;
    int total = 0;
    std::vector<int> q(parties, 0);
    std::vector<int> a(parties, 0);
    while (true) {
      for (int i = 0; i < parties; ++i) a[i] = f[i][q[i]];
      wins += win(q, a) ? 1 : 0;
      ++total;
      int i = parties - 1;
      while (i >= 0 && ++q[i] == num_questions) q[i--] = 0;
      if (i < 0) break;
    }
    return static_cast<double>(wins) / total;
  };
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    std::vector<std::vector<int>> f(parties,
                                    std::vector<int>(num_questions, 0));
    for (auto& fi : f) {
      for (auto& v : fi) v = pick(gen);
    }
    double cur = value(f);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int i = 0; i < parties; ++i) {
        for (int q = 0; q < num_questions; ++q) {
          for (int a = 0; a < num_answers; ++a) {
            const int keep = f[i][q];
            f[i][q] = a;
            const double v = value(f);
            if (v > cur + 1e-15) {
              cur = v;
              improved = true;
            } else {
              f[i][q] = keep;
            }
          }
        }
      }
    }
    best = std::max(best, cur);
  }
  return best;
}

// Points of the probability simplex on a grid of the given step.
inline std::vector<std::vector<double>> simplex_grid(int dim, double step) {
  const int n = static_cast<int>(std::lround(1.0 / step));
  std::vector<std::vector<double>> out;
  std::vector<int> c(dim, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == dim - 1) {
      c[i] = left;
      std::vector<double> p(dim);
      for (int j = 0; j < dim; ++j) p[j] = static_cast<double>(c[j]) / n;
      out.push_back(p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

// Dense grid search of max I(X1 X2; Y) over product inputs of a
// 2-transmitter channel; w[(x1 * n2 + x2) * ny + y].
inline double grid_product_capacity(int n1, int n2, int ny,
                                    const std::vector<double>& w,
                                    double step) {
  const auto g1 = simplex_grid(n1, step);
  const auto g2 = simplex_grid(n2, step);
  double best = 0.0;
  std::vector<double> px(n1 * n2);
  for (const auto& p1 : g1) {
    for (const auto& p2 : g2) {
      for (int a = 0; a < n1; ++a) {
        for (int b = 0; b < n2; ++b) px[a * n2 + b] = p1[a] * p2[b];
      }
      best = std::max(best, mutual_info(px, w, ny));
    }
  }
  return best;
}

}  // namespace oracle

#endif  // GAMECAP_TESTS_ORACLES_H_
