// Copyright 2023 The Authors.
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

#include "tuttecert/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tuttecert {

namespace {

constexpr std::int64_t kBlockSize = std::int64_t{1} << 14;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct Moments {
  std::int64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void Add(double value) {
    ++count;
    const double delta = value - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (value - mean);
  }

  void Merge(const Moments& other) {
    if (other.count == 0) return;
    const double n = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / n;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / n;
    count += other.count;
  }
};

class Sampler {
 public:
  Sampler(const BipartiteGraph& graph, double x, double y, std::uint64_t seed,
          bool integrate_leaves)
      : graph_(graph), n_(graph.vertex_count()), x_(x), y_(y),
        seed_key_(Mix(seed + kGolden)), draws_(n_), is_leaf_(n_, false),
        leaf_count_(n_, 0) {
    if (integrate_leaves) {
      for (int v = 0; v < n_; ++v) {
        if (graph.Degree(v) == 1 && graph.Degree(graph.Neighbors(v)[0]) >= 2) {
          is_leaf_[v] = true;
          ++leaf_count_[graph.Neighbors(v)[0]];
        }
      }
    }
    for (int power = 0; power <= n_; ++power) {
      x_pow_.push_back(std::pow(x, power));
      y_pow_.push_back(std::pow(y, power));
    }
  }

  double Sample(std::uint64_t k) {
    const std::uint64_t key = Mix(seed_key_ ^ Mix(k));
    for (int v = 0; v < n_; ++v) {
      draws_[v] = Mix(key + kGolden * static_cast<std::uint64_t>(v + 1));
    }
    int active_a = 0;
    int active_b = 0;
    double weight = 1;
    for (int v = 0; v < n_; ++v) {
      if (is_leaf_[v]) continue;
      bool beats = true;
      for (int w : graph_.Neighbors(v)) {
        if (is_leaf_[w]) continue;
        if (draws_[w] > draws_[v] || (draws_[w] == draws_[v] && w > v)) {
          beats = false;
          break;
        }
      }
      const int k_leaves = leaf_count_[v];
      if (k_leaves == 0) {
        if (beats) ++(graph_.InA(v) ? active_a : active_b);
        continue;
      }
      const double own = graph_.InA(v) ? x_ : y_;
      const double leaf = graph_.InA(v) ? y_ : x_;
      const double t = (static_cast<double>(draws_[v] >> 11) + 0.5) * 0x1p-53;
      const double all_below = std::pow(t, k_leaves);
      weight *= std::pow(t + (1 - t) * leaf, k_leaves) - all_below +
                all_below * (beats ? own : 1.0);
    }
    return weight * x_pow_[active_a] * y_pow_[active_b];
  }

 private:
  const BipartiteGraph& graph_;
  int n_;
  double x_;
  double y_;
  std::uint64_t seed_key_;
  std::vector<std::uint64_t> draws_;
  std::vector<bool> is_leaf_;
  std::vector<int> leaf_count_;
  std::vector<double> x_pow_;
  std::vector<double> y_pow_;
};

}  // namespace

int DefaultWorkerCount() {
  if (const char* env = std::getenv("MW_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // Fall through to the hardware default.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

McEstimate PermTutteMc(const BipartiteGraph& graph, double x, double y,
                       std::int64_t samples, std::uint64_t seed,
                       const McOptions& options) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(x >= 0) || !(y >= 0)) {
    throw std::invalid_argument("x and y must be non-negative");
  }
  const std::int64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> block_moments(blocks);
  const int workers = static_cast<int>(std::min<std::int64_t>(
      blocks, options.workers > 0 ? options.workers : DefaultWorkerCount()));

  auto run = [&](int worker) {
    Sampler sampler(graph, x, y, seed, options.integrate_leaves);
    for (std::int64_t block = worker; block < blocks; block += workers) {
      const std::int64_t begin = block * kBlockSize;
      const std::int64_t end = std::min(samples, begin + kBlockSize);
      Moments& moments = block_moments[block];
      for (std::int64_t k = begin; k < end; ++k) {
        moments.Add(sampler.Sample(static_cast<std::uint64_t>(k)));
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  Moments total;
  for (const Moments& m : block_moments) total.Merge(m);
  McEstimate estimate;
  estimate.mean = total.mean;
  estimate.samples = samples;
  estimate.seed = seed;
  if (samples > 1) {
    const double variance = total.m2 / static_cast<double>(samples - 1);
    estimate.std_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(samples));
  }
  return estimate;
}

}  // namespace tuttecert
