// Copyright 2026 The cverify Authors
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

// Security budgets for compressed verification. An adversary facing a
// hidden kernel K drawn from a family S wins a membership query with
// probability at most kappa / (#S - kappa * Q) after Q rejections, where
// kappa bounds how many candidate kernels contain any one query. All
// combinatorial quantities are handled as log2 values.

#include <cstddef>
#include <cstdint>
#include <utility>

namespace cverify {

class Rng;

/// log2 C(n, k) for real n >= k.
double log2_binomial(double n, std::uint64_t k);

/// log2 of the Gaussian binomial (a choose b) at base 3.
double three_binomial(std::uint64_t a, std::uint64_t b);

/// kappa / (s_size - kappa * q). Throws kBudgetExceeded when the
/// denominator is not positive.
double segp_success_bound(double s_size, double kappa, double q);
/// The same bound with every argument and the result given as log2.
double segp_success_bound_log2(double s_size_log2, double kappa_log2, double q_log2);

struct SecurityBudget {
  double mu = 0;
  double q_limit_log2 = 0;  // failed verifications before a VK refresh
  double s_size_log2 = 0;
  double kappa_log2 = 0;
  double quotient_size_log2 = 0;

  /// min(#S / kappa, #(M/K)) >= 2^mu + 2^q_log2.
  bool satisfies(double q_log2) const;
};

enum class KappaModel {
  kSmallConstant,  // kappa = 1
  kBinomial,       // kappa = C(s, t)
};

/// Secret-prime family: #S = C(P31, t), #(M/K) >= 2^(30 t).
SecurityBudget squirrels_budget(std::size_t s, std::size_t t, double q_log2,
                                KappaModel model = KappaModel::kSmallConstant);
/// Codimension-c subspaces of F3^(n-k): #S = (n-k choose c)_3,
/// kappa = (n-k-1 choose n-k-c-1)_3, #(M/K) = 3^c.
SecurityBudget wave_budget(std::size_t n, std::size_t k, std::size_t c, double q_log2);

enum class SegpScheme { kWave, kSquirrels };

enum class SegpStrategy {
  kRandom,          // fresh uniform nonzero queries, never repeated
  kReplay,          // resubmits the known rejected query
  kScalarMultiple,  // follows every rejected query by twice that query
};

struct SegpToyConfig {
  SegpScheme scheme = SegpScheme::kWave;
  std::size_t dim = 4;        // Wave: F3^dim, dim <= 8
  std::size_t codim = 2;      // Wave: c <= 3
  unsigned prime_bits = 12;   // Squirrels: secret prime width
  unsigned query_bits = 40;   // Squirrels: queries below 2^query_bits
  std::size_t queries = 4;
};

struct SegpGameResult {
  std::size_t trials = 0;
  std::size_t wins = 0;
  double rate = 0;
  double sigma = 0;  // binomial standard deviation of `rate` at `bound`
  double bound = 0;  // sum of per-query bounds, capped at 1
  double s_size = 0;
  double kappa = 0;
};

/// Exact #S and kappa of the toy family.
std::pair<double, double> segp_toy_family(const SegpToyConfig& config);

/// Each trial draws a fresh hidden kernel, hands the adversary one known
/// rejected query, then allows `queries` adaptive membership queries.
/// A trial is won when some accepted query is nonzero.
SegpGameResult simulate_segp_game(const SegpToyConfig& config, SegpStrategy strategy,
                                  std::size_t trials, Rng& rng);

}  // namespace cverify
