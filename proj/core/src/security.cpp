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

#include "cverify/security.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "cverify/common.hpp"
#include "cverify/modmath.hpp"
#include "cverify/rng.hpp"

namespace cverify {
namespace {

const double kLog2Of3 = std::log2(3.0);

// log2(3^x - 1), x >= 1.
double log2_pow3_minus_one(double x) {
  return x * kLog2Of3 + std::log1p(-std::pow(3.0, -x)) / std::log(2.0);
}

// log2(2^a - 2^b) for a > b.
double log2_diff(double a, double b) { return a + std::log1p(-std::exp2(b - a)) / std::log(2.0); }

double mu_after_queries(double m, double q_log2) {
  if (q_log2 >= m) throw Error(ErrorCode::kBudgetExceeded, "query budget exceeds family size");
  return log2_diff(m, q_log2);
}

double summed_bound(double s_size, double kappa, std::size_t queries) {
  double total = 0;
  for (std::size_t i = 1; i <= queries; ++i) {
    const double denom = s_size - kappa * static_cast<double>(i);
    if (denom <= 0) return 1.0;
    total += kappa / denom;
  }
  return std::min(total, 1.0);
}

std::size_t pow3(std::size_t e) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < e; ++i) v *= 3;
  return v;
}

class WaveToyGame {
 public:
  WaveToyGame(const SegpToyConfig& cfg, Rng& rng) : m_(cfg.dim), c_(cfg.codim), size_(pow3(m_)) {
    std::vector<unsigned> mat(m_ * c_);
    do {
      for (auto& e : mat) e = static_cast<unsigned>(rng.uniform(3));
    } while (rank(mat) < c_);
    c_mat_ = std::move(mat);
  }

  std::size_t space() const { return size_; }

  bool in_kernel(std::size_t x) const {
    std::vector<unsigned> digits(m_);
    for (std::size_t i = 0; i < m_; ++i, x /= 3) digits[i] = static_cast<unsigned>(x % 3);
    for (std::size_t j = 0; j < c_; ++j) {
      unsigned acc = 0;
      for (std::size_t i = 0; i < m_; ++i) acc += digits[i] * c_mat_[i * c_ + j];
      if (acc % 3 != 0) return false;
    }
    return true;
  }

  std::size_t scaled(std::size_t x) const {
    std::size_t out = 0;
    for (std::size_t i = 0, place = 1; i < m_; ++i, x /= 3, place *= 3) {
      out += ((2 * (x % 3)) % 3) * place;
    }
    return out;
  }

 private:
  std::size_t rank(std::vector<unsigned> a) const {
    std::size_t r = 0;
    for (std::size_t col = 0; col < c_ && r < m_; ++col) {
      std::size_t piv = r;
      while (piv < m_ && a[piv * c_ + col] == 0) ++piv;
      if (piv == m_) continue;
      for (std::size_t j = 0; j < c_; ++j) std::swap(a[piv * c_ + j], a[r * c_ + j]);
      const unsigned inv = a[r * c_ + col];
      for (std::size_t j = 0; j < c_; ++j) a[r * c_ + j] = (a[r * c_ + j] * inv) % 3;
      for (std::size_t i = 0; i < m_; ++i) {
        const unsigned f = a[i * c_ + col];
        if (i == r || f == 0) continue;
        for (std::size_t j = 0; j < c_; ++j) a[i * c_ + j] = (a[i * c_ + j] + (3 - f) * a[r * c_ + j]) % 3;
      }
      ++r;
    }
    return r;
  }

  std::size_t m_;
  std::size_t c_;
  std::size_t size_;
  std::vector<unsigned> c_mat_;
};

std::vector<u64> primes_of_width(unsigned bits) {
  std::vector<u64> out;
  for (u64 v = (u64{1} << (bits - 1)) + 1; v < (u64{1} << bits); v += 2) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

// Plays one trial given a membership oracle and a sampler of fresh
// candidate queries; returns whether an accepted nonzero query occurred.
template <typename Accepts, typename Fresh, typename Scale>
bool play(SegpStrategy strategy, std::size_t queries, std::uint64_t known_rejected,
          Accepts accepts, Fresh fresh, Scale scale) {
  std::unordered_set<std::uint64_t> seen{known_rejected};
  std::uint64_t last_rejected = known_rejected;
  bool virtual_next = true;
  for (std::size_t i = 0; i < queries; ++i) {
    std::uint64_t query = 0;
    switch (strategy) {
      case SegpStrategy::kReplay:
        query = known_rejected;
        break;
      case SegpStrategy::kScalarMultiple:
        if (virtual_next) {
          query = scale(last_rejected);
          virtual_next = false;
          break;
        }
        [[fallthrough]];
      case SegpStrategy::kRandom:
        do {
          query = fresh();
        } while (!seen.insert(query).second);
        virtual_next = true;
        break;
    }
    if (accepts(query)) return true;
    last_rejected = query;
  }
  return false;
}

}  // namespace

double log2_binomial(double n, std::uint64_t k) {
  if (static_cast<double>(k) > n) return -std::numeric_limits<double>::infinity();
  double acc = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc += std::log2((n - static_cast<double>(i)) / static_cast<double>(i + 1));
  }
  return acc;
}

double three_binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return -std::numeric_limits<double>::infinity();
  b = std::min(b, a - b);
  double acc = 0;
  for (std::uint64_t i = 0; i < b; ++i) {
    acc += log2_pow3_minus_one(static_cast<double>(a - i)) -
           log2_pow3_minus_one(static_cast<double>(b - i));
  }
  return acc;
}

double segp_success_bound(double s_size, double kappa, double q) {
  const double denom = s_size - kappa * q;
  if (!(denom > 0)) throw Error(ErrorCode::kBudgetExceeded, "verification key must be refreshed");
  return kappa / denom;
}

double segp_success_bound_log2(double s_size_log2, double kappa_log2, double q_log2) {
  const double used = kappa_log2 + q_log2;
  if (used >= s_size_log2) {
    throw Error(ErrorCode::kBudgetExceeded, "verification key must be refreshed");
  }
  return kappa_log2 - log2_diff(s_size_log2, used);
}

bool SecurityBudget::satisfies(double q_log2) const {
  const double m = std::min(s_size_log2 - kappa_log2, quotient_size_log2);
  const double hi = std::max(mu, q_log2);
  const double need = hi + std::log2(1 + std::exp2(std::min(mu, q_log2) - hi));
  return m + 1e-9 >= need;
}

SecurityBudget squirrels_budget(std::size_t s, std::size_t t, double q_log2, KappaModel model) {
  SecurityBudget b;
  b.s_size_log2 = log2_binomial(static_cast<double>(kPrimes31), t);
  b.kappa_log2 = model == KappaModel::kBinomial ? log2_binomial(static_cast<double>(s), t) : 0.0;
  b.quotient_size_log2 = 30.0 * static_cast<double>(t);
  const double m = std::min(b.s_size_log2 - b.kappa_log2, b.quotient_size_log2);
  b.mu = mu_after_queries(m, q_log2);
  b.q_limit_log2 = m - 1;
  return b;
}

SecurityBudget wave_budget(std::size_t n, std::size_t k, std::size_t c, double q_log2) {
  if (k >= n || c == 0 || c >= n - k) {
    throw Error(ErrorCode::kInvalidArgument, "need k < n and 0 < c < n - k");
  }
  SecurityBudget b;
  b.s_size_log2 = three_binomial(n - k, c);
  b.kappa_log2 = three_binomial(n - k - 1, n - k - c - 1);
  b.quotient_size_log2 = static_cast<double>(c) * kLog2Of3;
  const double m = std::min(b.s_size_log2 - b.kappa_log2, b.quotient_size_log2);
  b.mu = mu_after_queries(m, q_log2);
  b.q_limit_log2 = m - 1;
  return b;
}

std::pair<double, double> segp_toy_family(const SegpToyConfig& config) {
  if (config.scheme == SegpScheme::kWave) {
    if (config.dim == 0 || config.dim > 8 || config.codim == 0 || config.codim > 3 ||
        config.codim >= config.dim) {
      throw Error(ErrorCode::kInvalidArgument, "toy Wave game needs dim <= 8, codim <= 3");
    }
    return {std::exp2(three_binomial(config.dim, config.codim)),
            std::exp2(three_binomial(config.dim - 1, config.dim - config.codim - 1))};
  }
  if (config.prime_bits < 3 || config.prime_bits > 24 || config.query_bits > 62 ||
      config.query_bits < config.prime_bits) {
    throw Error(ErrorCode::kInvalidArgument, "toy Squirrels game widths out of range");
  }
  const auto count = static_cast<double>(primes_of_width(config.prime_bits).size());
  const double kappa = static_cast<double>((config.query_bits - 1) / (config.prime_bits - 1));
  return {count, kappa};
}

SegpGameResult simulate_segp_game(const SegpToyConfig& config, SegpStrategy strategy,
                                  std::size_t trials, Rng& rng) {
  const auto [s_size, kappa] = segp_toy_family(config);
  SegpGameResult res;
  res.trials = trials;
  res.s_size = s_size;
  res.kappa = kappa;
  res.bound = summed_bound(s_size, kappa, config.queries);

  if (config.scheme == SegpScheme::kWave) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const WaveToyGame game(config, rng);
      if (config.queries + 1 >= game.space()) {
        throw Error(ErrorCode::kInvalidArgument, "more queries than vectors");
      }
      auto fresh = [&] { return 1 + rng.uniform(game.space() - 1); };
      std::uint64_t t0 = 0;
      do {
        t0 = fresh();
      } while (game.in_kernel(t0));
      const bool won = play(
          strategy, config.queries, t0, [&](std::uint64_t x) { return x != 0 && game.in_kernel(x); },
          fresh, [&](std::uint64_t x) { return game.scaled(x); });
      res.wins += won ? 1 : 0;
    }
  } else {
    const std::vector<u64> primes = primes_of_width(config.prime_bits);
    const u64 limit = u64{1} << config.query_bits;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const u64 r = primes[rng.uniform(primes.size())];
      auto fresh = [&] { return 1 + rng.uniform(limit - 1); };
      std::uint64_t t0 = 0;
      do {
        t0 = fresh();
      } while (t0 % r == 0);
      const bool won = play(
          strategy, config.queries, t0, [&](std::uint64_t x) { return x % r == 0; }, fresh,
          [](std::uint64_t x) { return 2 * x; });
      res.wins += won ? 1 : 0;
    }
  }
  res.rate = trials == 0 ? 0.0 : static_cast<double>(res.wins) / static_cast<double>(trials);
  res.sigma = trials == 0 ? 0.0
                          : std::sqrt(res.bound * (1 - res.bound) / static_cast<double>(trials));
  return res;
}

}  // namespace cverify
