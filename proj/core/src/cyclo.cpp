// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/cyclo.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace crosscap {

namespace {

std::int64_t max_index() {
  static const std::int64_t cap = [] {
    if (const char* env = std::getenv("CROSSCAP_CYCLO_MAX_INDEX")) {
      try {
        const long long v = std::stoll(env);
        if (v > 0) return static_cast<std::int64_t>(v);
      } catch (const std::exception&) {
      }
    }
    return kDefaultCycloMaxIndex;
  }();
  return cap;
}

void require_index(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": index must be >= 1");
  if (n > max_index()) {
    throw std::invalid_argument(std::string(who) + ": index " + std::to_string(n) +
                                " exceeds CROSSCAP_CYCLO_MAX_INDEX=" + std::to_string(max_index()));
  }
}

void require_odd_positive(std::int64_t q, const char* who) {
  if (q < 1 || q % 2 == 0) {
    throw std::invalid_argument(std::string(who) + ": expected an odd positive integer, got " +
                                std::to_string(q));
  }
}

// t^n + sign
IntPoly binomial(std::int64_t n, long sign) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c.front() = sign;
  c.back() = 1;
  return IntPoly(std::move(c));
}

class CyclotomicCache {
 public:
  IntPoly get(std::int64_t n) {
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(n); it != table_.end()) return it->second;
    }
    // Build outside the lock; divisors recurse through get().
    IntPoly phi = binomial(n, -1);
    for (std::int64_t d : divisors(n)) {
      if (d == n) break;
      phi = div_exact(phi, get(d));
    }
    std::unique_lock lock(mu_);
    return table_.emplace(n, std::move(phi)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::int64_t, IntPoly> table_;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factor_integer: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t s = 2; s * s <= n; ++s) {
    if (n % s != 0) continue;
    int e = 0;
    while (n % s == 0) {
      n /= s;
      ++e;
    }
    out.emplace_back(s, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t euler_totient(std::int64_t n) {
  std::int64_t phi = n;
  for (auto [s, e] : factor_integer(n)) phi = phi / s * (s - 1);
  return phi;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (auto [s, e] : factor_integer(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::int64_t prime_power_base(std::int64_t n) {
  if (n < 2) return 0;
  const auto f = factor_integer(n);
  return f.size() == 1 ? f.front().first : 0;
}

IntPoly cyclotomic(std::int64_t n) {
  require_index(n, "cyclotomic");
  return cache().get(n);
}

IntPoly cyclotomic_mobius(std::int64_t n) {
  require_index(n, "cyclotomic_mobius");
  IntPoly num{1};
  IntPoly den{1};
  for (std::int64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 1) num = num * binomial(n / d, -1);
    if (mu == -1) den = den * binomial(n / d, -1);
  }
  return div_exact(num, den);
}

IntPoly torus_poly(std::int64_t q) {
  require_odd_positive(q, "torus_poly");
  return div_exact(binomial(q, 1), IntPoly{1, 1});
}

std::vector<TorusFactor> torus_factorization(std::int64_t q) {
  require_odd_positive(q, "torus_factorization");
  std::vector<TorusFactor> out;
  for (std::int64_t p : divisors(q)) {
    if (p > 1) out.push_back({p, cyclotomic(2 * p)});
  }
  return out;
}

std::vector<std::int64_t> odd_prime_power_divisors(std::int64_t q) {
  require_odd_positive(q, "odd_prime_power_divisors");
  std::vector<std::int64_t> out;
  for (std::int64_t p : divisors(q)) {
    if (prime_power_base(p) != 0) out.push_back(p);
  }
  return out;
}

Integer phi_2p_at_minus_one(std::int64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("phi_2p_at_minus_one: expected odd p >= 3, got " + std::to_string(p));
  }
  return eval(cyclotomic(2 * p), Integer{-1});
}

}  // namespace crosscap
