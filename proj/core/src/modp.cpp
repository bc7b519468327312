// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace crosscap::detail {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t Zp::inv(std::uint64_t a) const {
  // Extended Euclid on signed values; p < 2^31 so everything fits.
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a % p_);
  std::int64_t s0 = 0, s1 = 1;
  if (r1 == 0) throw std::domain_error("Zp::inv: zero has no inverse");
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(((s0 % p) + p) % p);
}

void Zp::trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly Zp::reduce(const IntPoly& f) const {
  ZpPoly out(f.coeffs().size());
  Integer r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p_);
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

ZpPoly Zp::add(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

ZpPoly Zp::sub(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

ZpPoly Zp::mul(const ZpPoly& a, const ZpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
  }
  trim(out);
  return out;
}

ZpPoly Zp::scale(const ZpPoly& a, std::uint64_t c) const {
  ZpPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

ZpPoly Zp::monic(const ZpPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

ZpPoly Zp::derivative(const ZpPoly& a) const {
  if (a.size() <= 1) return {};
  ZpPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p_);
  trim(out);
  return out;
}

void Zp::divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const {
  if (b.empty()) throw std::domain_error("Zp::divmod: zero divisor");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  const std::uint64_t lead_inv = inv(b.back());
  const std::size_t db = b.size() - 1;
  q.assign(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::uint64_t c = mul(r[k], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = k - db;
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = sub(r[shift + j], mul(c, b[j]));
  }
  trim(q);
  trim(r);
}

ZpPoly Zp::rem(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly q, r;
  divmod(a, b, q, r);
  return r;
}

ZpPoly Zp::quot(const ZpPoly& a, const ZpPoly& b) const {
  ZpPoly q, r;
  divmod(a, b, q, r);
  return q;
}

ZpPoly Zp::gcd(ZpPoly a, ZpPoly b) const {
  while (!b.empty()) {
    ZpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

void Zp::bezout(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const {
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0{1}, s1{};
  ZpPoly t0{}, t1{1};
  while (!r1.empty()) {
    ZpPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZpPoly s2 = sub(s0, mul(q, s1));
    ZpPoly t2 = sub(t0, mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::domain_error("Zp::bezout: inputs are not coprime");
  const std::uint64_t c = inv(r0[0]);
  s = scale(s0, c);
  t = scale(t0, c);
}

std::vector<ZpPoly> Zp::berlekamp(const ZpPoly& f) const {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // Rows of the Berlekamp matrix: t^{i p} mod f.
  ZpPoly xp{0, 1};
  {
    ZpPoly result{1};
    ZpPoly base = xp;
    for (std::uint64_t e = p_; e != 0; e >>= 1U) {
      if (e & 1U) result = rem(mul(result, base), f);
      base = rem(mul(base, base), f);
    }
    xp = std::move(result);
  }
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  ZpPoly row{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t qij = j < row.size() ? row[j] : 0;
      a[j][i] = sub(qij, i == j ? 1 : 0);  // transpose of (Q - I)
    }
    row = rem(mul(row, xp), f);
  }

  // Reduced row echelon form; kernel vectors read off the free columns.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t c = inv(a[rank][col]);
    for (auto& x : a[rank]) x = mul(x, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::uint64_t m = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] = sub(a[r][k], mul(m, a[rank][k]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<ZpPoly> basis;
  for (std::size_t col = 0; col < n; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
    ZpPoly v(n, 0);
    v[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = sub(0, a[r][col]);
    trim(v);
    basis.push_back(std::move(v));
  }
  const std::size_t r = basis.size();

  std::vector<ZpPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (v.size() <= 1) continue;  // constants split nothing
    std::vector<ZpPoly> next;
    for (const auto& u : factors) {
      ZpPoly rest = u;
      if (rest.size() > 2) {
        for (std::uint64_t s = 0; s < p_ && rest.size() > 2; ++s) {
          ZpPoly shifted = v;
          shifted[0] = sub(shifted[0], s);
          trim(shifted);
          ZpPoly g = gcd(rest, shifted);
          if (g.size() > 1 && g.size() < rest.size()) {
            next.push_back(g);
            rest = quot(rest, g);
          }
        }
      }
      next.push_back(monic(rest));
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end(), [](const ZpPoly& x, const ZpPoly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return factors;
}

}  // namespace crosscap::detail
