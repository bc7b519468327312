// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace crosscap {

namespace {

const Integer kZero{0};

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

const Integer& IntPoly::lead() const noexcept {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

const Integer& IntPoly::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Integer> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& p, unsigned k) {
  IntPoly result{1};
  IntPoly base = p;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

namespace {

// Long division over Z. Returns false as soon as a leading coefficient fails
// to divide; quotient and remainder are then meaningless.
bool long_divide(const IntPoly& a, const IntPoly& b, std::vector<Integer>& quot,
                 std::vector<Integer>& rem) {
  rem.assign(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.lead();
  if (a.degree() < db) {
    quot.clear();
    return true;
  }
  quot.assign(static_cast<std::size_t>(a.degree() - db + 1), Integer{0});
  for (int k = a.degree(); k >= db; --k) {
    Integer& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    Integer q = top / lb;
    const std::size_t shift = static_cast<std::size_t>(k - db);
    for (int j = 0; j <= db; ++j) rem[shift + static_cast<std::size_t>(j)] -= q * b.coeff(j);
    quot[shift] = std::move(q);
  }
  return true;
}

}  // namespace

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("div_exact: division by the zero polynomial");
  std::vector<Integer> quot;
  std::vector<Integer> rem;
  if (!long_divide(a, b, quot, rem) || !IntPoly(std::move(rem)).is_zero()) {
    throw NonExactDivision("div_exact: " + to_coeff_string(b) + " does not divide " +
                           to_coeff_string(a));
  }
  return IntPoly(std::move(quot));
}

IntPoly div_exact(const IntPoly& a, const Integer& c) {
  if (sgn(c) == 0) throw DivisionByZero("div_exact: division by zero scalar");
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw NonExactDivision("div_exact: scalar does not divide every coefficient");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) throw DivisionByZero("divides: zero divisor");
  std::vector<Integer> quot;
  std::vector<Integer> rem;
  return long_divide(a, b, quot, rem) && IntPoly(std::move(rem)).is_zero();
}

Integer eval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly compose_power(const IntPoly& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("compose_power: exponent must be positive");
  if (p.is_zero()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) * k + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * k] = p.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly canonicalize(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("canonicalize: zero polynomial");
  const auto c = p.coeffs();
  std::size_t low = 0;
  while (sgn(c[low]) == 0) ++low;
  std::vector<Integer> out(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
  if (sgn(out.back()) < 0) {
    for (auto& x : out) x = -x;
  }
  return IntPoly(std::move(out));
}

IntPoly reverse_coeffs(const IntPoly& p) {
  std::vector<Integer> out(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(out));
}

IntPoly reciprocal(const IntPoly& p) { return canonicalize(reverse_coeffs(p)); }

bool is_symmetric(const IntPoly& p) {
  const IntPoly c = canonicalize(p);
  return c == reciprocal(c);
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  return div_exact(p, content(p));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo_remainder: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Integer top = r[static_cast<std::size_t>(k)];
    for (auto& x : r) x *= lb;
    if (sgn(top) != 0) {
      const std::size_t shift = static_cast<std::size_t>(k - db);
      for (int j = 0; j <= db; ++j) r[shift + static_cast<std::size_t>(j)] -= top * b.coeff(j);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (sgn(x.lead()) < 0) x = -x;
  return x;
}

bool degree_lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    const int c = cmp(ac[i], bc[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_coeff_string(const IntPoly& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i != 0) os << ", ";
    os << p.coeffs()[i];
  }
  os << ']';
  return os.str();
}

}  // namespace crosscap
