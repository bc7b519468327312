// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

// Kronecker's factorization method. Deliberately slow and simple: this is the
// oracle that factor_rational is checked against, so it must not borrow any of
// the modular machinery.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "crosscap/factor.hpp"

namespace crosscap {

namespace {

constexpr long kPointRadius = 8;

// Positive divisors of |n|, n != 0, ascending.
std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer s = 2; s * s <= m; ++s) {
    if (!mpz_divisible_p(m.get_mpz_t(), s.get_mpz_t())) continue;
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), s.get_mpz_t())) {
      m /= s;
      ++e;
    }
    primes.emplace_back(s, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> out{1};
  for (const auto& [s, e] : primes) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= s;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A linear factor a t - b of f, or the zero polynomial if none exists.
IntPoly find_linear_factor(const IntPoly& f) {
  const auto leads = positive_divisors(f.lead());
  const auto consts = positive_divisors(f.coeff(0));
  for (const auto& a : leads) {
    for (const auto& b : consts) {
      for (int sign : {1, -1}) {
        const IntPoly cand(std::vector<Integer>{Integer(-sign * b), a});
        if (divides(cand, f)) return cand;
      }
    }
  }
  return {};
}

struct Point {
  Integer x;
  Integer value;
  std::vector<Integer> divisors;
};

class DegreeSearch {
 public:
  DegreeSearch(const IntPoly& f, int degree, std::vector<Point> points)
      : f_(f), degree_(degree), points_(std::move(points)), newton_(points_.size()) {}

  IntPoly run() {
    if (descend(0)) return found_;
    return {};
  }

 private:
  // Newton form evaluated at x using coefficients [0, upto).
  Integer newton_eval(std::size_t upto, const Integer& x) const {
    Integer acc = 0;
    for (std::size_t k = upto; k-- > 0;) acc = acc * (x - points_[k].x) + newton_[k];
    return acc;
  }

  IntPoly newton_expand() const {
    IntPoly acc;
    for (std::size_t k = newton_.size(); k-- > 0;) {
      acc = acc * IntPoly(std::vector<Integer>{Integer(-points_[k].x), Integer(1)}) +
            IntPoly::constant(newton_[k]);
    }
    return acc;
  }

  bool descend(std::size_t i) {
    const Point& pt = points_[i];
    Integer denom = 1;
    for (std::size_t j = 0; j < i; ++j) denom *= pt.x - points_[j].x;
    const Integer partial = newton_eval(i, pt.x);
    for (const auto& d : pt.divisors) {
      for (int sign : {1, -1}) {
        // g and -g are the same factor; fix the sign at the first point.
        if (i == 0 && sign < 0) continue;
        const Integer v = sign * d;
        const Integer num = v - partial;
        if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) continue;
        newton_[i] = num / denom;
        if (i + 1 < points_.size()) {
          if (descend(i + 1)) return true;
          continue;
        }
        // newton_[degree] is the leading coefficient of the candidate.
        if (sgn(newton_[i]) == 0) continue;
        if (!mpz_divisible_p(f_.lead().get_mpz_t(), newton_[i].get_mpz_t())) continue;
        IntPoly cand = newton_expand();
        if (cand.degree() == degree_ && divides(cand, f_)) {
          found_ = std::move(cand);
          return true;
        }
      }
    }
    return false;
  }

  const IntPoly& f_;
  int degree_;
  std::vector<Point> points_;
  std::vector<Integer> newton_;
  IntPoly found_;
};

// Some irreducible factor of least degree; f itself when irreducible.
IntPoly smallest_factor(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return f;
  if (IntPoly lin = find_linear_factor(f); !lin.is_zero()) return lin;

  // Without linear factors f has no integer roots, so every value is nonzero.
  std::vector<Point> pool;
  for (long x = -kPointRadius; x <= kPointRadius; ++x) {
    Point p{Integer(x), eval(f, Integer(x)), {}};
    p.divisors = positive_divisors(p.value);
    pool.push_back(std::move(p));
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Point& a, const Point& b) {
    return a.divisors.size() < b.divisors.size();
  });

  for (int d = 2; 2 * d <= n; ++d) {
    std::vector<Point> points(pool.begin(), pool.begin() + d + 1);
    IntPoly g = DegreeSearch(f, d, std::move(points)).run();
    if (!g.is_zero()) return g;
  }
  return f;
}

}  // namespace

Factorization factor_kronecker(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_kronecker: zero polynomial");
  if (p.degree() > kKroneckerMaxDegree) {
    throw std::invalid_argument("factor_kronecker: degree " + std::to_string(p.degree()) +
                                " exceeds oracle bound " + std::to_string(kKroneckerMaxDegree));
  }
  const IntPoly c = canonicalize(p);
  Factorization out;
  out.content = content(c);
  IntPoly f = div_exact(c, out.content);

  std::map<std::vector<Integer>, std::pair<IntPoly, unsigned>> tally;
  while (f.degree() > 0) {
    IntPoly g = canonicalize(smallest_factor(f));
    f = div_exact(f, g);
    std::vector<Integer> key(g.coeffs().begin(), g.coeffs().end());
    auto& slot = tally[key];
    slot.first = std::move(g);
    ++slot.second;
  }
  for (auto& [key, entry] : tally) out.factors.push_back({std::move(entry.first), entry.second});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return degree_lex_less(a.poly, b.poly); });
  return out;
}

}  // namespace crosscap
