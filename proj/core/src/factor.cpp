// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "crosscap/cyclo.hpp"
#include "modp.hpp"

namespace crosscap {

using detail::Zp;
using detail::ZpPoly;

unsigned Factorization::multiplicity_of(const IntPoly& poly) const {
  for (const auto& f : factors) {
    if (f.poly == poly) return f.multiplicity;
  }
  return 0;
}

IntPoly Factorization::expand() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& f : factors) out = out * pow(f.poly, f.multiplicity);
  return out;
}

std::vector<FactorPower> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  const IntPoly a = primitive_part(canonicalize(p));
  std::vector<FactorPower> out;
  if (a.degree() < 1) return out;

  const IntPoly da = derivative(a);
  const IntPoly c = gcd(a, da);
  IntPoly w = div_exact(a, c);
  IntPoly y = div_exact(da, c);
  IntPoly z = y - derivative(w);
  for (unsigned i = 1; w.degree() > 0; ++i) {
    const IntPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({canonicalize(g), i});
    w = div_exact(w, g);
    y = div_exact(z, g);
    z = y - derivative(w);
  }
  return out;
}

namespace {

// Coefficients reduced into [0, m).
IntPoly reduce_mod(const IntPoly& a, const Integer& m) {
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

// Coefficients reduced into (-m/2, m/2].
IntPoly symmetric_mod(const IntPoly& a, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

// a = q*h + r modulo m for monic h.
void divmod_monic(const IntPoly& a, const IntPoly& h, const Integer& m, IntPoly& q, IntPoly& r) {
  const int dh = h.degree();
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  if (a.degree() < dh) {
    q = IntPoly{};
    r = a;
    return;
  }
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - dh + 1));
  for (int k = a.degree(); k >= dh; --k) {
    Integer c = rem[static_cast<std::size_t>(k)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (sgn(c) == 0) continue;
    const auto shift = static_cast<std::size_t>(k - dh);
    for (int j = 0; j <= dh; ++j) {
      Integer& x = rem[shift + static_cast<std::size_t>(j)];
      x -= c * h.coeff(static_cast<std::size_t>(j));
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    quot[shift] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(dh));
  q = IntPoly(std::move(quot));
  r = reduce_mod(IntPoly(std::move(rem)), m);
}

IntPoly to_int(const ZpPoly& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (auto x : a) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

struct HenselPair {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) with h monic
// to the same relations modulo m^2.
void hensel_step(const IntPoly& f, HenselPair& x, const Integer& m) {
  const Integer m2 = m * m;
  const IntPoly e = reduce_mod(f - x.g * x.h, m2);
  IntPoly q, r;
  divmod_monic(reduce_mod(x.s * e, m2), x.h, m2, q, r);
  const IntPoly g = reduce_mod(x.g + x.t * e + q * x.g, m2);
  const IntPoly h = reduce_mod(x.h + r, m2);
  const IntPoly b = reduce_mod(x.s * g + x.t * h - IntPoly{1}, m2);
  IntPoly c, d;
  divmod_monic(reduce_mod(x.s * b, m2), h, m2, c, d);
  x.s = reduce_mod(x.s - d, m2);
  x.t = reduce_mod(x.t - x.t * b - c * g, m2);
  x.g = g;
  x.h = h;
}

// Lifts f = lc(f) * prod(factors) mod p to monic factors modulo `modulus`,
// which must be p^(2^j). Splits the factor list in halves and recurses.
std::vector<IntPoly> hensel_lift(const IntPoly& f, std::span<const ZpPoly> factors, const Zp& zp,
                                 const Integer& modulus) {
  if (factors.size() == 1) {
    Integer inv;
    Integer lc = f.lead();
    mpz_fdiv_r(lc.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    return {reduce_mod(inv * f, modulus)};
  }
  const std::size_t half = factors.size() / 2;
  const auto left = factors.subspan(0, half);
  const auto right = factors.subspan(half);

  ZpPoly g0{zp.reduce(IntPoly::constant(f.lead())).at(0)};
  for (const auto& u : left) g0 = zp.mul(g0, u);
  ZpPoly h0{1};
  for (const auto& u : right) h0 = zp.mul(h0, u);
  ZpPoly s0, t0;
  zp.bezout(g0, h0, s0, t0);

  HenselPair pair{to_int(g0), to_int(h0), to_int(s0), to_int(t0)};
  Integer m = static_cast<unsigned long>(zp.prime());
  while (m < modulus) {
    hensel_step(f, pair, m);
    m *= m;
  }
  auto out = hensel_lift(pair.g, left, zp, modulus);
  auto rest = hensel_lift(pair.h, right, zp, modulus);
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

// Smallest odd prime not dividing the leading coefficient that keeps f
// squarefree.
bool good_prime(const IntPoly& f, const Zp& zp) {
  if (mpz_divisible_ui_p(f.lead().get_mpz_t(), zp.prime())) return false;
  const ZpPoly fp = zp.reduce(f);
  return zp.gcd(fp, zp.derivative(fp)).size() == 1;
}

// Degrees reachable as sums of a subset of the given factor degrees.
std::vector<bool> subset_degree_sums(const std::vector<ZpPoly>& factors, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (const auto& g : factors) {
    const int d = static_cast<int>(g.size()) - 1;
    for (int s = n; s >= d; --s) {
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  return reach;
}

constexpr int kPrimeTrials = 5;

struct ModularSplit {
  Zp zp{3};
  std::vector<ZpPoly> factors;
  // allowed[d]: some subset of modular factors has degree d for every prime tried.
  std::vector<bool> allowed;
};

// Factors f modulo the first kPrimeTrials good odd primes and keeps the split
// with the fewest factors (earliest prime on ties). Degree patterns from all
// trials are intersected to prune recombination.
ModularSplit best_split(const IntPoly& f) {
  const int n = f.degree();
  ModularSplit best;
  best.allowed.assign(static_cast<std::size_t>(n) + 1, true);
  bool have = false;
  int trials = 0;
  for (std::uint64_t p = 3; trials < kPrimeTrials; p += 2) {
    if (!detail::is_prime(p)) continue;
    const Zp zp(p);
    if (!good_prime(f, zp)) continue;
    ++trials;
    std::vector<ZpPoly> factors = zp.berlekamp(zp.monic(zp.reduce(f)));
    const std::vector<bool> sums = subset_degree_sums(factors, n);
    for (std::size_t d = 0; d < sums.size(); ++d) best.allowed[d] = best.allowed[d] && sums[d];
    if (!have || factors.size() < best.factors.size()) {
      best.zp = zp;
      best.factors = std::move(factors);
      have = true;
    }
    if (best.factors.size() == 1) break;
  }
  return best;
}

// Irreducible factors of a primitive squarefree f with positive leading
// coefficient and nonzero constant term.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  const ModularSplit split = best_split(f);
  const Zp& zp = split.zp;
  const std::vector<ZpPoly>& modular = split.factors;
  if (modular.size() == 1) return {f};
  bool proper_degree = false;
  for (int d = 1; d < n; ++d) proper_degree = proper_degree || split.allowed[static_cast<std::size_t>(d)];
  if (!proper_degree) return {f};

  // Landau-Mignotte: every factor g of f satisfies
  //   |coeff(g)| <= 2^deg(g) * ||f||_2,
  // so lc(f) * g / lc(g) has coefficients bounded by
  //   B = |lc(f)| * 2^n * ceil(||f||_2).
  // Lifting until the modulus exceeds 2B makes the symmetric residue of every
  // candidate equal to the true integer polynomial.
  Integer norm_sq = 0;
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  if (norm * norm < norm_sq) norm += 1;
  Integer bound = abs(f.lead()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));

  Integer modulus = static_cast<unsigned long>(zp.prime());
  while (modulus <= 2 * bound) modulus *= modulus;

  std::vector<IntPoly> lifted = hensel_lift(f, modular, zp, modulus);

  // Recombination: subsets by increasing cardinality, trial division over Z.
  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const Integer lc = rest.lead();
    const Integer target = lc * rest.coeff(0);
    while (true) {
      int degree = 0;
      for (auto i : idx) degree += lifted[i].degree();
      // Degree pattern filter, then trailing coefficient filter, before
      // forming the full product.
      bool viable = split.allowed[static_cast<std::size_t>(degree)];
      if (viable) {
        Integer tail = lc;
        for (auto i : idx) {
          tail *= lifted[i].coeff(0);
          mpz_fdiv_r(tail.get_mpz_t(), tail.get_mpz_t(), modulus.get_mpz_t());
        }
        if (tail > modulus / 2) tail -= modulus;
        viable = sgn(tail) != 0 && mpz_divisible_p(target.get_mpz_t(), tail.get_mpz_t());
      }
      if (viable) {
        IntPoly cand = IntPoly::constant(lc);
        for (auto i : idx) cand = reduce_mod(cand * lifted[i], modulus);
        cand = primitive_part(symmetric_mod(cand, modulus));
        if (cand.degree() > 0 && divides(cand, rest)) {
          rest = div_exact(rest, cand);
          found.push_back(canonicalize(cand));
          for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
            lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(*it));
          }
          hit = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == lifted.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (rest.degree() > 0) found.push_back(canonicalize(rest));
  return found;
}

}  // namespace

Factorization factor_rational(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
  const IntPoly c = canonicalize(p);
  Factorization out;
  out.content = content(c);
  const IntPoly prim = div_exact(c, out.content);
  for (const auto& part : squarefree_decomposition(prim)) {
    for (auto& irr : zassenhaus(part.poly)) out.factors.push_back({std::move(irr), part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return degree_lex_less(a.poly, b.poly); });
  return out;
}

std::vector<ClassifiedFactor> classify_factors(const Factorization& f,
                                               std::int64_t half_index_bound) {
  std::vector<ClassifiedFactor> out;
  out.reserve(f.factors.size());
  for (const auto& fp : f.factors) {
    ClassifiedFactor cf;
    cf.poly = fp.poly;
    cf.multiplicity = fp.multiplicity;
    cf.symmetric = is_symmetric(fp.poly);
    cf.value_at_minus_one = eval(fp.poly, Integer{-1});
    if (fp.poly.lead() == 1) {
      const std::int64_t deg = fp.poly.degree();
      for (std::int64_t p = 3; p <= half_index_bound; p += 2) {
        if (euler_totient(p) != deg) continue;
        if (cyclotomic(2 * p) == fp.poly) {
          cf.cyclotomic_half_index = p;
          break;
        }
      }
    }
    out.push_back(std::move(cf));
  }
  return out;
}

}  // namespace crosscap
