// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/pretzel.hpp"

#include <stdexcept>
#include <string>

namespace crosscap {

PretzelParams::PretzelParams(std::int64_t p, std::int64_t q, std::int64_t r) : p_(p), q_(q), r_(r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0) {
    throw std::invalid_argument("PretzelParams: parameters must be odd, got (" + std::to_string(p) +
                                ", " + std::to_string(q) + ", " + std::to_string(r) + ")");
  }
}

Integer pretzel_d(const PretzelParams& params) {
  const Integer p(static_cast<long>(params.p()));
  const Integer q(static_cast<long>(params.q()));
  const Integer r(static_cast<long>(params.r()));
  Integer d = p * q + q * r + r * p;
  Integer m;
  mpz_fdiv_r_ui(m.get_mpz_t(), d.get_mpz_t(), 4);
  if (m != 3) throw std::logic_error("pretzel_d: D is not 3 mod 4");
  return d;
}

PretzelAlexander pretzel_alexander(const PretzelParams& params) {
  const Integer d = pretzel_d(params);
  const Integer outer = (d + 1) / 4;
  const Integer middle = -(d - 1) / 2;
  PretzelAlexander out;
  out.degenerate = d == -1;
  out.poly = canonicalize(IntPoly(std::vector<Integer>{outer, middle, outer}));
  return out;
}

SeifertMatrix pretzel_seifert(const PretzelParams& params) {
  const long p = static_cast<long>(params.p());
  const long q = static_cast<long>(params.q());
  const long r = static_cast<long>(params.r());
  SeifertMatrix v(IntMatrix{{(p + q) / 2, (q - 1) / 2}, {(q + 1) / 2, (q + r) / 2}});
  if (alexander_from_seifert(v) != pretzel_alexander(params).poly) {
    throw std::logic_error("pretzel_seifert: Seifert matrix does not reproduce the Alexander polynomial");
  }
  return v;
}

long pretzel_signature(const PretzelParams& params) {
  const long p = static_cast<long>(params.p());
  const long q = static_cast<long>(params.q());
  const long r = static_cast<long>(params.r());
  return exact_symmetric_signature(IntMatrix{{p + q, q}, {q, q + r}});
}

Verdict pretzel_corollary_check(const PretzelParams& params) {
  const Integer d = pretzel_d(params);
  const long sigma = pretzel_signature(params);
  Verdict v;
  v.q = (sigma < 0 ? -sigma : sigma) + 1;
  const PretzelAlexander alex = pretzel_alexander(params);
  if (alex.degenerate) {
    v.status = Status::kInvalid;
    v.reasons.emplace_back(ValidationFailure{
        ValidationKind::kDegeneratePretzel,
        "D = -1: the Alexander polynomial is trivial and the quadratic formula does not apply"});
    return v;
  }
  v.classified = classify_factors(factor_rational(alex.poly), default_half_index_bound(sigma));

  const Integer minus_d = -d;
  const bool square = sgn(minus_d) >= 0 && mpz_perfect_square_p(minus_d.get_mpz_t()) != 0;
  const bool allowed = (sigma == 0 && square) || ((sigma == 2 || sigma == -2) && d == 3);
  if (!allowed) v.reasons.emplace_back(CorollaryViolation{d, sigma});
  v.status = allowed ? Status::kNotObstructed : Status::kObstructed;
  return v;
}

}  // namespace crosscap
