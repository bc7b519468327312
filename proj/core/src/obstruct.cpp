// Copyright 2026 The crosscap Authors
// SPDX-License-Identifier: Apache-2.0

#include "crosscap/obstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "crosscap/cyclo.hpp"

namespace crosscap {

std::string_view to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::kZeroPolynomial: return "zero_polynomial";
    case ValidationKind::kOddSignature: return "odd_signature";
    case ValidationKind::kAsymmetric: return "asymmetric";
    case ValidationKind::kValueAtOneNotUnit: return "value_at_one_not_unit";
    case ValidationKind::kValueAtMinusOneEven: return "value_at_minus_one_even";
    case ValidationKind::kDegeneratePretzel: return "degenerate_pretzel";
  }
  return "unknown";
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kObstructed: return "obstructed";
    case Status::kNotObstructed: return "not_obstructed";
    case Status::kInvalid: return "invalid";
  }
  return "unknown";
}

std::string_view to_string(DegreeTwoClass c) {
  switch (c) {
    case DegreeTwoClass::kPossibleReducibleSigmaZero: return "possible_reducible_sigma_zero";
    case DegreeTwoClass::kPossibleTrefoilPolynomial: return "possible_trefoil_polynomial";
    case DegreeTwoClass::kExcluded: return "excluded";
  }
  return "unknown";
}

std::string Verdict::describe() const {
  switch (status) {
    case Status::kObstructed:
      return "obstructed: concordance crosscap number is at least 2";
    case Status::kNotObstructed:
      return "not obstructed: no conclusion (the criterion is necessary, not sufficient)";
    case Status::kInvalid:
      return "invalid: inputs fail validation, no verdict";
  }
  return {};
}

std::int64_t default_half_index_bound(std::int64_t signature) {
  static const std::int64_t override_bound = [] {
    if (const char* env = std::getenv("CROSSCAP_HALF_INDEX_BOUND")) {
      try {
        return static_cast<std::int64_t>(std::stoll(env));
      } catch (const std::exception&) {
      }
    }
    return std::int64_t{0};
  }();
  const std::int64_t q = (signature < 0 ? -signature : signature) + 1;
  return std::max(q + 3, override_bound);
}

std::vector<ValidationFailure> validate(const KnotInput& k) {
  std::vector<ValidationFailure> out;
  if (k.signature % 2 != 0) {
    out.push_back({ValidationKind::kOddSignature, "signature " + std::to_string(k.signature) + " is odd"});
  }
  if (k.alexander.is_zero()) {
    out.push_back({ValidationKind::kZeroPolynomial, "Alexander polynomial is zero"});
    return out;
  }
  if (!is_symmetric(k.alexander)) {
    out.push_back({ValidationKind::kAsymmetric, "Alexander polynomial is not symmetric"});
  }
  const Integer at_one = eval(k.alexander, Integer{1});
  if (abs(at_one) != 1) {
    out.push_back({ValidationKind::kValueAtOneNotUnit, "Delta(1) = " + at_one.get_str()});
  }
  const Integer at_minus_one = eval(k.alexander, Integer{-1});
  if (mpz_even_p(at_minus_one.get_mpz_t())) {
    out.push_back({ValidationKind::kValueAtMinusOneEven, "Delta(-1) = " + at_minus_one.get_str()});
  }
  return out;
}

Verdict check_gamma_c_one(const KnotInput& k) {
  Verdict v;
  v.q = (k.signature < 0 ? -k.signature : k.signature) + 1;
  if (auto failures = validate(k); !failures.empty()) {
    v.status = Status::kInvalid;
    for (auto& f : failures) v.reasons.emplace_back(std::move(f));
    return v;
  }

  const Factorization fac = factor_rational(k.alexander);
  v.classified = classify_factors(fac, default_half_index_bound(k.signature));

  const std::vector<std::int64_t> required = odd_prime_power_divisors(v.q);
  for (std::int64_t p : required) {
    unsigned exponent = 0;
    for (const auto& cf : v.classified) {
      if (cf.cyclotomic_half_index == p) exponent = cf.multiplicity;
    }
    if (exponent % 2 == 0) v.reasons.emplace_back(MissingCyclotomic{p, exponent});
  }
  for (const auto& cf : v.classified) {
    if (!cf.symmetric || cf.multiplicity % 2 == 0 || abs(cf.value_at_minus_one) == 1) continue;
    if (cf.cyclotomic_half_index &&
        std::find(required.begin(), required.end(), *cf.cyclotomic_half_index) != required.end()) {
      continue;
    }
    v.reasons.emplace_back(BadSymmetricFactor{cf.poly, cf.multiplicity, cf.value_at_minus_one});
  }
  v.status = v.reasons.empty() ? Status::kNotObstructed : Status::kObstructed;
  return v;
}

DegreeTwoClass classify_degree_two(const KnotInput& k) {
  if (!validate(k).empty()) throw std::invalid_argument("classify_degree_two: invalid knot input");
  const IntPoly a = canonicalize(k.alexander);
  if (a.degree() != 2) {
    throw std::invalid_argument("classify_degree_two: Alexander polynomial has degree " +
                                std::to_string(a.degree()));
  }
  const Factorization f = factor_rational(a);
  const bool reducible = f.factors.size() != 1 || f.factors.front().multiplicity != 1;
  if (k.signature == 0 && reducible) return DegreeTwoClass::kPossibleReducibleSigmaZero;
  if ((k.signature == 2 || k.signature == -2) && a == IntPoly{1, -1, 1}) {
    return DegreeTwoClass::kPossibleTrefoilPolynomial;
  }
  return DegreeTwoClass::kExcluded;
}

KnotInput cable_alexander(const IntPoly& delta_j, std::int64_t q) {
  if (delta_j.is_zero() || !is_symmetric(delta_j) || abs(eval(delta_j, Integer{1})) != 1) {
    throw std::invalid_argument("cable_alexander: companion polynomial is not an Alexander polynomial");
  }
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("cable_alexander: q must be odd and positive");
  KnotInput k;
  k.name = "cable(2," + std::to_string(q) + ")";
  k.alexander = canonicalize(torus_poly(q) * compose_power(delta_j, 2));
  k.signature = -(q - 1);
  return k;
}

KnotInput slice_product(const IntPoly& g) {
  if (g.is_zero() || abs(eval(g, Integer{1})) != 1) {
    throw std::invalid_argument("slice_product: g(1) must be +-1");
  }
  KnotInput k;
  k.name = "slice";
  k.alexander = canonicalize(g * reverse_coeffs(g));
  k.signature = 0;
  return k;
}

}  // namespace crosscap
