#pragma once

// Seeded generators and small independent oracles shared by the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "weyl/diffop.hpp"
#include "weyl/linalg.hpp"

namespace weyl::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline FieldElem random_scalar(const FieldSpec& spec, Rng& rng, bool nonzero = false) {
  while (true) {
    FieldElem c = spec.is_rational() ? FieldElem(spec, mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 3)))
                                     : FieldElem(spec, uniform(rng, 0, 1000));
    if (!nonzero || !c.is_zero()) return c;
  }
}

inline MultiExp random_exponent(std::size_t n, std::uint32_t max_total, Rng& rng) {
  MultiExp e(n);
  const auto budget = static_cast<std::uint32_t>(uniform(rng, 0, max_total));
  for (std::uint32_t k = 0; k < budget; ++k) e[static_cast<std::size_t>(uniform(rng, 0, long(n) - 1))] += 1;
  return e;
}

inline Polynomial random_poly(const PolyRing& ring, Rng& rng, std::uint32_t max_degree, int max_terms) {
  Polynomial f(ring);
  const long terms = uniform(rng, 0, max_terms);
  for (long t = 0; t < terms; ++t) f.add_term(random_exponent(ring.nvars(), max_degree, rng), random_scalar(ring.spec(), rng));
  return f;
}

/// Random operator, almost always nonzero; `max_order` bounds |alpha| of the symbols used.
inline DiffOp random_op(const PolyRing& ring, Rng& rng, std::uint32_t max_order, std::uint32_t max_degree = 3,
                        int max_terms = 3) {
  DiffOp xi(ring);
  const long terms = uniform(rng, 1, max_terms);
  for (long t = 0; t < terms; ++t) {
    Polynomial c = random_poly(ring, rng, max_degree, 2);
    c.add_term(random_exponent(ring.nvars(), max_degree, rng), random_scalar(ring.spec(), rng, true));
    xi.add_term(random_exponent(ring.nvars(), max_order, rng), c);
  }
  return xi;
}

/// Operator with order exactly n (nonzero leading symbol of total degree n).
inline DiffOp random_op_of_order(const PolyRing& ring, Rng& rng, std::uint32_t n) {
  while (true) {
    DiffOp xi = random_op(ring, rng, n == 0 ? 0 : n - 1);
    MultiExp lead(ring.nvars());
    for (std::uint32_t k = 0; k < n; ++k) lead[static_cast<std::size_t>(uniform(rng, 0, long(ring.nvars()) - 1))] += 1;
    Polynomial c = random_poly(ring, rng, 2, 2);
    c.add_term(MultiExp(ring.nvars()), random_scalar(ring.spec(), rng, true));
    xi.add_term(lead, c);
    if (order(xi) == long(n)) return xi;
  }
}

/// Operator whose symbols satisfy alpha_i < p^e.
inline DiffOp random_op_of_level(const PolyRing& ring, Rng& rng, unsigned e, int max_terms = 3) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) q *= ring.spec().characteristic();
  DiffOp xi(ring);
  const long terms = uniform(rng, 1, max_terms);
  for (long t = 0; t < terms; ++t) {
    MultiExp a(ring.nvars());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::uint32_t>(uniform(rng, 0, long(q) - 1));
    Polynomial c = random_poly(ring, rng, 3, 2);
    c.add_term(random_exponent(ring.nvars(), 3, rng), random_scalar(ring.spec(), rng, true));
    xi.add_term(a, c);
  }
  return xi;
}

/// Pascal's triangle, independent of the library's binomials.
inline mpz_class pascal(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::vector<mpz_class> row{1};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(i + 1, 0);
    next[0] = next[i] = 1;
    for (std::uint64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// d^[alpha](x^beta) computed term by term from Pascal's triangle.
inline Polynomial divided_power_oracle(const PolyRing& ring, const MultiExp& alpha, const MultiExp& beta) {
  mpz_class c = 1;
  MultiExp rest(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (alpha[i] > beta[i]) return Polynomial(ring);
    c *= pascal(beta[i], alpha[i]);
    rest[i] = beta[i] - alpha[i];
  }
  return Polynomial::monomial(ring, rest, FieldElem(ring.spec(), c));
}

/// Applies xi to f one monomial at a time through the oracle above.
inline Polynomial apply_oracle(const DiffOp& xi, const Polynomial& f) {
  Polynomial out(f.ring());
  for (const auto& [alpha, coef] : xi.terms()) {
    for (const auto& [beta, c] : f.terms()) out += coef * (c * divided_power_oracle(f.ring(), alpha, beta));
  }
  return out;
}

}  // namespace weyl::testing
