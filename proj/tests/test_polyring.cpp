#include "doctest.h"

#include "support.hpp"
#include "weyl/errors.hpp"
#include "weyl/linalg.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

// Product by expanding every pair of terms, without touching operator*.
Polynomial naive_product(const Polynomial& f, const Polynomial& g) {
  Polynomial out(f.ring());
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : g.terms()) out.add_term(a + b, c * d);
  return out;
}

}  // namespace

TEST_CASE("ring construction") {
  CHECK_THROWS_AS(PolyRing(FieldSpec(), 0), DomainError);
  CHECK_THROWS_AS(PolyRing(FieldSpec(), std::vector<std::string>{"s", "s"}), DomainError);
  const PolyRing r(FieldSpec(), 2);
  CHECK(r.var_names() == std::vector<std::string>{"x1", "x2"});
  CHECK(r == PolyRing(FieldSpec(), 2));
  CHECK_FALSE(r == PolyRing(FieldSpec(3), 2));
  CHECK_THROWS_AS(Polynomial::variable(r, 0) + Polynomial::variable(PolyRing(FieldSpec(), 3), 0), DomainError);
}

TEST_CASE("polynomial arithmetic examples") {
  const PolyRing r2(FieldSpec(2), std::vector<std::string>{"x", "y"});
  const Polynomial x = Polynomial::variable(r2, 0);
  const Polynomial y = Polynomial::variable(r2, 1);
  CHECK((x + y).pow(2) == x * x + y * y);

  const PolyRing q(FieldSpec(), std::vector<std::string>{"x", "y"});
  const Polynomial qx = Polynomial::variable(q, 0);
  const Polynomial one = Polynomial::constant(q, 1);
  CHECK((qx + one) * (qx - one) == qx * qx - one);
  CHECK(qx * one == qx);
  CHECK((qx - qx).is_zero());
  CHECK((qx - qx).total_degree() == -1);
  CHECK(qx.pow(0) == one);
}

TEST_CASE("no stored zeros") {
  const PolyRing r(FieldSpec(3), 1);
  Polynomial f(r);
  f.add_term({2}, r.scalar(1));
  f.add_term({2}, r.scalar(2));
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
  CHECK((r.scalar(3) * Polynomial::variable(r, 0)).is_zero());
}

TEST_CASE("arithmetic matches the naive oracle") {
  Rng rng(5);
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL}) {
    const PolyRing r(FieldSpec(p), 3);
    for (int trial = 0; trial < 100; ++trial) {
      const Polynomial f = random_poly(r, rng, 4, 5);
      const Polynomial g = random_poly(r, rng, 4, 5);
      const Polynomial h = random_poly(r, rng, 4, 5);
      REQUIRE(f * g == naive_product(f, g));
      REQUIRE(f * (g + h) == f * g + f * h);
      REQUIRE((f * g) * h == f * (g * h));
      REQUIRE(f.pow(3) == naive_product(naive_product(f, f), f));
    }
  }
}

TEST_CASE("ring map examples") {
  const PolyRing r(FieldSpec(), std::vector<std::string>{"x", "y"});
  const Polynomial x = Polynomial::variable(r, 0);
  const Polynomial y = Polynomial::variable(r, 1);
  const Polynomial f = x * y * y;
  CHECK(apply_ring_map(RingMap::identity(r), f) == f);
  CHECK(apply_ring_map(RingMap(r, {-x, y}), x * x) == x * x);
  CHECK(apply_ring_map(RingMap(r, {y, x}), f) == x * x * y);
  CHECK_THROWS_AS(RingMap(r, {x}), DomainError);
}

TEST_CASE("linear ring maps and certified inverses") {
  const FieldSpec q;
  const PolyRing r(q, 2);
  const Matrix m = Matrix::from_rows(q, {{FieldElem(q, 1L), FieldElem(q, 2L)}, {FieldElem(q, 0L), FieldElem(q, 1L)}});
  const RingMap a = RingMap::linear(r, m);
  // column 1 of m is the image of x2
  CHECK(a.images()[1] == r.scalar(2) * Polynomial::variable(r, 0) + Polynomial::variable(r, 1));
  CHECK(a.is_linear());
  CHECK_FALSE(RingMap(r, {Polynomial::variable(r, 0).pow(2), Polynomial::variable(r, 1)}).is_linear());
  CHECK_THROWS_AS(a.inverse(), DomainError);
  CHECK_THROWS_AS(a.with_inverse(a), DomainError);
  const RingMap b = a.with_inverse(RingMap::linear(r, inverse(m)));
  CHECK(compose(b, b.inverse()) == RingMap::identity(r));
  CHECK(b.inverse().inverse() == b);
}

TEST_CASE("ring map composition is substitution composition") {
  Rng rng(17);
  for (std::uint64_t p : {0ULL, 3ULL}) {
    const PolyRing r(FieldSpec(p), 2);
    for (int trial = 0; trial < 100; ++trial) {
      const RingMap a(r, {random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)});
      const RingMap b(r, {random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)});
      const Polynomial f = random_poly(r, rng, 3, 3);
      const Polynomial g = random_poly(r, rng, 3, 3);
      REQUIRE(apply_ring_map(compose(a, b), f) == apply_ring_map(a, apply_ring_map(b, f)));
      REQUIRE(apply_ring_map(a, f * g) == apply_ring_map(a, f) * apply_ring_map(a, g));
      REQUIRE(apply_ring_map(a, f + g) == apply_ring_map(a, f) + apply_ring_map(a, g));
    }
  }
}

TEST_CASE("frobenius decomposition examples") {
  const PolyRing r2(FieldSpec(2), 1);
  const Polynomial x = Polynomial::variable(r2, 0);
  const auto d = frobenius_decompose(x.pow(3), 1);
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == MultiExp{1});
  CHECK(d.begin()->second == x);
  const auto one = frobenius_decompose(Polynomial::constant(r2, 1), 1);
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->first == MultiExp{0});
  CHECK(one.begin()->second.is_constant());

  const PolyRing r3(FieldSpec(3), std::vector<std::string>{"x", "y"});
  const Polynomial X = Polynomial::variable(r3, 0);
  const Polynomial Y = Polynomial::variable(r3, 1);
  const auto d3 = frobenius_decompose(X * X * Y + Y.pow(3), 1);
  REQUIRE(d3.size() == 2);
  CHECK(d3.at(MultiExp{2, 1}) == Polynomial::constant(r3, 1));
  CHECK(d3.at(MultiExp{0, 0}) == Y);

  CHECK_THROWS_AS(frobenius_decompose(Polynomial::variable(PolyRing(FieldSpec(), 1), 0), 1), DomainError);
  CHECK(frobenius_modulus(FieldSpec(3), 2) == 9);
}

TEST_CASE("frobenius round trip") {
  Rng rng(23);
  int cases = 0;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    for (unsigned e : {1U, 2U})
      for (std::size_t n : {1U, 2U}) {
        const PolyRing r(FieldSpec(p), n);
        for (int trial = 0; trial < 42; ++trial, ++cases) {
          const Polynomial f = random_poly(r, rng, 30, 6);
          Polynomial back(r);
          const std::uint64_t q = frobenius_modulus(r.spec(), e);
          for (const auto& [lambda, g] : frobenius_decompose(f, e)) {
            for (std::size_t i = 0; i < n; ++i) REQUIRE(lambda[i] < q);
            REQUIRE_FALSE(g.is_zero());
            REQUIRE(frobenius_power(g, e) == g.pow(q));
            back += g.pow(q) * Polynomial::monomial(r, lambda);
          }
          REQUIRE(back == f);
        }
      }
  CHECK(cases >= 500);
}
