#include "doctest.h"

#include "support.hpp"
#include "weyl/errors.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

mpz_class factorial(std::uint64_t n) {
  mpz_class f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// alpha! / (beta! (alpha - beta)!) straight from factorials.
mpz_class factorial_multinomial(const MultiExp& alpha, const MultiExp& beta) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    num *= factorial(alpha[i]);
    den *= factorial(beta[i]) * factorial(alpha[i] - beta[i]);
  }
  return num / den;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(FieldSpec(0).is_rational());
  CHECK(FieldSpec(7).characteristic() == 7);
  CHECK_THROWS_AS(FieldSpec(1), DomainError);
  CHECK_THROWS_AS(FieldSpec(9), DomainError);
  CHECK_THROWS_AS(FieldSpec(4294967311ULL), DomainError);
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));
}

TEST_CASE("rationals stay in lowest terms") {
  const FieldSpec q;
  const FieldElem a(q, mpq_class(6, -4));
  CHECK(a.to_string() == "-3/2");
  CHECK(a.rational().get_den() == 2);
  CHECK(FieldElem::parse(q, "-12/8") == a);
  CHECK(FieldElem::parse(q, "7").to_string() == "7");
  CHECK_THROWS(FieldElem::parse(q, "1/0"));
  CHECK_THROWS(FieldElem::parse(q, "x"));
}

TEST_CASE("prime field residues") {
  const FieldSpec f5(5);
  CHECK(FieldElem(f5, -1L).residue() == 4);
  CHECK(FieldElem(f5, mpq_class(1, 2)).to_string() == "3");
  CHECK_THROWS_AS(FieldElem(f5, mpq_class(1, 5)), DomainError);
  CHECK(FieldElem(f5, 3L).inverse() == FieldElem(f5, 2L));
  CHECK_THROWS_AS(FieldElem(f5).inverse(), DomainError);
  CHECK(FieldElem(f5, 2L).pow(4).is_one());
  CHECK_THROWS(FieldElem(f5, 1L) + FieldElem(FieldSpec(3), 1L));
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL, 101ULL}) {
    const FieldSpec k(p);
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElem a = random_scalar(k, rng);
      const FieldElem b = random_scalar(k, rng);
      const FieldElem c = random_scalar(k, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
      if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
      if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("multinomial examples") {
  const FieldSpec q;
  CHECK(multinomial({2, 1}, {1, 0}, q) == FieldElem(q, 2L));
  CHECK(multinomial({3}, {0}, FieldSpec(7)).is_one());
  CHECK(multinomial({3}, {2}, FieldSpec(2)).is_one());
  CHECK(multinomial({4}, {2}, FieldSpec(2)).is_zero());
  CHECK_THROWS_AS(multinomial({1, 0}, {0, 1}, q), DomainError);
  CHECK_THROWS_AS(multinomial({1, 0}, {0}, q), DomainError);
}

TEST_CASE("multinomial agrees with factorials, symmetry and the 2^|alpha| sum") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiExp alpha = random_exponent(3, 12, rng);
    mpz_class total = 0;
    for_each_below(alpha, [&](const MultiExp& beta) {
      const mpz_class m = multinomial_integer(alpha, beta);
      REQUIRE(m == factorial_multinomial(alpha, beta));
      REQUIRE(m == multinomial_integer(alpha, alpha - beta));
      total += m;
    });
    mpz_class two_power = 1;
    two_power <<= alpha.total();
    REQUIRE(total == two_power);
  }
}

TEST_CASE("large exponents do not overflow") {
  const MultiExp alpha{40, 40};
  const MultiExp beta{20, 20};
  CHECK(multinomial_integer(alpha, beta) == factorial_multinomial(alpha, beta));
  CHECK(multinomial_integer({64}, {32}) == pascal(64, 32));
}

TEST_CASE("alternating multinomial sum examples") {
  CHECK(alternating_multinomial_sum({1, 1}) == 0);
  CHECK(alternating_multinomial_sum({0, 0}) == 1);
  CHECK(alternating_multinomial_sum({3, 2}) == 0);
}

TEST_CASE("multi-exponent arithmetic") {
  const MultiExp a{2, 1};
  const MultiExp b{1, 1};
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a - b == MultiExp{1, 0});
  CHECK_THROWS_AS(b - a, DomainError);
  CHECK_THROWS_AS(a.divides(MultiExp{1}), DomainError);
  CHECK_THROWS_AS(a + MultiExp{1}, DomainError);
  CHECK(a.scaled(3) == MultiExp{6, 3});
  CHECK(MultiExp::unit(3, 1) == MultiExp{0, 1, 0});

  std::vector<MultiExp> seen;
  for_each_below(a, [&](const MultiExp& beta) { seen.push_back(beta); });
  CHECK(seen == std::vector<MultiExp>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});

  const auto mons = monomials_up_to(2, 2);
  CHECK(mons.size() == 6);
  CHECK(mons.front() == MultiExp{0, 0});
  for (std::size_t i = 1; i < mons.size(); ++i) CHECK(mons[i - 1].total() <= mons[i].total());
}
