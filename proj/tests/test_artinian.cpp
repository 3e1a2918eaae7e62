#include "doctest.h"

#include "support.hpp"
#include "filtration_oracle.hpp"
#include "weyl/artinian.hpp"
#include "weyl/errors.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

EndOperator random_end(const ArtinianAlgebra& a, Rng& rng) {
  Matrix m(a.spec(), a.dimension(), a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) m(i, j) = random_scalar(a.spec(), rng);
  return {m};
}

std::vector<FieldElem> random_element(const ArtinianAlgebra& a, Rng& rng) {
  std::vector<FieldElem> v;
  for (std::size_t i = 0; i < a.dimension(); ++i) v.push_back(random_scalar(a.spec(), rng));
  return v;
}

}  // namespace

TEST_CASE("algebra structure") {
  const ArtinianAlgebra a(FieldSpec(), {2, 3});
  CHECK(a.dimension() == 6);
  CHECK(a.socle() == MultiExp{1, 2});
  CHECK(a.basis()[1] == MultiExp{0, 1});
  CHECK(a.pairing_is_permutation());
  const auto x = a.basis_vector(a.index_of({1, 0}));
  const auto xx = a.multiply(x, x);
  for (const auto& c : xx) CHECK(c.is_zero());
  CHECK(a.socle_functional(a.basis_vector(a.index_of({1, 2}))).is_one());
  CHECK_THROWS_AS(ArtinianAlgebra(FieldSpec(), {2, 0}), DomainError);
  CHECK_THROWS_AS(ArtinianAlgebra(FieldSpec(), {2}, std::vector<FieldElem>{FieldElem(), FieldElem(FieldSpec(), 1L)}),
                  DomainError);
}

TEST_CASE("filtration examples") {
  const ArtinianAlgebra a(FieldSpec(), {2});
  const OrderFiltration f = order_filtration(a);
  CHECK(f.dimensions() == std::vector<std::size_t>{2, 3, 4, 4});
  REQUIRE(f.stabilized_at.has_value());
  CHECK(*f.stabilized_at == 3);
  CHECK(brute_force_dimensions(a, 3) == f.dimensions());

  const OrderFiltration k = order_filtration(ArtinianAlgebra(FieldSpec(), {1}));
  for (auto d : k.dimensions()) CHECK(d == 1);

  const ArtinianAlgebra c(FieldSpec(), {3});
  CHECK(order_filtration(c).dimensions().front() == 3);
  CHECK(order_filtration(c, 1).levels.size() == 2);
}

TEST_CASE("generators suffice for the filtration") {
  for (const auto& exps : std::vector<MultiExp>{{3}, {2, 2}, {1, 3}}) {
    for (std::uint64_t p : {0ULL, 2ULL}) {
      const ArtinianAlgebra a{FieldSpec(p), exps};
      const OrderFiltration f = order_filtration(a);
      REQUIRE(brute_force_dimensions(a, static_cast<unsigned>(f.levels.size() - 1)) == f.dimensions());
    }
  }
}

TEST_CASE("bracket is a derivation in the multiplier") {
  Rng rng(73);
  const ArtinianAlgebra a(FieldSpec(), {2, 3});
  for (int trial = 0; trial < 30; ++trial) {
    const EndOperator xi = random_end(a, rng);
    const auto f = random_element(a, rng);
    const auto g = random_element(a, rng);
    const EndOperator mf = multiplication_operator(a, f);
    const EndOperator mg = multiplication_operator(a, g);
    const EndOperator lhs = commutator(xi, multiplication_operator(a, a.multiply(f, g)));
    const EndOperator rhs{compose(commutator(xi, mf), mg).matrix + compose(mf, commutator(xi, mg)).matrix};
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("socle adjoint of d on Q[x]/(x^3)") {
  const ArtinianAlgebra a(FieldSpec(), {3});
  const EndOperator d = from_diffop(a, DiffOp::partial(PolyRing(FieldSpec(), 1), 0));
  const EndOperator phi = socle_adjoint(a, d);
  // sigma(phi(x^i) x^j) = sigma(x^i d(x^j)) for all i, j
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto fi = a.basis_vector(i);
      const auto fj = a.basis_vector(j);
      REQUIRE(a.socle_functional(a.multiply(apply(phi, fi), fj)) == a.socle_functional(a.multiply(fi, apply(d, fj))));
    }
  Matrix expected(a.spec(), 3, 3);
  expected(0, 1) = FieldElem(a.spec(), 2L);
  expected(1, 2) = FieldElem(a.spec(), 1L);
  CHECK(phi.matrix == expected);
  const EndOperator mx = multiplication_by_monomial(a, {1});
  CHECK(socle_adjoint(a, mx) == mx);
}

TEST_CASE("socle adjoint is an involutive anti-automorphism fixing R") {
  Rng rng(79);
  for (const auto& exps : std::vector<MultiExp>{{4}, {2, 3}}) {
    for (std::uint64_t p : {0ULL, 2ULL}) {
      const ArtinianAlgebra a{FieldSpec(p), exps};
      for (int trial = 0; trial < 20; ++trial) {
        const EndOperator s = random_end(a, rng);
        const EndOperator t = random_end(a, rng);
        REQUIRE(socle_adjoint(a, socle_adjoint(a, s)) == s);
        REQUIRE(socle_adjoint(a, compose(s, t)) == compose(socle_adjoint(a, t), socle_adjoint(a, s)));
        const EndOperator mf = multiplication_operator(a, random_element(a, rng));
        REQUIRE(socle_adjoint(a, mf) == mf);
      }
    }
  }
}

TEST_CASE("rescaled socle functional") {
  Rng rng(83);
  const FieldSpec q;
  std::vector<FieldElem> u{FieldElem(q, 2L), FieldElem(q, 1L), FieldElem(q, 0L), FieldElem(q, 5L)};
  const ArtinianAlgebra a(q, {4}, u);
  CHECK_FALSE(a.pairing_is_permutation());
  for (int trial = 0; trial < 20; ++trial) {
    const EndOperator s = random_end(a, rng);
    const EndOperator t = random_end(a, rng);
    REQUIRE(socle_adjoint(a, socle_adjoint(a, s)) == s);
    REQUIRE(socle_adjoint(a, compose(s, t)) == compose(socle_adjoint(a, t), socle_adjoint(a, s)));
  }
}

TEST_CASE("order preservation") {
  const ArtinianAlgebra a(FieldSpec(), {4});
  const OrderFiltration f = order_filtration(a);
  CHECK(verify_order_preservation(a, f, identity_operator(a), 0));
  const PolyRing r(FieldSpec(), 1);
  const DiffOp xd = DiffOp::multiplication(Polynomial::variable(r, 0)) * DiffOp::partial(r, 0);
  CHECK(verify_order_preservation(a, f, from_diffop(a, xd), 1));
  CHECK_THROWS_AS(verify_order_preservation(a, f, from_diffop(a, DiffOp::partial(r, 0)), 0), DomainError);

  Rng rng(89);
  const ArtinianAlgebra b(FieldSpec(), {2, 2});
  const OrderFiltration fb = order_filtration(b);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FieldElem> c;
    for (std::size_t j = 0; j < fb.levels[2].cols(); ++j) c.push_back(random_scalar(b.spec(), rng));
    std::vector<FieldElem> v(b.dimension() * b.dimension(), FieldElem(b.spec()));
    for (std::size_t j = 0; j < c.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * fb.levels[2](i, j);
    REQUIRE(verify_order_preservation(b, fb, unvectorize(b, v), 2));
  }
}

TEST_CASE("graded sign and check-on-one on graded pieces") {
  for (const auto& exps : std::vector<MultiExp>{{4}, {2, 3}}) {
    const ArtinianAlgebra a(FieldSpec(), exps);
    const OrderFiltration f = order_filtration(a);
    const auto one = a.basis_vector(0);
    for (std::size_t n = 0; n < f.levels.size(); ++n) {
      for (const auto& xi : graded_piece_basis(a, f, n)) {
        REQUIRE(f.order_of(xi) == long(n));
        const EndOperator phi = socle_adjoint(a, xi);
        const Matrix diff = n % 2 == 0 ? phi.matrix - xi.matrix : phi.matrix + xi.matrix;
        if (n > 0) REQUIRE(f.contains(n - 1, {diff}));
        else REQUIRE(diff.is_zero());
        const EndOperator twice = socle_adjoint(a, phi);
        REQUIRE(apply(twice, one) == apply(xi, one));
        REQUIRE(twice == xi);
      }
    }
  }
}

TEST_CASE("filtration is multiplicative") {
  const ArtinianAlgebra a(FieldSpec(), {2, 3});
  const OrderFiltration f = order_filtration(a);
  const std::size_t top = f.levels.size() - 1;
  for (std::size_t n = 0; n <= top; ++n)
    for (std::size_t m = 0; n + m <= top; ++m)
      for (const auto& s : graded_piece_basis(a, f, n))
        for (const auto& t : graded_piece_basis(a, f, m)) REQUIRE(f.contains(n + m, compose(s, t)));
}

TEST_CASE("vectorize round trip") {
  Rng rng(97);
  const ArtinianAlgebra a(FieldSpec(3), {3, 2});
  const EndOperator s = random_end(a, rng);
  CHECK(unvectorize(a, vectorize(s)) == s);
}
