#include "weyl/transpose.hpp"

#include <map>

#include "weyl/errors.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

DiffOp standard_transpose(const DiffOp& xi) {
  const PolyRing& ring = xi.ring();
  DiffOp out(ring);
  for (const auto& [alpha, f] : xi.terms()) {
    const bool odd = alpha.total() % 2 == 1;
    // d^[alpha] f = sum_{beta+gamma=alpha} d^[beta](f) d^[gamma]
    for_each_below(alpha, [&](const MultiExp& beta) {
      Polynomial c = apply_divided_power(beta, f);
      if (c.is_zero()) return;
      out.add_term(alpha - beta, odd ? -c : c);
    });
  }
  return out;
}

void validate_twist(const PolyRing& ring, const std::vector<Polynomial>& twist) {
  if (!ring.spec().is_rational()) {
    throw DomainError("twisted transpositions exist only in characteristic 0");
  }
  if (twist.size() != ring.nvars()) throw DomainError("twist needs one polynomial per variable");
  for (std::size_t i = 0; i < twist.size(); ++i) {
    check_same_ring(ring, twist[i].ring());
    if (!twist[i].involves_only(i)) {
      throw DomainError("twist polynomial " + std::to_string(i + 1) + " involves a foreign variable");
    }
  }
}

DiffOp twisted_transpose(const std::vector<Polynomial>& twist, const DiffOp& xi) {
  const PolyRing& ring = xi.ring();
  validate_twist(ring, twist);
  const std::size_t n = ring.nvars();

  // powers[i][k] = (-d_i + f_i)^k; these commute pairwise because f_i involves x_i only.
  std::vector<std::vector<DiffOp>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(DiffOp::multiplication(Polynomial::constant(ring, 1)));
    powers[i].push_back(-DiffOp::partial(ring, i) + DiffOp::multiplication(twist[i]));
  }
  auto pw = [&](std::size_t i, std::uint32_t k) -> const DiffOp& {
    while (powers[i].size() <= k) powers[i].push_back(mul(powers[i].back(), powers[i][1]));
    return powers[i][k];
  };

  std::map<MultiExp, DiffOp> image_of_basis;
  DiffOp out(ring);
  for (const auto& [alpha, f] : xi.terms()) {
    auto it = image_of_basis.find(alpha);
    if (it == image_of_basis.end()) {
      // d^[alpha] = (1/alpha!) prod_i d_i^alpha_i
      DiffOp img = pw(0, alpha[0]);
      mpz_class fact = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) img = mul(img, pw(i, alpha[i]));
        mpz_class fi;
        mpz_fac_ui(fi.get_mpz_t(), alpha[i]);
        fact *= fi;
      }
      img *= FieldElem(ring.spec(), mpq_class(1, fact));
      it = image_of_basis.emplace(alpha, std::move(img)).first;
    }
    out += mul(it->second, DiffOp::multiplication(f));
  }
  return out;
}

AntiAutomorphism AntiAutomorphism::standard(const PolyRing& ring) {
  return AntiAutomorphism(ring, Kind::standard, {});
}

AntiAutomorphism AntiAutomorphism::twisted(const PolyRing& ring, std::vector<Polynomial> twist) {
  validate_twist(ring, twist);
  AntiAutomorphism phi(ring, Kind::twisted, std::move(twist));
  if (!satisfies_reversed_weyl_relations(phi)) {
    throw DomainError("twist does not respect the Weyl relations");
  }
  return phi;
}

DiffOp AntiAutomorphism::operator()(const DiffOp& xi) const {
  check_same_ring(ring_, xi.ring());
  return kind_ == Kind::standard ? standard_transpose(xi) : twisted_transpose(twist_, xi);
}

bool satisfies_reversed_weyl_relations(const AntiAutomorphism& phi) {
  const PolyRing& ring = phi.ring();
  const std::size_t n = ring.nvars();
  std::vector<DiffOp> y;
  std::vector<DiffOp> d;
  for (std::size_t i = 0; i < n; ++i) {
    y.push_back(phi(DiffOp::multiplication(Polynomial::variable(ring, i))));
    d.push_back(phi(DiffOp::partial(ring, i)));
  }
  const DiffOp minus_one = DiffOp::multiplication(Polynomial::constant(ring, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const DiffOp expected = i == j ? minus_one : DiffOp(ring);
      if (!(bracket(d[i], y[j]) == expected)) return false;
      if (!bracket(y[i], y[j]).is_zero()) return false;
      if (!bracket(d[i], d[j]).is_zero()) return false;
    }
  }
  return true;
}

bool check_graded_sign(const DiffOp& xi, const AntiAutomorphism& phi) {
  if (xi.is_zero()) throw DomainError("graded-sign check needs a nonzero operator");
  const long n = order(xi);
  const DiffOp diff = (n % 2 == 0) ? phi(xi) - xi : phi(xi) + xi;
  return order(diff) <= n - 1;
}

DerivationCheck derivation_formula_check(const DiffOp& theta, const AntiAutomorphism& phi) {
  const PolyRing& ring = theta.ring();
  if (order(theta) > 1 || !theta.coefficient(MultiExp(ring.nvars())).is_zero()) {
    throw DomainError("operator is not a derivation");
  }
  const DiffOp image = phi(theta);
  Polynomial at_one = apply(image, Polynomial::constant(ring, 1));
  const bool holds = image + theta == DiffOp::multiplication(at_one);
  return {holds, std::move(at_one)};
}

DiffOp transport_via_coordinates(const RingMap& m, const DiffOp& xi) {
  check_same_ring(m.ring(), xi.ring());
  if (!m.is_linear()) throw DomainError("coordinate transport needs a linear ring map");
  const RingMap inv = m.inverse();
  if (xi.is_zero()) return xi;
  const PolyRing& ring = xi.ring();
  return reconstruct_from_values(ring, static_cast<unsigned>(order(xi)), [&](const MultiExp& beta) {
    return apply_ring_map(m, apply(xi, apply_ring_map(inv, Polynomial::monomial(ring, beta))));
  });
}

RigidityReport level_one_rigidity_search(unsigned degree_bound) {
  const PolyRing ring(FieldSpec(2), std::vector<std::string>{"x"});
  const MultiExp zero(1);
  const DiffOp d = DiffOp::partial(ring, 0);
  const DiffOp x = DiffOp::multiplication(Polynomial::variable(ring, 0));

  // phi([d, x]) = [d, x] since phi fixes S, while anti-multiplicativity gives
  // phi(d x - x d) = -[a + b d, x] = -b [d, x]. So -b c = c with c = [d, x].
  const DiffOp c = bracket(d, x);
  if (!c.is_multiplication() || c.is_zero() || !c.coefficient(zero).is_constant()) {
    throw DomainError("[d, x] is not a nonzero constant");
  }
  const FieldElem cval = c.coefficient(zero).constant_term();
  const FieldElem b = -(cval / cval);

  if (!mul(d, d).is_zero()) throw DomainError("d d should vanish in characteristic 2");
  const DiffOp bd = DiffOp::multiplication(Polynomial::constant(ring, b)) * d;
  const DiffOp bd_squared = mul(bd, bd);

  // Over F_2, a -> (a + b d)^2 - (b d)^2 is additive and F_2-homogeneous, so
  // it is determined by its values on the monomials x^i.
  std::vector<DiffOp> images;
  std::map<std::pair<MultiExp, MultiExp>, std::size_t> row_of;  // (alpha, monomial) -> row
  for (unsigned i = 0; i <= degree_bound; ++i) {
    const DiffOp a = DiffOp::multiplication(Polynomial::monomial(ring, MultiExp{i}));
    const DiffOp q = mul(a + bd, a + bd) - bd_squared;
    for (const auto& [alpha, f] : q.terms())
      for (const auto& [mu, coef] : f.terms()) row_of.try_emplace({alpha, mu}, 0);
    images.push_back(q);
  }
  std::size_t next = 0;
  for (auto& [key, row] : row_of) row = next++;

  Matrix system(ring.spec(), row_of.size(), degree_bound + 1);
  for (unsigned i = 0; i <= degree_bound; ++i) {
    for (const auto& [alpha, f] : images[i].terms())
      for (const auto& [mu, coef] : f.terms()) system(row_of.at({alpha, mu}), i) = coef;
  }

  RigidityReport report{degree_bound, b, kernel(system).cols(), {}, {}};
  for (std::size_t r = 0; r < system.rows(); ++r) {
    std::vector<unsigned> support;
    for (unsigned j = 0; j <= degree_bound; ++j)
      if (!system(r, j).is_zero()) support.push_back(j);
    if (support.size() == 2) report.recursion[support[0]] = support[1];
  }
  for (unsigned i = 0; i <= degree_bound; ++i) {
    std::vector<unsigned> chain{i};
    while (report.recursion.count(chain.back())) chain.push_back(report.recursion.at(chain.back()));
    chain.push_back(2 * chain.back() + 1);
    report.chains.push_back(std::move(chain));
  }
  return report;
}

}  // namespace weyl
