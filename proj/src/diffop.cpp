#include "weyl/diffop.hpp"

#include <algorithm>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

DiffOp DiffOp::multiplication(const Polynomial& f) { return term(f, MultiExp(f.ring().nvars())); }

DiffOp DiffOp::divided_power(const PolyRing& ring, const MultiExp& alpha) {
  return term(Polynomial::constant(ring, 1), alpha);
}

DiffOp DiffOp::partial(const PolyRing& ring, std::size_t i) {
  if (i >= ring.nvars()) throw DomainError("partial index out of range");
  return divided_power(ring, MultiExp::unit(ring.nvars(), i));
}

DiffOp DiffOp::term(const Polynomial& f, const MultiExp& alpha) {
  DiffOp xi(f.ring());
  xi.add_term(alpha, f);
  return xi;
}

bool DiffOp::is_multiplication() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Polynomial DiffOp::coefficient(const MultiExp& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Polynomial(ring_) : it->second;
}

void DiffOp::add_term(const MultiExp& alpha, const Polynomial& f) {
  check_same_ring(ring_, f.ring());
  if (alpha.size() != ring_.nvars()) throw DomainError("operator exponent arity does not match the ring");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  check_same_ring(ring_, o.ring_);
  for (const auto& [a, f] : o.terms_) add_term(a, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  check_same_ring(ring_, o.ring_);
  for (const auto& [a, f] : o.terms_) add_term(a, -f);
  return *this;
}

DiffOp& DiffOp::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, f] : terms_) f *= c;
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [a, f] : r.terms_) f = -f;
  return r;
}

DiffOp operator*(const Polynomial& f, const DiffOp& xi) {
  check_same_ring(f.ring(), xi.ring());
  DiffOp r(xi.ring());
  for (const auto& [a, g] : xi.terms()) r.add_term(a, f * g);
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

Polynomial apply_divided_power(const MultiExp& alpha, const Polynomial& f) {
  Polynomial out(f.ring());
  for (const auto& [beta, c] : f.terms()) {
    if (!alpha.divides(beta)) continue;
    out.add_term(beta - alpha, c * multinomial(beta, alpha, f.ring().spec()));
  }
  return out;
}

Polynomial apply(const DiffOp& xi, const Polynomial& f) {
  check_same_ring(xi.ring(), f.ring());
  Polynomial out(f.ring());
  for (const auto& [alpha, g] : xi.terms()) {
    const Polynomial d = apply_divided_power(alpha, f);
    if (!d.is_zero()) out += g * d;
  }
  return out;
}

DiffOp mul(const DiffOp& xi, const DiffOp& eta) {
  check_same_ring(xi.ring(), eta.ring());
  const PolyRing& ring = xi.ring();
  const FieldSpec spec = ring.spec();
  DiffOp out(ring);
  // f d^[alpha] * g d^[beta] = sum_{gamma+delta=alpha} f d^[gamma](g) binom(delta+beta, delta) d^[delta+beta]
  for (const auto& [beta, g] : eta.terms()) {
    std::map<MultiExp, Polynomial> derivs;  // gamma -> d^[gamma](g)
    for (const auto& [alpha, f] : xi.terms()) {
      for_each_below(alpha, [&](const MultiExp& gamma) {
        auto it = derivs.find(gamma);
        if (it == derivs.end()) it = derivs.emplace(gamma, apply_divided_power(gamma, g)).first;
        if (it->second.is_zero()) return;
        const MultiExp delta = alpha - gamma;
        const MultiExp target = delta + beta;
        const FieldElem c = multinomial(target, delta, spec);
        if (c.is_zero()) return;
        out.add_term(target, c * (f * it->second));
      });
    }
  }
  return out;
}

DiffOp power(const DiffOp& xi, std::uint64_t k) {
  DiffOp result = DiffOp::multiplication(Polynomial::constant(xi.ring(), 1));
  DiffOp base = xi;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

DiffOp bracket(const DiffOp& xi, const DiffOp& eta) { return mul(xi, eta) - mul(eta, xi); }

long order(const DiffOp& xi) {
  // GrlexGreater: the first key has the largest |alpha|.
  return xi.is_zero() ? -1 : static_cast<long>(xi.terms().begin()->first.total());
}

long order_by_bracket_oracle(const DiffOp& xi, unsigned degree_bound) {
  if (xi.is_zero()) throw DomainError("bracket-order oracle needs a nonzero operator");
  if (degree_bound == 0) throw DomainError("bracket-order oracle needs degree_bound >= 1");
  const PolyRing& ring = xi.ring();
  std::vector<DiffOp> probes;
  for (const auto& beta : monomials_up_to(ring.nvars(), degree_bound)) {
    if (!beta.is_zero()) probes.push_back(DiffOp::multiplication(Polynomial::monomial(ring, beta)));
  }
  // frontier holds the nonzero iterated brackets of depth `depth`.
  std::vector<DiffOp> frontier{xi};
  long depth = 0;
  while (true) {
    std::vector<DiffOp> next;
    for (const auto& eta : frontier) {
      for (const auto& f : probes) {
        DiffOp b = bracket(eta, f);
        if (b.is_zero()) continue;
        if (std::find(next.begin(), next.end(), b) == next.end()) next.push_back(std::move(b));
      }
    }
    if (next.empty()) return depth;
    frontier = std::move(next);
    ++depth;
  }
}

unsigned level(const DiffOp& xi) {
  const FieldSpec& spec = xi.ring().spec();
  if (spec.is_rational()) throw DomainError("level is defined only in positive characteristic");
  std::uint32_t top = 0;
  for (const auto& [alpha, f] : xi.terms()) top = std::max(top, alpha.max_entry());
  // smallest e with top <= p^e - 1
  unsigned e = 0;
  std::uint64_t q = 1;
  while (q <= top) {
    q *= spec.characteristic();
    ++e;
  }
  return e;
}

bool level_by_commutation_oracle(const DiffOp& xi, unsigned e, unsigned degree_bound) {
  const PolyRing& ring = xi.ring();
  const auto q = static_cast<std::uint32_t>(frobenius_modulus(ring.spec(), e));
  for (const auto& beta : monomials_up_to(ring.nvars(), degree_bound)) {
    const DiffOp f = DiffOp::multiplication(Polynomial::monomial(ring, beta.scaled(q)));
    if (!bracket(xi, f).is_zero()) return false;
  }
  return true;
}

namespace {

DiffOp reconstruct(const PolyRing& ring, const std::vector<MultiExp>& exps,
                   const std::function<Polynomial(const MultiExp&)>& values) {
  // exps is downward closed and sorted by total degree, so every alpha < beta
  // has already been solved when beta is reached.
  DiffOp out(ring);
  for (const auto& beta : exps) {
    Polynomial residual = values(beta);
    for (const auto& [alpha, f] : out.terms()) {
      if (alpha == beta || !alpha.divides(beta)) continue;
      const FieldElem c = multinomial(beta, alpha, ring.spec());
      if (c.is_zero()) continue;
      residual -= f * Polynomial::monomial(ring, beta - alpha, c);
    }
    out.add_term(beta, residual);
  }
  return out;
}

}  // namespace

DiffOp reconstruct_from_values(const PolyRing& ring, unsigned order_bound,
                               const std::function<Polynomial(const MultiExp&)>& values) {
  return reconstruct(ring, monomials_up_to(ring.nvars(), order_bound), values);
}

DiffOp reconstruct_in_box(const PolyRing& ring, const MultiExp& box,
                          const std::function<Polynomial(const MultiExp&)>& values) {
  if (box.size() != ring.nvars()) throw DomainError("box arity does not match the ring");
  std::vector<MultiExp> exps;
  MultiExp top = box;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] == 0) return DiffOp(ring);
    top[i] -= 1;
  }
  for_each_below(top, [&](const MultiExp& b) { exps.push_back(b); });
  std::stable_sort(exps.begin(), exps.end(),
                   [](const MultiExp& a, const MultiExp& b) { return a.total() < b.total(); });
  return reconstruct(ring, exps, values);
}

}  // namespace weyl
