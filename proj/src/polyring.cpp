#include "weyl/polyring.hpp"

#include <set>

#include "weyl/errors.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

PolyRing::PolyRing(FieldSpec spec, std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  *this = PolyRing(spec, std::move(names));
}

PolyRing::PolyRing(FieldSpec spec, std::vector<std::string> var_names) {
  if (var_names.empty()) throw DomainError("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : var_names) {
    if (n.empty() || !seen.insert(n).second) throw DomainError("variable names must be distinct and non-empty");
  }
  impl_ = std::make_shared<const Impl>(Impl{spec, std::move(var_names)});
}

bool operator==(const PolyRing& a, const PolyRing& b) {
  return a.impl_ == b.impl_ || (a.impl_->spec == b.impl_->spec && a.impl_->names == b.impl_->names);
}

void check_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!(a == b)) throw DomainError("ring mismatch");
}

Polynomial Polynomial::constant(const PolyRing& ring, const FieldElem& c) {
  return monomial(ring, MultiExp(ring.nvars()), c);
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t i) {
  if (i >= ring.nvars()) throw DomainError("variable index out of range");
  return monomial(ring, MultiExp::unit(ring.nvars(), i), ring.one());
}

Polynomial Polynomial::monomial(const PolyRing& ring, const MultiExp& exp, const FieldElem& c) {
  if (exp.size() != ring.nvars()) throw DomainError("monomial arity does not match the ring");
  Polynomial p(ring);
  p.add_term(exp, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

long Polynomial::total_degree() const {
  // GrlexGreater puts the highest degree first.
  return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.total());
}

FieldElem Polynomial::coefficient(const MultiExp& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? ring_.zero() : it->second;
}

FieldElem Polynomial::constant_term() const { return coefficient(MultiExp(ring_.nvars())); }

bool Polynomial::involves_only(std::size_t i) const {
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j != i && e[j] != 0) return false;
    }
  }
  return true;
}

void Polynomial::add_term(const MultiExp& exp, const FieldElem& c) {
  if (c.is_zero()) return;
  if (exp.size() != ring_.nvars()) throw DomainError("monomial arity does not match the ring");
  if (!(c.spec() == ring_.spec())) throw DomainError("coefficient from a different field");
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(ring_, o.ring_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a.ring_, b.ring_);
  Polynomial r(a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

RingMap::RingMap(PolyRing ring, std::vector<Polynomial> images) : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_.nvars()) throw DomainError("ring map needs one image per variable");
  for (const auto& img : images_) check_same_ring(ring_, img.ring());
}

RingMap RingMap::identity(const PolyRing& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring.nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
  RingMap m(ring, images);
  m.inverse_ = std::make_shared<const std::vector<Polynomial>>(std::move(images));
  return m;
}

RingMap RingMap::linear(const PolyRing& ring, const Matrix& m) {
  const std::size_t n = ring.nvars();
  if (m.rows() != n || m.cols() != n) throw DomainError("linear map matrix must be n x n");
  if (!(m.spec() == ring.spec())) throw DomainError("linear map matrix over a different field");
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img(ring);
    for (std::size_t i = 0; i < n; ++i) img.add_term(MultiExp::unit(n, i), m(i, j));
    images.push_back(std::move(img));
  }
  return RingMap(ring, std::move(images));
}

RingMap RingMap::with_inverse(const RingMap& inv) const {
  check_same_ring(ring_, inv.ring_);
  const RingMap id = identity(ring_);
  if (!(compose(*this, inv) == id) || !(compose(inv, *this) == id)) {
    throw DomainError("supplied inverse does not compose to the identity");
  }
  RingMap out = *this;
  out.inverse_ = std::make_shared<const std::vector<Polynomial>>(inv.images_);
  return out;
}

RingMap RingMap::inverse() const {
  if (!inverse_) throw DomainError("ring map has no certified inverse");
  RingMap inv(ring_, *inverse_);
  inv.inverse_ = std::make_shared<const std::vector<Polynomial>>(images_);
  return inv;
}

bool RingMap::is_linear() const {
  for (const auto& img : images_) {
    for (const auto& [e, c] : img.terms()) {
      if (e.total() != 1) return false;
    }
  }
  return true;
}

Polynomial apply_ring_map(const RingMap& m, const Polynomial& f) {
  check_same_ring(m.ring(), f.ring());
  const auto& ring = f.ring();
  const std::size_t n = ring.nvars();
  // powers[i][k] = images[i]^k, grown on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(ring, 1));
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * m.images()[i]);
    return powers[i][k];
  };
  Polynomial out(ring);
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(ring, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i]) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

RingMap compose(const RingMap& a, const RingMap& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> images;
  for (const auto& img : b.images()) images.push_back(apply_ring_map(a, img));
  return RingMap(a.ring(), std::move(images));
}

std::uint64_t frobenius_modulus(const FieldSpec& spec, unsigned e) {
  if (spec.is_rational()) throw DomainError("Frobenius requires positive characteristic");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 31) / spec.characteristic()) throw DomainError("p^e is too large");
    q *= spec.characteristic();
  }
  return q;
}

std::map<MultiExp, Polynomial> frobenius_decompose(const Polynomial& f, unsigned e) {
  const auto q = static_cast<std::uint32_t>(frobenius_modulus(f.ring().spec(), e));
  std::map<MultiExp, Polynomial> parts;
  for (const auto& [exp, c] : f.terms()) {
    MultiExp digit(exp.size());
    MultiExp quotient(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) {
      digit[i] = exp[i] % q;
      quotient[i] = exp[i] / q;
    }
    // Over F_p the q-th root of c is c itself.
    auto it = parts.try_emplace(digit, Polynomial(f.ring())).first;
    it->second.add_term(quotient, c);
  }
  return parts;
}

Polynomial frobenius_power(const Polynomial& g, unsigned e) {
  const auto q = static_cast<std::uint32_t>(frobenius_modulus(g.ring().spec(), e));
  Polynomial out(g.ring());
  for (const auto& [exp, c] : g.terms()) out.add_term(exp.scaled(q), c);
  return out;
}

}  // namespace weyl
