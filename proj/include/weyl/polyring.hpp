#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weyl/coeffield.hpp"

namespace weyl {

class Matrix;

/// k[x_1..x_n]. Cheap to copy: a shared handle to immutable data.
class PolyRing {
 public:
  /// Variables named x1..xn.
  PolyRing(FieldSpec spec, std::size_t nvars);
  PolyRing(FieldSpec spec, std::vector<std::string> var_names);

  const FieldSpec& spec() const { return impl_->spec; }
  std::size_t nvars() const { return impl_->names.size(); }
  const std::vector<std::string>& var_names() const { return impl_->names; }

  FieldElem zero() const { return FieldElem(spec()); }
  FieldElem one() const { return FieldElem(spec(), 1L); }
  FieldElem scalar(long v) const { return FieldElem(spec(), v); }

  friend bool operator==(const PolyRing& a, const PolyRing& b);

 private:
  struct Impl {
    FieldSpec spec;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Impl> impl_;
};

void check_same_ring(const PolyRing& a, const PolyRing& b);

class Polynomial {
 public:
  using Terms = std::map<MultiExp, FieldElem, GrlexGreater>;

  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const PolyRing& ring, const FieldElem& c);
  static Polynomial constant(const PolyRing& ring, long c) { return constant(ring, ring.scalar(c)); }
  static Polynomial variable(const PolyRing& ring, std::size_t i);
  static Polynomial monomial(const PolyRing& ring, const MultiExp& exp, const FieldElem& c);
  static Polynomial monomial(const PolyRing& ring, const MultiExp& exp) { return monomial(ring, exp, ring.one()); }

  const PolyRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  long total_degree() const;
  FieldElem coefficient(const MultiExp& exp) const;
  /// Value at x = 0.
  FieldElem constant_term() const;
  /// True when every term involves no variable other than x_i.
  bool involves_only(std::size_t i) const;

  /// Accumulates c x^exp, keeping the term map free of zeros.
  void add_term(const MultiExp& exp, const FieldElem& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const FieldElem& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElem& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(std::uint64_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  PolyRing ring_;
  Terms terms_;
};

/// Substitution endomorphism x_i -> images[i].
class RingMap {
 public:
  RingMap(PolyRing ring, std::vector<Polynomial> images);

  static RingMap identity(const PolyRing& ring);
  /// x_j -> sum_i m(i, j) x_i, i.e. column j of m is the image of x_j.
  static RingMap linear(const PolyRing& ring, const Matrix& m);

  /// Attaches a certified inverse; throws DomainError unless both
  /// compositions are the identity on every variable.
  RingMap with_inverse(const RingMap& inv) const;

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& images() const { return images_; }
  bool has_inverse() const { return inverse_ != nullptr; }
  /// Throws DomainError when no inverse was attached.
  RingMap inverse() const;
  /// Every image is a homogeneous linear form.
  bool is_linear() const;

  friend bool operator==(const RingMap& a, const RingMap& b) { return a.images_ == b.images_; }

 private:
  PolyRing ring_;
  std::vector<Polynomial> images_;
  std::shared_ptr<const std::vector<Polynomial>> inverse_;
};

Polynomial apply_ring_map(const RingMap& m, const Polynomial& f);
/// (a o b)(f) = a(b(f)).
RingMap compose(const RingMap& a, const RingMap& b);

/// f = sum_lambda g_lambda^(p^e) x^lambda with 0 <= lambda_i < p^e. Keys in lex order.
std::map<MultiExp, Polynomial> frobenius_decompose(const Polynomial& f, unsigned e);
/// g -> g^(p^e); on F_p coefficients this only scales exponents.
Polynomial frobenius_power(const Polynomial& g, unsigned e);
/// p^e for the ring's characteristic; throws DomainError in characteristic 0.
std::uint64_t frobenius_modulus(const FieldSpec& spec, unsigned e);

}  // namespace weyl
