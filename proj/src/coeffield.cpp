#include "weyl/coeffield.hpp"

#include <algorithm>
#include <numeric>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;

std::uint64_t mod_of(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = r * a % p;
    a = a * a % p;
    k >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : char_(characteristic) {
  if (characteristic != 0 && (characteristic >= kMaxCharacteristic || !is_prime(characteristic))) {
    throw DomainError("characteristic must be 0 or a prime below 2^32, got " + std::to_string(characteristic));
  }
}

FieldElem::FieldElem(FieldSpec spec) : spec_(spec) {
  if (spec_.is_rational()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::uint64_t{0};
  }
}

FieldElem::FieldElem(FieldSpec spec, long value) : FieldElem(spec, mpz_class(value)) {}

FieldElem::FieldElem(FieldSpec spec, const mpz_class& value) : spec_(spec) {
  if (spec_.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = mod_of(value, spec_.characteristic());
  }
}

FieldElem::FieldElem(FieldSpec spec, const mpq_class& value) : spec_(spec) {
  if (spec_.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
    return;
  }
  const std::uint64_t p = spec_.characteristic();
  const std::uint64_t den = mod_of(value.get_den(), p);
  if (den == 0) {
    throw DomainError("denominator " + value.get_den().get_str() + " is not invertible mod " + std::to_string(p));
  }
  value_ = mod_of(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

FieldElem FieldElem::parse(FieldSpec spec, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw DomainError("not a rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  return FieldElem(spec, q);
}

bool FieldElem::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElem::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& FieldElem::rational() const {
  if (!spec_.is_rational()) throw DomainError("rational() on a prime-field element");
  return std::get<mpq_class>(value_);
}

std::uint64_t FieldElem::residue() const {
  if (spec_.is_rational()) throw DomainError("residue() on a rational element");
  return std::get<std::uint64_t>(value_);
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (!(spec_ == o.spec_)) {
    throw DomainError("field mismatch: characteristic " + std::to_string(spec_.characteristic()) + " vs " +
                      std::to_string(o.spec_.characteristic()));
  }
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  FieldElem r(spec_);
  if (spec_.is_rational()) {
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  } else {
    const auto p = spec_.characteristic();
    r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return r;
}

FieldElem FieldElem::pow(std::uint64_t k) const {
  FieldElem result(spec_, 1L);
  FieldElem base = *this;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(o.value_)) % spec_.characteristic();
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(o.value_);
  } else {
    const auto p = spec_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - std::get<std::uint64_t>(o.value_)) % p;
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(o.value_) % spec_.characteristic();
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

FieldElem FieldElem::operator-() const {
  FieldElem r(spec_);
  r -= *this;
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::string FieldElem::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

MultiExp MultiExp::unit(std::size_t n, std::size_t i) {
  MultiExp e(n);
  e.e_.at(i) = 1;
  return e;
}

std::uint64_t MultiExp::total() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool MultiExp::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint32_t MultiExp::max_entry() const {
  return e_.empty() ? 0 : *std::max_element(e_.begin(), e_.end());
}

void check_same_arity(const MultiExp& a, const MultiExp& b) {
  if (a.size() != b.size()) {
    throw DomainError("multi-exponent arity mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
}

bool MultiExp::divides(const MultiExp& other) const {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

MultiExp& MultiExp::operator+=(const MultiExp& o) {
  check_same_arity(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MultiExp operator-(const MultiExp& a, const MultiExp& b) {
  if (!b.divides(a)) throw DomainError("multi-exponent subtraction requires b <= a");
  MultiExp r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

MultiExp MultiExp::scaled(std::uint32_t k) const {
  MultiExp r = *this;
  for (auto& v : r.e_) v *= k;
  return r;
}

void for_each_below(const MultiExp& alpha, const std::function<void(const MultiExp&)>& fn) {
  MultiExp beta(alpha.size());
  while (true) {
    fn(beta);
    std::size_t i = alpha.size();
    while (i > 0) {
      --i;
      if (beta[i] < alpha[i]) {
        ++beta[i];
        break;
      }
      beta[i] = 0;
      if (i == 0) return;
    }
    if (alpha.size() == 0) return;
  }
}

std::vector<MultiExp> monomials_up_to(std::size_t n, std::uint64_t d) {
  std::vector<MultiExp> out;
  for (std::uint64_t deg = 0; deg <= d; ++deg) {
    // Compositions of deg into n parts, lex descending.
    std::function<void(std::size_t, std::uint64_t, MultiExp&)> rec = [&](std::size_t i, std::uint64_t left,
                                                                         MultiExp& cur) {
      if (i + 1 == n) {
        cur[i] = static_cast<std::uint32_t>(left);
        out.push_back(cur);
        return;
      }
      for (std::uint64_t v = left + 1; v-- > 0;) {
        cur[i] = static_cast<std::uint32_t>(v);
        rec(i + 1, left - v, cur);
      }
    };
    if (n == 0) {
      if (deg == 0) out.emplace_back();
      continue;
    }
    MultiExp cur(n);
    rec(0, deg, cur);
  }
  return out;
}

mpz_class multinomial_integer(const MultiExp& alpha, const MultiExp& beta) {
  if (!beta.divides(alpha)) throw DomainError("multinomial requires beta <= alpha");
  mpz_class r = 1;
  mpz_class b;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    mpz_bin_uiui(b.get_mpz_t(), alpha[i], beta[i]);
    r *= b;
  }
  return r;
}

FieldElem multinomial(const MultiExp& alpha, const MultiExp& beta, FieldSpec spec) {
  return FieldElem(spec, multinomial_integer(alpha, beta));
}

mpz_class alternating_multinomial_sum(const MultiExp& sigma) {
  mpz_class sum = 0;
  for_each_below(sigma, [&](const MultiExp& beta) {
    const mpz_class term = multinomial_integer(sigma, beta);
    if (beta.total() % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  });
  return sum;
}

}  // namespace weyl
