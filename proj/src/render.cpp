#include "weyl/render.hpp"

#include <sstream>
#include <vector>

namespace weyl {

namespace {

std::string monomial_text(const PolyRing& ring, const MultiExp& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var_names()[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string symbol_text(const MultiExp& alpha) {
  std::string out = "d[";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + "]";
}

// One signed term; `factors` is the non-scalar part, possibly empty.
std::string term_text(const FieldElem& c, const std::string& factors) {
  if (factors.empty()) return c.to_string();
  if (c.is_one()) return factors;
  if (c.spec().is_rational() && c.rational() == -1) return "-" + factors;
  return c.to_string() + "*" + factors;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

Json exponent_json(const MultiExp& e) { return Json(e.entries()); }

}  // namespace

std::string to_text(const Polynomial& f) {
  std::vector<std::string> terms;
  for (const auto& [e, c] : f.terms()) terms.push_back(term_text(c, monomial_text(f.ring(), e)));
  return join_terms(terms);
}

std::string to_text(const DiffOp& xi) {
  std::vector<std::string> terms;
  for (const auto& [alpha, f] : xi.terms()) {
    const std::string symbol = alpha.is_zero() ? "" : symbol_text(alpha);
    for (const auto& [e, c] : f.terms()) {
      std::string factors = monomial_text(xi.ring(), e);
      if (!symbol.empty()) factors += (factors.empty() ? "" : "*") + symbol;
      terms.push_back(term_text(c, factors));
    }
  }
  return join_terms(terms);
}

std::string to_text(const LevelMatrix& m) {
  const FrobeniusBasis basis = m.basis();
  std::ostringstream os;
  os << "basis:";
  for (const auto& lambda : basis.monomials()) {
    const std::string mono = monomial_text(m.ring(), lambda);
    os << " " << (mono.empty() ? "1" : mono);
  }
  os << "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.size(); ++c) os << (c ? ", " : "") << to_text(m(r, c));
    os << "]\n";
  }
  return os.str();
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

Json json_header(const PolyRing& ring) {
  Json j;
  j["schema"] = kJsonSchema;
  j["char"] = ring.spec().characteristic();
  j["vars"] = ring.var_names();
  return j;
}

Json poly_terms_json(const Polynomial& f) {
  Json arr = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["exponent"] = exponent_json(e);
    t["coeff"] = c.to_string();
    arr.push_back(std::move(t));
  }
  return arr;
}

Json to_json(const DiffOp& xi) {
  Json j = json_header(xi.ring());
  Json terms = Json::array();
  for (const auto& [alpha, f] : xi.terms()) {
    Json t;
    t["exponent"] = exponent_json(alpha);
    t["coefficient"] = poly_terms_json(f);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const LevelMatrix& m) {
  Json j = json_header(m.ring());
  const FrobeniusBasis basis = m.basis();
  j["kind"] = "level-matrix";
  j["p"] = m.ring().spec().characteristic();
  j["e"] = m.e();
  Json b = Json::array();
  for (const auto& lambda : basis.monomials()) b.push_back(exponent_json(lambda));
  j["basis"] = std::move(b);
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(poly_terms_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace weyl
