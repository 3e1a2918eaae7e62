#include "weyl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "weyl/artinian.hpp"
#include "weyl/errors.hpp"
#include "weyl/expr.hpp"
#include "weyl/invariants.hpp"
#include "weyl/levelmat.hpp"
#include "weyl/render.hpp"
#include "weyl/transpose.hpp"

namespace weyl {

namespace {

struct FileFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldElem json_entry(const FieldSpec& spec, const Json& v) {
  if (v.is_number_integer()) return FieldElem(spec, v.get<long>());
  if (v.is_string()) {
    try {
      return FieldElem::parse(spec, v.get<std::string>());
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw FileFormatError("bad matrix entry " + v.dump());
    }
  }
  throw FileFormatError("matrix entries must be integers or \"a/b\" strings, got " + v.dump());
}

FiniteGroup load_group(const std::string& path, const PolyRing& ring) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot read " + path);
  const Json doc = Json::parse(in);
  if (!doc.is_array()) throw FileFormatError("group file must hold a list of matrices");
  const std::size_t n = ring.nvars();
  std::vector<GroupElement> elements;
  for (const auto& m : doc) {
    if (!m.is_array() || m.size() != n) throw FileFormatError("each matrix must have " + std::to_string(n) + " rows");
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != n) {
        throw FileFormatError("each row must have " + std::to_string(n) + " entries");
      }
      std::vector<FieldElem> r;
      for (const auto& v : row) r.push_back(json_entry(ring.spec(), v));
      rows.push_back(std::move(r));
    }
    elements.emplace_back(Matrix::from_rows(ring.spec(), rows));
  }
  return FiniteGroup(ring, std::move(elements));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_op(std::ostream& out, bool json, const DiffOp& xi) {
  if (json) {
    emit(out, to_json(xi));
  } else {
    out << to_text(xi) << "\n";
  }
}

void emit_scalar(std::ostream& out, bool json, const PolyRing& ring, const char* key, const Json& value,
                 const std::string& text) {
  if (json) {
    Json j = json_header(ring);
    j[key] = value;
    emit(out, j);
  } else {
    out << text << "\n";
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential operators on polynomial rings: normal forms, transpositions, levels, invariants."};
  app.name("weyl");
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t characteristic = 0;
  std::size_t nvars = 0;
  std::vector<std::string> vars;
  bool json = false;
  app.add_option("--char", characteristic, "Characteristic: 0 or a prime")->capture_default_str();
  app.add_option("--nvars", nvars, "Number of variables (default 1, or the length of --vars)");
  app.add_option("--vars", vars, "Variable names")->delimiter(',');
  app.add_flag("--json", json, "Machine-readable output");

  std::string expr_a;
  std::string expr_b;
  std::string to_poly;
  std::vector<std::string> twist;
  unsigned e = 1;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an operator");
  normalize->add_option("expr", expr_a)->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a polynomial");
  apply_cmd->add_option("expr", expr_a)->required();
  apply_cmd->add_option("--to", to_poly, "Polynomial argument")->required();

  auto* transpose = app.add_subcommand("transpose", "Standard or twisted transposition");
  transpose->add_option("expr", expr_a)->required();
  transpose->add_option("--twist", twist, "One polynomial per variable, f_i in x_i alone (characteristic 0)")
      ->delimiter(',');

  auto* order_cmd = app.add_subcommand("order", "Order of an operator");
  order_cmd->add_option("expr", expr_a)->required();

  auto* level_cmd = app.add_subcommand("level", "Level of an operator (characteristic p)");
  level_cmd->add_option("expr", expr_a)->required();

  auto* matrix = app.add_subcommand("matrix", "Matrix of a level-e operator over the p^e-th powers");
  matrix->add_option("expr", expr_a)->required();
  matrix->add_option("--e", e, "Level")->capture_default_str();

  auto* bracket_cmd = app.add_subcommand("bracket", "Commutator [A, B]");
  bracket_cmd->add_option("a", expr_a)->required();
  bracket_cmd->add_option("b", expr_b)->required();

  std::vector<std::uint32_t> exponents;
  std::optional<unsigned> n_max;
  std::string art_op;
  auto* artinian = app.add_subcommand("artinian", "Order filtration and socle adjoint on k[x]/(x^a)");
  artinian->add_option("--exponents", exponents, "a_1,...,a_n")->delimiter(',')->required();
  artinian->add_option("--op", art_op, "Operator to transpose by the socle adjoint");
  artinian->add_option("--nmax", n_max, "Last filtration step to compute");

  std::string group_file;
  bool experimental = false;
  auto* group = app.add_subcommand("group", "Finite linear group actions");
  group->add_option("--group", group_file, "JSON list of row-major matrices")->required()->check(CLI::ExistingFile);
  group->require_subcommand(1);
  auto* pseudo = group->add_subcommand("pseudoreflections", "List the pseudoreflections");
  auto* inv_check = group->add_subcommand("invariant-check", "Is the operator invariant");
  inv_check->add_option("expr", expr_a)->required();
  auto* reyn = group->add_subcommand("reynolds", "Average over the group");
  reyn->add_option("expr", expr_a)->required();
  auto* equiv = group->add_subcommand("equivariance", "Does the standard transposition commute with the action");
  equiv->add_option("expr", expr_a)->required();
  equiv->add_flag("--experimental", experimental, "Allow positive characteristic");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  SessionConfig cfg;
  cfg.json = json;
  cfg.e = e;
  try {
    cfg.field = FieldSpec(characteristic);
    if (*artinian) {
      if (exponents.empty()) throw DomainError("--exponents needs at least one entry");
      if (nvars != 0 && nvars != exponents.size()) throw DomainError("--nvars disagrees with --exponents");
      nvars = exponents.size();
    }
    if (!vars.empty()) {
      if (nvars != 0 && nvars != vars.size()) throw DomainError("--nvars disagrees with --vars");
      cfg.var_names = vars;
    } else {
      cfg.var_names = default_var_names(nvars == 0 ? 1 : nvars);
    }
    std::vector<std::string> sorted = cfg.var_names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DomainError("variable names must be distinct");
    }
    cfg.ring();
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    const PolyRing ring = cfg.ring();
    if (*normalize) {
      emit_op(out, json, parse_operator(expr_a, ring));
    } else if (*apply_cmd) {
      const DiffOp xi = parse_operator(expr_a, ring);
      const Polynomial f = parse_polynomial(to_poly, ring);
      const Polynomial g = apply(xi, f);
      if (json) {
        Json j = json_header(ring);
        j["result"] = poly_terms_json(g);
        emit(out, j);
      } else {
        out << to_text(g) << "\n";
      }
    } else if (*transpose) {
      const DiffOp xi = parse_operator(expr_a, ring);
      if (twist.empty()) {
        emit_op(out, json, standard_transpose(xi));
      } else {
        std::vector<Polynomial> fs;
        for (const auto& s : twist) fs.push_back(parse_polynomial(s, ring));
        emit_op(out, json, AntiAutomorphism::twisted(ring, std::move(fs))(xi));
      }
    } else if (*order_cmd) {
      const long n = order(parse_operator(expr_a, ring));
      emit_scalar(out, json, ring, "order", n, std::to_string(n));
    } else if (*level_cmd) {
      const unsigned l = level(parse_operator(expr_a, ring));
      emit_scalar(out, json, ring, "level", l, std::to_string(l));
    } else if (*matrix) {
      const LevelMatrix m = to_matrix(parse_operator(expr_a, ring), e);
      if (json) {
        emit(out, to_json(m));
      } else {
        out << to_text(m);
      }
    } else if (*bracket_cmd) {
      emit_op(out, json, bracket(parse_operator(expr_a, ring), parse_operator(expr_b, ring)));
    } else if (*artinian) {
      const ArtinianAlgebra alg(ring.spec(), MultiExp(exponents));
      const OrderFiltration filt = order_filtration(alg, n_max);
      Json j = json_header(ring);
      j["exponents"] = exponents;
      j["dimension"] = alg.dimension();
      j["filtration"] = filt.dimensions();
      j["stabilized_at"] = filt.stabilized_at ? Json(*filt.stabilized_at) : Json(nullptr);
      std::ostringstream text;
      text << "dimension: " << alg.dimension() << "\n";
      text << "filtration: " << join(filt.dimensions()) << "\n";
      text << "stabilized at: " << (filt.stabilized_at ? std::to_string(*filt.stabilized_at) : "not reached") << "\n";
      if (!art_op.empty()) {
        const EndOperator xi = from_diffop(alg, parse_operator(art_op, ring));
        const EndOperator adj = socle_adjoint(alg, xi);
        const long n = filt.order_of(xi);
        const long m = filt.order_of(adj);
        j["operator"] = matrix_json(xi.matrix);
        j["order"] = n;
        j["adjoint"] = matrix_json(adj.matrix);
        j["adjoint_order"] = m;
        text << "operator (order " << n << "):\n" << to_text(xi.matrix);
        text << "adjoint (order " << m << "):\n" << to_text(adj.matrix);
      }
      if (json) {
        emit(out, j);
      } else {
        out << text.str();
      }
    } else if (*group) {
      const FiniteGroup g = load_group(group_file, ring);
      if (*pseudo) {
        const auto idx = pseudoreflection_indices(g);
        if (json) {
          Json j = json_header(ring);
          j["order"] = g.order();
          j["pseudoreflections"] = idx;
          emit(out, j);
        } else {
          out << (idx.empty() ? "none" : join(idx)) << "\n";
        }
      } else if (*inv_check) {
        const bool ok = is_invariant(g, parse_operator(expr_a, ring));
        emit_scalar(out, json, ring, "invariant", ok, ok ? "invariant" : "not invariant");
      } else if (*reyn) {
        emit_op(out, json, reynolds(g, parse_operator(expr_a, ring)));
      } else if (*equiv) {
        const bool ok = equivariance_check(g, parse_operator(expr_a, ring), experimental);
        emit_scalar(out, json, ring, "equivariant", ok, ok ? "equivariant" : "not equivariant");
      }
    }
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const FileFormatError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const Json::exception& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDomain;
  }
  return 0;
}

}  // namespace weyl
