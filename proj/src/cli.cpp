#include "qcoord/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "qcoord/detloc.hpp"
#include "qcoord/errors.hpp"
#include "qcoord/format.hpp"
#include "qcoord/frobext.hpp"
#include "qcoord/parser.hpp"
#include "qcoord/pbw.hpp"
#include "qcoord/rootspec.hpp"

namespace qcoord {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  std::optional<int> ell;
  std::string variant = "m";
  std::string order = "rowmajor";
  bool json = false;
  std::vector<std::string> exprs;
  int max_length = 5;
  int max_degree = 4;
  std::string twist = "stated";
  std::size_t grid_limit = 81;
};

AlgebraConfig make_config(const Options& o) {
  const Variant v = parse_variant(o.variant);
  if (o.order == "rowmajor") return AlgebraConfig::standard(o.n, v);
  if (o.order == "opposite") return AlgebraConfig::opposite(o.n, v);
  throw UsageError("unknown order '" + o.order + "' (expected rowmajor or opposite)");
}

int require_ell(const Options& o, const std::string& command) {
  if (!o.ell) throw UsageError(command + " needs --ell");
  return *o.ell;
}

void require_rowmajor(const Options& o, const std::string& command) {
  if (o.order != "rowmajor") throw UsageError(command + " uses the row-major order only");
}

json header(const Options& o, const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["n"] = o.n;
  j["variant"] = o.variant;
  if (o.ell) j["ell"] = *o.ell;
  j["order"] = o.order;
  return j;
}

template <class Coeff>
json terms_json(const Element<Coeff>& e, const GenOrder& order, std::string_view gen = "t",
                std::string_view det = "D") {
  json arr = json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    arr.push_back({{"monomial", format_monomial(it->first, order, gen, det)},
                   {"coefficient", as_laurent(it->second).to_string()}});
  }
  return arr;
}

template <class Coeff>
void emit_element(const Options& o, const std::string& command, const Element<Coeff>& e,
                  const GenOrder& order, std::ostream& out) {
  if (o.json) {
    json j = header(o, command);
    j["result"] = format_element(e, order);
    j["terms"] = terms_json(e, order);
    out << j.dump(2) << "\n";
  } else {
    out << format_element(e, order) << "\n";
  }
}

// Runs f(engine) with a Z_q engine, or a Z_eps engine when --ell is given.
template <class F>
void with_engine(const Options& o, F&& f) {
  const AlgebraConfig config = make_config(o);
  if (o.ell) {
    Engine<CycloRing> eng(config, CycloRing(*o.ell));
    f(eng);
  } else {
    Engine<LaurentRing> eng(config, LaurentRing{});
    f(eng);
  }
}

int cmd_nf(const Options& o, std::ostream& out) {
  if (o.exprs.size() != 1) throw UsageError("nf takes one expression");
  const ExprPtr e = parse(o.exprs[0], {o.n, parse_variant(o.variant)});
  with_engine(o, [&](auto& eng) { emit_element(o, "nf", eval(*e, eng), eng.order(), out); });
  return 0;
}

int cmd_mul(const Options& o, std::ostream& out) {
  if (o.exprs.size() != 2) throw UsageError("mul takes two expressions");
  const ParseOptions po{o.n, parse_variant(o.variant)};
  const ExprPtr a = parse(o.exprs[0], po);
  const ExprPtr b = parse(o.exprs[1], po);
  with_engine(o, [&](auto& eng) {
    emit_element(o, "mul", eng.multiply(eval(*a, eng), eval(*b, eng)), eng.order(), out);
  });
  return 0;
}

int cmd_det(const Options& o, std::ostream& out) {
  with_engine(o, [&](auto& eng) { emit_element(o, "det", quantum_determinant(eng), eng.order(), out); });
  return 0;
}

EpsElement eval_eps(const Options& o, RootSpecialization& alg) {
  if (o.exprs.size() != 1) throw UsageError("expected one expression");
  const ExprPtr e = parse(o.exprs[0], {o.n, parse_variant(o.variant)});
  return eval(*e, alg.quantum());
}

int cmd_expand(const Options& o, std::ostream& out) {
  const int ell = require_ell(o, "expand");
  require_rowmajor(o, "expand");
  RootSpecialization alg(o.n, ell, parse_variant(o.variant));
  const ModuleExpansion x = alg.module_expand(eval_eps(o, alg));
  const GenOrder& order = alg.quantum().order();
  if (o.json) {
    json j;
    j["schema"] = 1;
    j["command"] = "expand";
    j["ell"] = ell;
    j["n"] = o.n;
    j["variant"] = o.variant;
    json entries = json::array();
    for (const auto& [key, coeff] : x) {
      entries.push_back({{"basis_key", format_monomial(key, order)},
                         {"classical_coeff", format_classical(coeff, o.n)}});
    }
    j["entries"] = std::move(entries);
    out << j.dump(2) << "\n";
  } else {
    if (x.empty()) out << "0\n";
    for (const auto& [key, coeff] : x) {
      out << format_monomial(key, order) << " : " << format_classical(coeff, o.n) << "\n";
    }
  }
  return 0;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const int ell = require_ell(o, "phi");
  require_rowmajor(o, "phi");
  FrobeniusContext ctx(o.n, ell, parse_variant(o.variant));
  const ClassicalElement v = ctx.phi(eval_eps(o, ctx.algebra()));
  if (o.json) {
    json j = header(o, "phi");
    j["result"] = format_classical(v, o.n);
    j["terms"] = terms_json(v, GenOrder::row_major(o.n), "tbar", "Dbar");
    out << j.dump(2) << "\n";
  } else {
    out << format_classical(v, o.n) << "\n";
  }
  return 0;
}

int cmd_nakayama(const Options& o, std::ostream& out) {
  const int ell = require_ell(o, "nakayama");
  require_rowmajor(o, "nakayama");
  FrobeniusContext ctx(o.n, ell, parse_variant(o.variant));
  const EpsElement e = eval_eps(o, ctx.algebra());
  const EpsElement r = o.twist == "derived" ? ctx.twist(e, derived_twist_exponent) : ctx.nakayama(e);
  emit_element(o, "nakayama", r, ctx.engine().order(), out);
  return 0;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const int ell = require_ell(o, "basis");
  const std::vector<NormalMonomial> basis = enumerate_basis(o.n, ell, parse_variant(o.variant));
  const GenOrder order = GenOrder::row_major(o.n);
  if (o.json) {
    json j = header(o, "basis");
    j["size"] = basis.size();
    json arr = json::array();
    for (const auto& m : basis) arr.push_back(format_monomial(m, order));
    j["basis"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& m : basis) out << format_monomial(m, order) << "\n";
  }
  return 0;
}

int emit_report(const Options& o, const CheckReport& r, std::ostream& out) {
  if (o.json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    out << r.to_text();
  }
  return r.passed() ? 0 : 1;
}

int cmd_check(const Options& o, const std::string& name, std::ostream& out) {
  if (name == "central") return emit_report(o, check_central(make_config(o)), out);
  if (name == "pbw-confluence") {
    const AlgebraConfig config = make_config(o);
    CheckReport r = check_confluence(config, o.max_length);
    r.merge(check_specialization_at_one(config, o.max_length), "q=1: ");
    return emit_report(o, r, out);
  }
  if (name == "frobenius") return emit_report(o, check_frobenius_central(o.n, require_ell(o, "check frobenius")), out);
  if (name == "nakayama") {
    const int ell = require_ell(o, "check nakayama");
    const NakayamaTwist t = o.twist == "derived" ? NakayamaTwist::kDerived : NakayamaTwist::kStated;
    return emit_report(o, check_nakayama(o.n, ell, t, o.grid_limit), out);
  }
  if (name == "iso") return emit_report(o, check_sl_gl_iso(o.n, o.n == 2), out);
  if (name == "identities") {
    CheckReport r = check_reversed_determinant(o.n);
    r.check = "identities";
    r.merge(check_identities(o.n, o.max_degree));
    r.merge(check_opposite_reduction(o.n, o.max_degree), "opposite reduction: ");
    return emit_report(o, r, out);
  }
  throw UsageError("unknown check '" + name + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact normal forms and verification suites for O_q(M_n), O_q(GL_n), O_q(SL_n)", "qcoord"};
  app.require_subcommand(1);
  app.add_option("--n", o.n, "Matrix size (default 2)")->check(CLI::PositiveNumber);
  app.add_option("--ell", o.ell, "Odd root-of-unity order; switches coefficients to Z_eps");
  app.add_option("--variant", o.variant, "Algebra: m, gl or sl (default m)")
      ->check(CLI::IsMember({"m", "gl", "sl"}));
  app.add_option("--order", o.order, "Generator order: rowmajor or opposite")
      ->check(CLI::IsMember({"rowmajor", "opposite"}));
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-length", o.max_length, "Word length bound for pbw-confluence (default 5)");
  app.add_option("--max-degree", o.max_degree, "Degree bound for identities (default 4)");
  app.add_option("--twist", o.twist, "Nakayama twist: stated or derived (default stated)")
      ->check(CLI::IsMember({"stated", "derived"}));
  app.add_option("--grid-limit", o.grid_limit,
                 "Exhaustive B-symmetry grid up to this many basis elements (default 81)");

  std::string check_name;
  auto add = [&](const std::string& name, const std::string& help, int exprs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (exprs > 0) sub->add_option("expr", o.exprs, "Expression(s)")->required()->expected(exprs);
    return sub;
  };
  CLI::App* nf = add("nf", "Normal form of an expression", 1);
  CLI::App* det = add("det", "Quantum determinant", 0);
  CLI::App* mul = add("mul", "Normal form of a product", 2);
  CLI::App* expand = add("expand", "Expansion over the classical coordinate ring (needs --ell)", 1);
  CLI::App* phi = add("phi", "Frobenius functional (needs --ell)", 1);
  CLI::App* nak = add("nakayama", "Nakayama automorphism (needs --ell)", 1);
  CLI::App* basis = add("basis", "Residue basis over the classical ring (needs --ell)", 0);
  CLI::App* check = add("check", "Verification suite", 0);
  check->add_option("suite", check_name, "central, pbw-confluence, frobenius, nakayama, iso or identities")
      ->required()
      ->check(CLI::IsMember({"central", "pbw-confluence", "frobenius", "nakayama", "iso", "identities"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (o.ell && (*o.ell < 1 || *o.ell % 2 == 0)) throw UsageError("--ell must be odd and positive");
    if (nf->parsed()) return cmd_nf(o, out);
    if (det->parsed()) return cmd_det(o, out);
    if (mul->parsed()) return cmd_mul(o, out);
    if (expand->parsed()) return cmd_expand(o, out);
    if (phi->parsed()) return cmd_phi(o, out);
    if (nak->parsed()) return cmd_nakayama(o, out);
    if (basis->parsed()) return cmd_basis(o, out);
    if (check->parsed()) return cmd_check(o, check_name, out);
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.offset() << ": " << e.what();
    if (!e.expected().empty()) {
      err << " (expected";
      for (const auto& x : e.expected()) err << " " << x;
      err << ")";
    }
    err << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qcoord
