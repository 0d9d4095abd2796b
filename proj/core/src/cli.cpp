#include "diffop/cli.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "diffop/derivation.hpp"
#include "diffop/error.hpp"
#include "diffop/jacobi.hpp"
#include "diffop/json_io.hpp"
#include "diffop/operators.hpp"
#include "diffop/parse.hpp"
#include "diffop/quotient.hpp"
#include "diffop/relations.hpp"
#include "diffop/variety.hpp"
#include "diffop/verify.hpp"

namespace diffop {

namespace {

RingPtr load_ring(const std::string& src) {
  VarietyFile vf;
  if (std::filesystem::exists(src)) {
    vf = load_variety_file(src);
  } else if (const CatalogEntry* e = catalog_find(src)) {
    vf = e->variety;
  } else {
    throw ParseError("no such file or catalog entry: " + src, 0);
  }
  return ring_from_variety(vf);
}

std::string index_list(const IndexTuple& t) {
  std::string out;
  for (int k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k] + 1);
  }
  return out;
}

std::string symbol_text(const IndexTuple& rows, const IndexTuple& cols) {
  return "d[" + index_list(rows) + ";" + index_list(cols) + "]";
}

std::string residue_text(const Residue& a) {
  const auto& terms = a.rep().terms();
  bool simple = terms.size() == 1 && terms[0].coeff.sign() > 0;
  return simple ? a.str() : "(" + a.str() + ")";
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) out.push_back(piece);
  if (!text.empty() && text.back() == ',') out.push_back("");
  return out;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

int cmd_info(const std::string& file, std::ostream& out) {
  RingPtr ring = load_ring(file);
  const JacobiData& d = jacobi_data(*ring);
  out << "n=" << ring->nvars() << " m=" << ring->generator_count() << " r=" << d.r
      << " dim=" << ring->dimension() << " smooth=" << yesno(is_smooth(*ring))
      << " generators=" << d.rows_r.size() * d.cols_r1.size() << "\n";
  return 0;
}

int cmd_rank(const std::string& file, std::ostream& out) {
  RingPtr ring = load_ring(file);
  const JacobiData& d = jacobi_data(*ring);
  out << "r=" << d.r << "\n";
  auto line = [&](const char* label, const std::vector<IndexTuple>& list) {
    out << label << ":";
    for (const IndexTuple& t : list) out << " " << t.str();
    out << "\n";
  };
  line("row tuples", d.rows_r);
  line("column tuples", d.cols_r);
  line("critical column tuples", d.cols_r1);
  return 0;
}

int cmd_ideals(const std::string& file, int k, bool k_given, std::ostream& out,
               std::ostream& err) {
  RingPtr ring = load_ring(file);
  int r = rank(*ring);
  if (k_given && (k < 0 || k > r)) {
    err << "--k must lie between 0 and the rank " << r << "\n";
    return 2;
  }
  auto print_k = [&](int size) {
    const JacobianIdeal& a = jacobian_ideal(*ring, size);
    out << "k=" << size << ":";
    if (a.gb.is_unit()) {
      out << " 1";
    } else if (a.gb.elements().empty()) {
      out << " 0";
    } else {
      bool first = true;
      for (const Polynomial& p : a.gb.elements()) {
        out << (first ? " " : ", ") << to_string(p, ring->variables());
        first = false;
      }
    }
    out << "\n";
  };
  if (k_given) {
    print_k(k);
  } else {
    for (int size = 1; size <= r; ++size) print_k(size);
  }
  return 0;
}

int cmd_smooth(const std::string& file, std::ostream& out) {
  RingPtr ring = load_ring(file);
  bool s = is_smooth(*ring);
  out << "smooth=" << yesno(s) << "\n";
  return s ? 0 : 1;
}

int cmd_derivations(const std::string& file, std::ostream& out) {
  RingPtr ring = load_ring(file);
  for (const NaturalGenerator& g : natural_generators(*ring))
    out << symbol_text(g.rows, g.cols) << " = " << g.derivation.str() << "\n";
  return 0;
}

int cmd_relations(const std::string& file, std::ostream& out) {
  RingPtr ring = load_ring(file);
  for (const Relation& rel : relation_instances(*ring))
    out << relation_lhs(*ring, rel).str() << " = " << relation_rhs(*ring, rel).str()
        << "\n";
  return 0;
}

int cmd_presentation(const std::string& file, bool as_json, std::ostream& out) {
  RingPtr ring = load_ring(file);
  PresentationDoc doc = presentation(*ring);
  if (as_json) {
    out << presentation_to_json(doc);
    return 0;
  }
  out << "variables:";
  for (std::size_t k = 0; k < doc.variables.size(); ++k)
    out << (k ? ", " : " ") << doc.variables[k];
  out << "\n";
  out << "relations:";
  if (doc.rd1.empty()) out << " none";
  for (std::size_t k = 0; k < doc.rd1.size(); ++k)
    out << (k ? ", " : " ") << to_string(doc.rd1[k], doc.variables);
  out << "\n";
  out << "symbols:";
  for (std::size_t k = 0; k < doc.d_symbols.size(); ++k)
    out << (k ? ", " : " ") << symbol_text(doc.d_symbols[k].rows, doc.d_symbols[k].cols);
  out << "\n";
  out << "straightening:\n";
  for (const Rd2Entry& e : doc.rd2) {
    const std::string d = symbol_text(e.rows, e.cols);
    const std::string& x = doc.variables[static_cast<std::size_t>(e.k)];
    out << "  " << d << "*" << x << " = " << x << "*" << d;
    if (!e.constant.is_zero()) out << " + " << residue_text(e.constant);
    out << "\n";
  }
  out << "rewriting:\n";
  for (const Relation& rel : doc.rd3)
    out << "  " << relation_lhs(*ring, rel).str() << " = "
        << relation_rhs(*ring, rel).str() << "\n";
  return 0;
}

int cmd_verify(const std::string& file, const std::string& suite, std::ostream& out,
               std::ostream& err) {
  if (!suite.empty() && !is_suite_name(suite)) {
    err << "unknown suite: " << suite << "\n";
    err << "known suites:";
    for (const std::string& name : suite_names()) err << " " << name;
    err << "\n";
    return 2;
  }
  RingPtr ring = load_ring(file);
  std::vector<SuiteResult> results = run_property_suites(ring, suite);
  bool all = true;
  for (const SuiteResult& res : results) {
    out << "suite " << res.name << ": " << (res.passed ? "pass" : "FAIL");
    if (!res.passed) out << " (" << res.detail << ")";
    out << "\n";
    all = all && res.passed;
  }
  if (!all) return 1;
  if (suite.empty())
    out << "all " << results.size() << " property suites passed\n";
  else
    out << "suite " << suite << " passed\n";
  return 0;
}

int cmd_apply(const std::string& file, const std::string& op_word,
              const std::string& to_poly, std::ostream& out) {
  RingPtr ring = load_ring(file);
  OperatorExpr e = parse_operator(op_word, ring);
  out << e.apply(ring->project(to_poly)).str() << "\n";
  return 0;
}

int cmd_member(const std::string& file, const std::string& coeff_text,
               std::ostream& out) {
  RingPtr ring = load_ring(file);
  std::vector<std::string> pieces = split_commas(coeff_text);
  if (static_cast<int>(pieces.size()) != ring->nvars())
    throw ParseError("expected " + std::to_string(ring->nvars()) +
                         " comma-separated coefficients",
                     0);
  std::vector<Residue> coeffs;
  for (const std::string& p : pieces) coeffs.push_back(ring->project(p));
  if (!is_derivation(*ring, coeffs)) {
    out << "derivation=false\n";
    return 1;
  }
  bool member = in_natural_submodule(Derivation(ring, coeffs));
  out << "derivation=true member=" << yesno(member) << "\n";
  return member ? 0 : 1;
}

int cmd_point(const std::string& file, const std::string& at_text, std::ostream& out) {
  RingPtr ring = load_ring(file);
  std::vector<std::string> pieces = split_commas(at_text);
  if (static_cast<int>(pieces.size()) != ring->nvars())
    throw ParseError("expected " + std::to_string(ring->nvars()) +
                         " comma-separated coordinates",
                     0);
  std::vector<Rational> point;
  for (const std::string& p : pieces) {
    std::size_t a = p.find_first_not_of(" \t");
    std::size_t b = p.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty coordinate", 0);
    try {
      point.push_back(Rational::from_string(p.substr(a, b - a + 1)));
    } catch (const Error&) {
      throw ParseError("bad coordinate: " + p, 0);
    }
  }
  PointReport rep = point_report(*ring, point);
  if (!rep.on_variety) {
    out << "on_variety=false\n";
    return 1;
  }
  out << "on_variety=true singular=" << yesno(rep.singular)
      << " tangent_dim=" << rep.tangent_dim << "\n";
  return 0;
}

int cmd_catalog(const std::string& dump, std::ostream& out, std::ostream& err) {
  if (!dump.empty()) {
    const CatalogEntry* e = catalog_find(dump);
    if (!e) {
      err << "no catalog entry named " << dump << "\n";
      return 2;
    }
    out << variety_to_json(e->variety);
    return 0;
  }
  for (const CatalogEntry& e : catalog()) {
    out << e.variety.name << ": variables";
    for (std::size_t k = 0; k < e.variety.variables.size(); ++k)
      out << (k ? "," : " ") << e.variety.variables[k];
    out << "; relations";
    if (e.variety.generators.empty()) out << " none";
    for (std::size_t k = 0; k < e.variety.generators.size(); ++k)
      out << (k ? ", " : " ") << e.variety.generators[k];
    out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact derivations and differential operator presentations of affine varieties"};
  app.name("diffop");
  app.require_subcommand(1);

  std::string file;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "variety file or catalog name")->required();
    return sub;
  };

  CLI::App* c_info = with_file(app.add_subcommand("info", "one-line variety summary"));
  CLI::App* c_rank = with_file(app.add_subcommand("rank", "rank and index tuple lists"));
  CLI::App* c_ideals =
      with_file(app.add_subcommand("ideals", "reduced bases of the minor ideals"));
  int k_opt = 0;
  CLI::Option* k_flag = c_ideals->add_option("--k", k_opt, "single minor size");
  CLI::App* c_smooth = with_file(app.add_subcommand("smooth", "smoothness verdict"));
  CLI::App* c_deriv =
      with_file(app.add_subcommand("derivations", "natural derivation generators"));
  CLI::App* c_rel =
      with_file(app.add_subcommand("relations", "rewriting relations between symbols"));
  CLI::App* c_pres =
      with_file(app.add_subcommand("presentation", "generators and defining relations"));
  bool as_json = false;
  c_pres->add_flag("--json", as_json, "emit machine-readable JSON");
  CLI::App* c_verify = with_file(app.add_subcommand("verify", "run the property suites"));
  std::string suite;
  c_verify->add_option("--suite", suite, "run a single suite");
  CLI::App* c_apply =
      with_file(app.add_subcommand("apply", "apply an operator word to a polynomial"));
  std::string op_word, to_poly;
  c_apply->add_option("--op", op_word, "operator word")->required();
  c_apply->add_option("--to", to_poly, "polynomial argument")->required();
  CLI::App* c_member = with_file(
      app.add_subcommand("member", "derivation and submodule membership of a vector"));
  std::string coeff_text;
  c_member->add_option("--derivation", coeff_text, "comma-separated coefficients")
      ->required();
  CLI::App* c_point =
      with_file(app.add_subcommand("point", "tangent space report at a rational point"));
  std::string at_text;
  c_point->add_option("--at", at_text, "comma-separated coordinates")->required();
  CLI::App* c_catalog = app.add_subcommand("catalog", "list built-in varieties");
  std::string dump;
  c_catalog->add_option("--dump", dump, "print the named entry as a variety file");

  std::vector<const char*> argv;
  argv.push_back("diffop");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_info)) return cmd_info(file, out);
    if (app.got_subcommand(c_rank)) return cmd_rank(file, out);
    if (app.got_subcommand(c_ideals))
      return cmd_ideals(file, k_opt, k_flag->count() > 0, out, err);
    if (app.got_subcommand(c_smooth)) return cmd_smooth(file, out);
    if (app.got_subcommand(c_deriv)) return cmd_derivations(file, out);
    if (app.got_subcommand(c_rel)) return cmd_relations(file, out);
    if (app.got_subcommand(c_pres)) return cmd_presentation(file, as_json, out);
    if (app.got_subcommand(c_verify)) return cmd_verify(file, suite, out, err);
    if (app.got_subcommand(c_apply)) return cmd_apply(file, op_word, to_poly, out);
    if (app.got_subcommand(c_member)) return cmd_member(file, coeff_text, out);
    if (app.got_subcommand(c_point)) return cmd_point(file, at_text, out);
    if (app.got_subcommand(c_catalog)) return cmd_catalog(dump, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace diffop
