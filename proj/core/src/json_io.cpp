#include "diffop/json_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "diffop/error.hpp"
#include "diffop/parse.hpp"

namespace diffop {

namespace {

using ordered = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg, 0); }

const ordered& field(const ordered& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const ordered& j, const char* key) {
  const ordered& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const ordered& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const ordered& e : v) {
    if (!e.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

bool file_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

ordered tuple_json(const IndexTuple& t) {
  ordered a = ordered::array();
  for (int x : t.indices()) a.push_back(x + 1);
  return a;
}

IndexTuple tuple_field(const ordered& j, const char* key) {
  const ordered& v = field(j, key);
  if (!v.is_array()) bad(std::string("field \"") + key + "\" must be an index array");
  std::vector<int> idx;
  for (const ordered& e : v) {
    if (!e.is_number_integer()) bad(std::string("field \"") + key + "\" must hold integers");
    long x = e.get<long>();
    if (x < 1 || x > 1000000) bad(std::string("index out of range in \"") + key + "\"");
    idx.push_back(static_cast<int>(x) - 1);
  }
  try {
    return IndexTuple(std::move(idx));
  } catch (const Error& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

ordered parse_text(const std::string& text) {
  ordered j = ordered::parse(text, nullptr, false);
  if (j.is_discarded()) bad("invalid JSON");
  return j;
}

}  // namespace

VarietyFile variety_from_json(const std::string& text) {
  ordered j = parse_text(text);
  if (!j.is_object()) bad("a variety file must be a JSON object");
  VarietyFile vf;
  vf.name = string_field(j, "name");
  vf.variables = string_list(field(j, "variables"), "\"variables\"");
  if (vf.variables.empty()) bad("a variety file needs at least one variable");
  std::set<std::string> seen;
  for (const std::string& v : vf.variables) {
    if (!file_identifier(v)) bad("invalid variable name: " + v);
    if (!seen.insert(v).second) bad("duplicate variable name: " + v);
  }
  vf.generators = string_list(field(j, "generators"), "\"generators\"");
  if (j.contains("order")) {
    vf.order = string_field(j, "order");
    try {
      order_from_name(vf.order);
    } catch (const Error&) {
      bad("unknown monomial order: " + vf.order);
    }
  }
  return vf;
}

std::string variety_to_json(const VarietyFile& vf) {
  ordered j;
  j["name"] = vf.name;
  j["variables"] = vf.variables;
  j["generators"] = vf.generators;
  j["order"] = vf.order;
  return j.dump(2) + "\n";
}

VarietyFile load_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open variety file: " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return variety_from_json(ss.str());
}

std::string presentation_to_json(const PresentationDoc& doc) {
  const std::vector<std::string>& vars = doc.variables;
  ordered j;
  j["generators"]["variables"] = vars;
  ordered symbols = ordered::array();
  for (const DSymbol& s : doc.d_symbols) {
    ordered e;
    e["i"] = tuple_json(s.rows);
    e["j"] = tuple_json(s.cols);
    symbols.push_back(std::move(e));
  }
  j["generators"]["d_symbols"] = std::move(symbols);
  ordered rd1 = ordered::array();
  for (const Polynomial& f : doc.rd1) rd1.push_back(to_string(f, vars));
  j["rd1"] = std::move(rd1);
  ordered rd2 = ordered::array();
  for (const Rd2Entry& e : doc.rd2) {
    ordered o;
    o["i"] = tuple_json(e.rows);
    o["j"] = tuple_json(e.cols);
    o["k"] = e.k + 1;
    o["constant"] = to_string(e.constant.rep(), vars);
    rd2.push_back(std::move(o));
  }
  j["rd2"] = std::move(rd2);
  ordered rd3 = ordered::array();
  for (const Relation& rel : doc.rd3) {
    ordered o;
    o["i"] = tuple_json(rel.i);
    o["iprime"] = tuple_json(rel.iprime);
    o["j"] = tuple_json(rel.j);
    o["jprime"] = tuple_json(rel.jprime);
    o["lhs_minor"] = to_string(rel.lhs_minor.rep(), vars);
    ordered terms = ordered::array();
    for (const RelationTerm& t : rel.terms) {
      ordered te;
      te["sign"] = t.sign;
      te["minor"] = to_string(t.minor.rep(), vars);
      te["target_j"] = tuple_json(t.target_cols);
      terms.push_back(std::move(te));
    }
    o["terms"] = std::move(terms);
    rd3.push_back(std::move(o));
  }
  j["rd3"] = std::move(rd3);
  return j.dump(2) + "\n";
}

PresentationDoc presentation_from_json(const std::string& text, const RingPtr& ring) {
  if (!ring) throw Error("presentation deserialization needs a ring");
  ordered j = parse_text(text);
  if (!j.is_object()) bad("a presentation must be a JSON object");
  const ordered& gen = field(j, "generators");
  PresentationDoc doc;
  doc.ring = ring;
  doc.variables = string_list(field(gen, "variables"), "\"variables\"");
  if (doc.variables != ring->variables())
    bad("presentation variables do not match the ring");
  for (const ordered& e : field(gen, "d_symbols")) {
    if (!e.is_object()) bad("\"d_symbols\" entries must be objects");
    doc.d_symbols.push_back(DSymbol{tuple_field(e, "i"), tuple_field(e, "j")});
  }
  for (const ordered& e : field(j, "rd1")) {
    if (!e.is_string()) bad("\"rd1\" must hold polynomial strings");
    doc.rd1.push_back(
        parse_polynomial(e.get<std::string>(), doc.variables, ring->order()));
  }
  for (const ordered& e : field(j, "rd2")) {
    if (!e.is_object()) bad("\"rd2\" entries must be objects");
    const ordered& kf = field(e, "k");
    if (!kf.is_number_integer()) bad("field \"k\" must be an integer");
    long k = kf.get<long>();
    if (k < 1 || k > ring->nvars()) bad("field \"k\" out of range");
    doc.rd2.push_back(Rd2Entry{tuple_field(e, "i"), tuple_field(e, "j"),
                               static_cast<int>(k) - 1,
                               ring->project(string_field(e, "constant"))});
  }
  for (const ordered& e : field(j, "rd3")) {
    if (!e.is_object()) bad("\"rd3\" entries must be objects");
    Relation rel{tuple_field(e, "i"), tuple_field(e, "iprime"), tuple_field(e, "j"),
                 tuple_field(e, "jprime"), ring->project(string_field(e, "lhs_minor")),
                 {}};
    for (const ordered& te : field(e, "terms")) {
      if (!te.is_object()) bad("\"terms\" entries must be objects");
      const ordered& sf = field(te, "sign");
      if (!sf.is_number_integer()) bad("field \"sign\" must be an integer");
      long sign = sf.get<long>();
      if (sign != 1 && sign != -1) bad("field \"sign\" must be 1 or -1");
      rel.terms.push_back(RelationTerm{static_cast<int>(sign),
                                       ring->project(string_field(te, "minor")),
                                       tuple_field(te, "target_j")});
    }
    doc.rd3.push_back(std::move(rel));
  }
  return doc;
}

}  // namespace diffop
