#include "diffop/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

#include "diffop/error.hpp"
#include "diffop/groebner.hpp"

namespace diffop {

namespace {

void check_same_ring(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.ring().get() != b.ring().get()) throw Error("operator ring mismatch");
}

std::string index_list(const IndexTuple& t) {
  std::string out;
  for (int k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k] + 1);
  }
  return out;
}

std::string atom_text(const Atom& at) {
  if (const MulAtom* m = std::get_if<MulAtom>(&at)) {
    const auto& terms = m->value.rep().terms();
    bool simple = terms.size() == 1 && terms[0].coeff.sign() > 0;
    std::string s = m->value.str();
    return simple ? s : "(" + s + ")";
  }
  const GenAtom& g = std::get<GenAtom>(at);
  return "d[" + index_list(g.rows) + ";" + index_list(g.cols) + "]";
}

}  // namespace

OperatorExpr::OperatorExpr(RingPtr ring, std::vector<OpTerm> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw Error("operator expression needs a ring");
  for (const OpTerm& t : terms_)
    for (const Atom& at : t.word)
      if (const MulAtom* m = std::get_if<MulAtom>(&at))
        if (m->value.ring().get() != ring_.get())
          throw Error("operator ring mismatch");
}

OperatorExpr OperatorExpr::zero(RingPtr ring) {
  return OperatorExpr(std::move(ring), {});
}

OperatorExpr OperatorExpr::identity(RingPtr ring) {
  return OperatorExpr(std::move(ring), {OpTerm{Rational(1), {}}});
}

OperatorExpr OperatorExpr::multiplication(const Residue& value) {
  return OperatorExpr(value.ring(), {OpTerm{Rational(1), {MulAtom{value}}}});
}

OperatorExpr OperatorExpr::generator(RingPtr ring, IndexTuple rows, IndexTuple cols) {
  const JacobiData& d = jacobi_data(*ring);
  if (rows.size() != d.r || cols.size() != d.r + 1)
    throw Error("derivation symbol needs rank row indices and rank+1 column indices");
  if (!rows.empty() && rows[rows.size() - 1] >= ring->generator_count())
    throw Error("derivation symbol row index out of range");
  if (cols[cols.size() - 1] >= ring->nvars())
    throw Error("derivation symbol column index out of range");
  return OperatorExpr(std::move(ring),
                      {OpTerm{Rational(1), {GenAtom{std::move(rows), std::move(cols)}}}});
}

int OperatorExpr::order_bound() const {
  int best = 0;
  for (const OpTerm& t : terms_) {
    int count = 0;
    for (const Atom& at : t.word)
      if (std::holds_alternative<GenAtom>(at)) ++count;
    best = std::max(best, count);
  }
  return best;
}

OperatorExpr OperatorExpr::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ring_);
  std::vector<OpTerm> out = terms_;
  for (OpTerm& t : out) t.coeff = t.coeff * c;
  return OperatorExpr(ring_, std::move(out));
}

OperatorExpr OperatorExpr::pow(unsigned e) const {
  OperatorExpr acc = identity(ring_);
  for (unsigned k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

OperatorExpr OperatorExpr::operator-() const { return scaled(Rational(-1)); }

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  check_same_ring(a, b);
  std::vector<OpTerm> out = a.terms_;
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return OperatorExpr(a.ring_, std::move(out));
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) {
  return a + (-b);
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  check_same_ring(a, b);
  std::vector<OpTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const OpTerm& ta : a.terms_)
    for (const OpTerm& tb : b.terms_) {
      OpTerm t{ta.coeff * tb.coeff, ta.word};
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      out.push_back(std::move(t));
    }
  return OperatorExpr(a.ring_, std::move(out));
}

Residue OperatorExpr::apply(const Residue& a) const {
  if (a.ring().get() != ring_.get()) throw Error("operator ring mismatch");
  Residue out = ring_->zero();
  for (const OpTerm& t : terms_) {
    Residue v = a;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      if (const MulAtom* m = std::get_if<MulAtom>(&*it)) {
        v = m->value * v;
      } else {
        const GenAtom& g = std::get<GenAtom>(*it);
        v = natural_derivation(*ring_, g.rows, g.cols).apply(v);
      }
    }
    out += v.scaled(t.coeff);
  }
  return out;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const OpTerm& term = terms_[t];
    bool neg = term.coeff.sign() < 0;
    if (t == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = neg ? -term.coeff : term.coeff;
    std::string body;
    for (std::size_t k = 0; k < term.word.size(); ++k) {
      if (k) body += "*";
      body += atom_text(term.word[k]);
    }
    if (body.empty())
      out += mag.str();
    else if (mag.is_one())
      out += body;
    else
      out += mag.str() + "*" + body;
  }
  return out;
}

bool operators_equal_up_to_order(const OperatorExpr& a, const OperatorExpr& b,
                                 int bound) {
  check_same_ring(a, b);
  if (bound < 0) throw Error("order bound must be nonnegative");
  if (a.order_bound() > bound || b.order_bound() > bound)
    throw Error("order bound exceeded by an operator word");
  const CoordinateRing& ring = *a.ring();
  for (const Monomial& m : monomials_up_to_degree(ring.nvars(), bound)) {
    Residue v = ring.project(
        Polynomial::from_terms(ring.nvars(), ring.order(), {Term{m, Rational(1)}}));
    if (!(a.apply(v) == b.apply(v))) return false;
  }
  return true;
}

namespace {

struct OpParser {
  const std::string& text;
  const RingPtr& ring;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000000L) fail("number too large");
      ++pos;
    }
    return v;
  }

  Rational parse_rational() {
    long num = parse_nat();
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      skip_ws();
      std::size_t at = pos;
      long den = parse_nat();
      if (den == 0) throw ParseError("zero denominator", at);
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  std::vector<int> parse_index_list(char terminator) {
    std::vector<int> out;
    if (peek() == terminator) return out;
    for (;;) {
      skip_ws();
      std::size_t at = pos;
      long v = parse_nat();
      if (v < 1) throw ParseError("indices are 1-based", at);
      out.push_back(static_cast<int>(v) - 1);
      if (!eat(',')) break;
    }
    return out;
  }

  OperatorExpr parse_dsymbol() {
    eat('[');
    std::vector<int> rows = parse_index_list(';');
    if (!eat(';')) fail("expected ; in derivation symbol");
    std::vector<int> cols = parse_index_list(']');
    if (!eat(']')) fail("expected ] in derivation symbol");
    const JacobiData& d = jacobi_data(*ring);
    if (static_cast<int>(rows.size()) != d.r ||
        static_cast<int>(cols.size()) != d.r + 1)
      fail("derivation symbol needs rank row indices and rank+1 column indices");
    for (int v : rows)
      if (v >= ring->generator_count()) fail("derivation symbol row index out of range");
    for (int v : cols)
      if (v >= ring->nvars()) fail("derivation symbol column index out of range");
    int sr = sort_tuple_sign(rows);
    int sc = sort_tuple_sign(cols);
    if (sr < 0 || sc < 0) return OperatorExpr::zero(ring);
    OperatorExpr g = OperatorExpr::generator(ring, IndexTuple(rows), IndexTuple(cols));
    return (sr + sc) % 2 == 1 ? -g : g;
  }

  OperatorExpr parse_primary() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      eat('(');
      OperatorExpr e = parse_expr();
      if (!eat(')')) fail("expected )");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return OperatorExpr::identity(ring).scaled(parse_rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      std::string name = parse_ident();
      if (name == "d" && peek() == '[') return parse_dsymbol();
      const auto& vars = ring->variables();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) {
        pos = start;
        fail("unknown identifier " + name);
      }
      return OperatorExpr::multiplication(
          ring->variable(static_cast<int>(it - vars.begin())));
    }
    fail("unexpected character");
  }

  OperatorExpr parse_factor() {
    OperatorExpr base = parse_primary();
    if (eat('^')) {
      std::size_t at = pos;
      long e = parse_nat();
      if (e > 64) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  OperatorExpr parse_term() {
    OperatorExpr acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  OperatorExpr parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    OperatorExpr acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        break;
    }
    return acc;
  }
};

}  // namespace

OperatorExpr parse_operator(const std::string& text, const RingPtr& ring) {
  OpParser p{text, ring};
  if (p.peek() == '\0') throw ParseError("empty operator expression", 0);
  OperatorExpr e = p.parse_expr();
  if (p.peek() != '\0') throw ParseError("unexpected trailing input", p.pos);
  return e;
}

}  // namespace diffop
