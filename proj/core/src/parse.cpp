#include "diffop/parse.hpp"

#include <algorithm>
#include <cctype>

namespace diffop {

bool valid_variable_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& variables,
             MonomialOrder order)
      : text_(text), vars_(variables), order_(order) {}

  Polynomial run() {
    Polynomial p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("expected '+', '-', or end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  Polynomial parse_poly() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      negate = (c == '-');
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    while (true) {
      char s = peek();
      if (s != '+' && s != '-') break;
      ++pos_;
      Polynomial t = parse_term();
      acc = (s == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_poly();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_power();
    fail("expected a rational, a variable, or '('");
  }

  Polynomial parse_rational() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    std::size_t digits_from = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_from) fail("expected digits");
    std::string lit = text_.substr(start, pos_ - start);
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_from) fail("expected denominator digits");
      std::string den = text_.substr(den_from, pos_ - den_from);
      if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
        throw ParseError("zero denominator", den_from);
      lit += "/" + den;
    }
    return Polynomial::constant(nvars(), order_, Rational::from_string(lit));
  }

  Polynomial parse_power() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
      throw ParseError("unknown identifier '" + name + "'", start);
    int k = static_cast<int>(it - vars_.begin());
    unsigned e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t exp_from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == exp_from) fail("expected exponent digits");
      e = static_cast<unsigned>(std::stoul(text_.substr(exp_from, pos_ - exp_from)));
    }
    return Polynomial::variable(nvars(), order_, k).pow(e);
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables,
                            MonomialOrder order) {
  return PolyParser(text, variables, order).run();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& variables) {
  if (static_cast<int>(variables.size()) != p.nvars())
    throw Error("variable list does not match polynomial");
  if (p.is_zero()) return "0";

  std::vector<Term> terms = p.terms();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare(a.mon, b.mon, MonomialOrder::kDegRevLex) > 0;
  });

  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    bool neg = t.coeff.sign() < 0;
    Rational mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mon;
    for (int k = 0; k < p.nvars(); ++k) {
      int e = t.mon.exp(k);
      if (e == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += variables[static_cast<std::size_t>(k)];
      if (e > 1) mon += "^" + std::to_string(e);
    }
    if (mon.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mon;
    } else {
      out += mag.str() + "*" + mon;
    }
  }
  return out;
}

}  // namespace diffop
