#include "knfam/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knfam {

Rational rational_from_string(const std::string &text) {
  try {
    Rational r(text);
    return r;
  } catch (const std::exception &) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

std::string rational_to_string(const Rational &r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

static const std::array<std::string, 10> param_names = {
    "a", "alpha", "b", "e", "e1", "e2", "g2", "g3", "s", "t"};

const std::string &param_name(ParamId id) {
  return param_names[static_cast<std::size_t>(id)];
}

ParamId param_from_name(const std::string &name) {
  for (std::size_t i = 0; i < param_names.size(); ++i)
    if (param_names[i] == name)
      return static_cast<ParamId>(i);
  throw ParseError("unknown parameter '" + name + "'");
}

MultiPoly::MultiPoly(const Rational &c) {
  if (c != 0)
    m_terms.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(long long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::var(ParamId id, int exp) {
  MultiPoly p;
  if (exp < 0)
    throw Error("MultiPoly::var: negative exponent");
  if (exp == 0)
    return MultiPoly(1);
  p.m_terms.emplace(Monomial{{id, exp}}, Rational(1));
  return p;
}

MultiPoly MultiPoly::constant(const Rational &c) { return MultiPoly(c); }

bool MultiPoly::is_constant() const {
  return m_terms.empty() ||
         (m_terms.size() == 1 && m_terms.begin()->first.empty());
}

Rational MultiPoly::constant_term() const {
  auto it = m_terms.find(Monomial{});
  return it == m_terms.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial &m, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = m_terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      m_terms.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto &[m, c] : m_terms)
    r.m_terms.emplace(m, -c);
  return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  for (const auto &[m, c] : o.m_terms)
    add_term(m, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  for (const auto &[m, c] : o.m_terms)
    add_term(m, -c);
  return *this;
}

/* Merge two sorted factor lists, adding exponents of shared parameters. */
static Monomial mono_mul(const Monomial &x, const Monomial &y) {
  Monomial r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first)
      r.push_back(x[i++]);
    else if (y[j].first < x[i].first)
      r.push_back(y[j++]);
    else {
      r.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i, ++j;
    }
  }
  for (; i < x.size(); ++i)
    r.push_back(x[i]);
  for (; j < y.size(); ++j)
    r.push_back(y[j]);
  return r;
}

MultiPoly operator*(const MultiPoly &p, const MultiPoly &q) {
  MultiPoly r;
  for (const auto &[mp, cp] : p.terms())
    for (const auto &[mq, cq] : q.terms())
      r.add_term(mono_mul(mp, mq), cp * cq);
  return r;
}

bool MultiPoly::depends_on(ParamId id) const {
  for (const auto &[m, c] : m_terms)
    for (const auto &f : m)
      if (f.first == id)
        return true;
  return false;
}

int MultiPoly::degree_in(ParamId id) const {
  int d = 0;
  for (const auto &[m, c] : m_terms)
    for (const auto &f : m)
      if (f.first == id)
        d = std::max(d, f.second);
  return d;
}

MultiPoly poly_pow(const MultiPoly &p, int exp) {
  if (exp < 0)
    throw Error("poly_pow: negative exponent");
  MultiPoly r(1), base = p;
  while (exp > 0) {
    if (exp & 1)
      r *= base;
    exp >>= 1;
    if (exp)
      base *= base;
  }
  return r;
}

MultiPoly poly_substitute(const MultiPoly &p, const SubstMap &bindings) {
  MultiPoly r;
  for (const auto &[m, c] : p.terms()) {
    MultiPoly t{c};
    for (const auto &[id, exp] : m) {
      auto it = bindings.find(id);
      if (it == bindings.end())
        t *= MultiPoly::var(id, exp);
      else
        t *= poly_pow(it->second, exp);
    }
    r += t;
  }
  return r;
}

MultiPoly poly_substitute_square(const MultiPoly &p, ParamId id,
                                 const MultiPoly &q) {
  MultiPoly r;
  for (const auto &[m, c] : p.terms()) {
    MultiPoly t{c};
    for (const auto &[pid, exp] : m) {
      if (pid == id) {
        if (exp % 2 != 0)
          throw InconsistentBinding("odd power of " + param_name(id) +
                                    " under a square substitution");
        t *= poly_pow(q, exp / 2);
      } else {
        t *= MultiPoly::var(pid, exp);
      }
    }
    r += t;
  }
  return r;
}

MultiPoly poly_coefficient_of(const MultiPoly &p, ParamId id, int k) {
  MultiPoly r;
  for (const auto &[m, c] : p.terms()) {
    int exp = 0;
    Monomial rest;
    for (const auto &f : m) {
      if (f.first == id)
        exp = f.second;
      else
        rest.push_back(f);
    }
    if (exp == k)
      r.add_term(rest, c);
  }
  return r;
}

Rational poly_eval(const MultiPoly &p, const EvalPoint &point) {
  Rational r = 0;
  for (const auto &[m, c] : p.terms()) {
    Rational t = c;
    for (const auto &[id, exp] : m) {
      auto it = point.find(id);
      if (it == point.end())
        throw Error("poly_eval: unbound parameter " + param_name(id));
      Rational f = it->second;
      for (int k = 0; k < exp; ++k)
        t *= f;
    }
    r += t;
  }
  return r;
}

static std::string mono_to_string(const Monomial &m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i)
      s += "*";
    s += param_name(m[i].first);
    if (m[i].second > 1)
      s += "^" + std::to_string(m[i].second);
  }
  return s;
}

std::string poly_to_string(const MultiPoly &p) {
  if (p.is_zero())
    return "0";
  std::string s;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first)
      s += (c < 0) ? "-" : "";
    else
      s += (c < 0) ? " - " : " + ";
    if (m.empty())
      s += rational_to_string(ac);
    else if (ac == 1)
      s += mono_to_string(m);
    else
      s += rational_to_string(ac) + "*" + mono_to_string(m);
    first = false;
  }
  return s;
}

/* --- expression parser ---------------------------------------------------
   expr   := ['+'|'-'] term (('+'|'-') term)*
   term   := factor ('*' factor)*
   factor := base ('^' uint)?
   base   := uint ('/' uint)? | name | '(' expr ')'                       */

namespace {

struct Parser {
  const std::string &text;
  std::size_t pos = 0;

  explicit Parser(const std::string &t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void err(const std::string &what) {
    throw ParseError("poly_parse: " + what + " at position " +
                     std::to_string(pos) + " in '" + text + "'");
  }

  std::string read_uint() {
    skip_ws();
    std::string s;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      s += text[pos++];
    if (s.empty())
      err("expected digits");
    return s;
  }

  MultiPoly parse_base() {
    skip_ws();
    if (pos >= text.size())
      err("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_uint();
      if (eat('/')) {
        std::string den = read_uint();
        return MultiPoly(rational_from_string(num + "/" + den));
      }
      return MultiPoly(rational_from_string(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos]))))
        name += text[pos++];
      return MultiPoly::var(param_from_name(name));
    }
    if (c == '(') {
      ++pos;
      MultiPoly p = parse_expr();
      if (!eat(')'))
        err("expected ')'");
      return p;
    }
    err(std::string("unexpected character '") + c + "'");
  }

  MultiPoly parse_factor() {
    MultiPoly b = parse_base();
    if (eat('^')) {
      int exp = std::stoi(read_uint());
      return poly_pow(b, exp);
    }
    return b;
  }

  MultiPoly parse_term() {
    MultiPoly p = parse_factor();
    while (eat('*'))
      p *= parse_factor();
    return p;
  }

  MultiPoly parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MultiPoly p = parse_term();
    if (neg)
      p = -p;
    for (;;) {
      if (eat('+'))
        p += parse_term();
      else if (eat('-'))
        p -= parse_term();
      else
        break;
    }
    return p;
  }
};

} // namespace

MultiPoly poly_parse(const std::string &text) {
  Parser p(text);
  MultiPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    p.err("trailing input");
  return r;
}

} // namespace knfam
