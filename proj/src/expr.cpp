#include "hsumset/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "hsumset/int_set.hpp"

namespace hsumset::expr {

std::size_t Bindings::index(char var) {
  if (var < 'a' || var > 'z') throw std::invalid_argument(std::string("invalid variable '") + var + "'");
  return static_cast<std::size_t>(var - 'a');
}

std::int64_t Bindings::get(char var) const {
  const auto i = index(var);
  if (!bound_[i]) throw std::invalid_argument(std::string("unbound variable '") + var + "'");
  return values_[i];
}

Poly Poly::variable(char v) {
  if (v < 'a' || v > 'z') throw std::invalid_argument(std::string("invalid variable '") + v + "'");
  Poly p;
  p.terms_.emplace_back(std::string(1, v), 1);
  return p;
}

Poly Poly::constant(std::int64_t c) {
  Poly p;
  p.terms_.emplace_back("", c);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::map<std::string, std::int64_t> acc;
  for (auto& [mono, coef] : terms_) {
    std::string m = mono;
    std::sort(m.begin(), m.end());
    acc[m] += coef;
  }
  terms_.clear();
  for (auto& [m, c] : acc) {
    if (c != 0) terms_.emplace_back(m, c);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * constant(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ma, ca] : terms_) {
    for (auto& [mb, cb] : o.terms_) r.terms_.emplace_back(ma + mb, ca * cb);
  }
  r.normalize();
  return r;
}

std::int64_t Poly::eval(const Bindings& b) const {
  std::int64_t total = 0;
  for (auto& [mono, coef] : terms_) {
    std::int64_t v = coef;
    for (char c : mono) v = checked_mul(v, b.get(c));
    total = checked_add(total, v);
  }
  return total;
}

std::size_t Poly::degree() const noexcept {
  std::size_t d = 0;
  for (auto& [mono, coef] : terms_) d = std::max(d, mono.size());
  return d;
}

std::string Poly::variables() const {
  std::string vars;
  for (auto& [mono, coef] : terms_) vars += mono;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expression() {
    Poly acc = Poly::constant(0);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = sign < 0 ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const auto exponent = number();
      Poly r = Poly::constant(1);
      for (std::int64_t i = 0; i < exponent; ++i) r = r * base;
      return r;
    }
    return base;
  }

  std::int64_t number() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected number");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(number());
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Poly::variable(c);
    }
    fail("expected operand");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

bool Atom::holds(const Bindings& b) const { return violation(b) == 0; }

std::int64_t Atom::violation(const Bindings& b) const {
  const auto l = lhs.eval(b);
  const auto r = rhs.eval(b);
  switch (rel) {
    case Rel::Ge: return std::max<std::int64_t>(0, r - l);
    case Rel::Le: return std::max<std::int64_t>(0, l - r);
    case Rel::Gt: return std::max<std::int64_t>(0, r + 1 - l);
    case Rel::Lt: return std::max<std::int64_t>(0, l + 1 - r);
    case Rel::Eq: return l > r ? l - r : r - l;
  }
  return 0;
}

bool Clause::holds(const Bindings& b) const {
  return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.holds(b); });
}

std::int64_t Clause::violation(const Bindings& b) const {
  std::int64_t v = 0;
  for (auto& a : atoms) v += a.violation(b);
  return v;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` at bracket depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

// True when text is "( ... )" with the outer parentheses matching.
bool wrapped_in_parens(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && i + 1 < text.size()) return false;
  }
  return true;
}

// Alternatives for one atom text; each alternative is a conjunction.
std::vector<std::vector<Atom>> parse_atom(std::string_view text) {
  if (wrapped_in_parens(text)) {
    std::vector<std::vector<Atom>> alts;
    for (auto& clause : Condition::parse(text.substr(1, text.size() - 2)).any_of) alts.push_back(clause.atoms);
    return alts;
  }
  if (auto at = text.find(" in "); at != std::string_view::npos) {
    const Poly subject = Poly::parse(trim(text.substr(0, at)));
    auto rest = trim(text.substr(at + 4));
    if (rest.size() < 2) throw std::invalid_argument("bad membership: " + std::string(text));
    const char open = rest.front(), close = rest.back();
    auto items = split_top(rest.substr(1, rest.size() - 2), ',');
    if (open == '[' && close == ']') {
      if (items.size() != 2) throw std::invalid_argument("interval needs two ends: " + std::string(text));
      return {{Atom{subject, Rel::Ge, Poly::parse(items[0])}, Atom{subject, Rel::Le, Poly::parse(items[1])}}};
    }
    if (open == '{' && close == '}') {
      std::vector<std::vector<Atom>> alts;
      for (auto item : items) alts.push_back({Atom{subject, Rel::Eq, Poly::parse(item)}});
      return alts;
    }
    throw std::invalid_argument("bad membership: " + std::string(text));
  }
  // Relation chain e0 op e1 op e2 ...
  std::vector<Poly> operands;
  std::vector<Rel> rels;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '<' && c != '>' && c != '=') continue;
    Rel r;
    std::size_t len = 1;
    const bool eq_next = i + 1 < text.size() && text[i + 1] == '=';
    if (c == '<') r = eq_next ? Rel::Le : Rel::Lt;
    else if (c == '>') r = eq_next ? Rel::Ge : Rel::Gt;
    else r = Rel::Eq;
    if (c != '=' && eq_next) len = 2;
    operands.push_back(Poly::parse(trim(text.substr(start, i - start))));
    rels.push_back(r);
    i += len - 1;
    start = i + 1;
  }
  operands.push_back(Poly::parse(trim(text.substr(start))));
  if (rels.empty()) throw std::invalid_argument("condition without relation: " + std::string(text));
  std::vector<Atom> conj;
  for (std::size_t i = 0; i < rels.size(); ++i) conj.push_back(Atom{operands[i], rels[i], operands[i + 1]});
  return {conj};
}

}  // namespace

Condition Condition::parse(std::string_view text) {
  Condition cond;
  cond.source = std::string(trim(text));
  for (auto alt : split_top(text, '|')) {
    std::vector<Clause> partial{Clause{}};
    for (auto atom_text : split_top(alt, '&')) {
      if (atom_text.empty()) continue;
      const auto options = parse_atom(atom_text);
      std::vector<Clause> next;
      for (auto& base : partial) {
        for (auto& opt : options) {
          Clause c = base;
          c.atoms.insert(c.atoms.end(), opt.begin(), opt.end());
          next.push_back(std::move(c));
        }
      }
      partial = std::move(next);
    }
    cond.any_of.insert(cond.any_of.end(), partial.begin(), partial.end());
  }
  return cond;
}

bool Condition::holds(const Bindings& b) const {
  return std::any_of(any_of.begin(), any_of.end(), [&](const Clause& c) { return c.holds(b); });
}

std::int64_t Condition::violation(const Bindings& b) const {
  std::int64_t best = -1;
  for (auto& c : any_of) {
    const auto v = c.violation(b);
    if (best < 0 || v < best) best = v;
  }
  return best < 0 ? 0 : best;
}

}  // namespace hsumset::expr
