#include "diophant/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "diophant/error.hpp"

namespace diophant {

namespace {

constexpr unsigned kMaxExponent = 4096;

enum class TokKind { Number, Ident, Symbol, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

[[noreturn]] void syntax_error(const std::string& message, const Token& at,
                               ErrorCode code = ErrorCode::SyntaxError) {
  throw SyntaxError(code, message, at.line, at.column);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    std::size_t j = i;
    if (std::isdigit(c)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = TokKind::Number;
    } else if (std::isalpha(c) || c == '_') {
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      tok.kind = TokKind::Ident;
    } else if (std::string_view("+-*^()=").find(static_cast<char>(c)) != std::string_view::npos) {
      j = i + 1;
      tok.kind = TokKind::Symbol;
    } else {
      Token bad;
      bad.line = line;
      bad.column = column;
      syntax_error(std::string("unexpected character '") + static_cast<char>(c) + "'", bad);
    }
    tok.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "and" || s == "or" || s == "not" || s == "exists" || s == "forall";
}

bool is_ring_unit(const std::string& s) { return s == "sqrtd" || s == "i"; }

/// Index K when s is "xK".
std::optional<std::size_t> free_index(const std::string& s) {
  if (s.size() < 2 || s[0] != 'x') return std::nullopt;
  if (!std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    return std::nullopt;
  }
  if (s.size() > 10) return std::nullopt;
  return static_cast<std::size_t>(std::stoull(s.substr(1)));
}

struct RawExpr {
  enum class Kind { Num, Name, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Num;
  BigInt num;
  std::string name;
  unsigned exponent = 0;
  Token at;
  std::vector<RawExpr> kids;
};

struct RawFormula {
  Formula::Kind kind = Formula::Kind::Atom;
  RawExpr lhs;
  RawExpr rhs;
  std::string name;
  Token at;
  std::vector<RawFormula> kids;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RawExpr expression_only() {
    RawExpr e = expr();
    expect_end();
    return e;
  }

  RawFormula formula_only() {
    RawFormula f = disjunction();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(const char* s) const { return peek().kind == TokKind::Symbol && peek().text == s; }
  bool at_word(const char* s) const { return peek().kind == TokKind::Ident && peek().text == s; }
  Token take() { return tokens_[pos_++]; }

  void expect_symbol(const char* s) {
    if (!at_symbol(s)) syntax_error(std::string("expected '") + s + "'" + found(), peek());
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != TokKind::End) syntax_error("unexpected trailing input" + found(), peek());
  }

  std::string found() const {
    if (peek().kind == TokKind::End) return ", found end of input";
    return ", found '" + peek().text + "'";
  }

  RawExpr expr() {
    RawExpr lhs = term();
    while (at_symbol("+") || at_symbol("-")) {
      Token op = take();
      RawExpr rhs = term();
      RawExpr node;
      node.kind = op.text == "+" ? RawExpr::Kind::Add : RawExpr::Kind::Sub;
      node.at = op;
      node.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  RawExpr term() {
    RawExpr lhs = unary();
    while (at_symbol("*")) {
      Token op = take();
      RawExpr rhs = unary();
      RawExpr node;
      node.kind = RawExpr::Kind::Mul;
      node.at = op;
      node.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  RawExpr unary() {
    if (at_symbol("-")) {
      RawExpr node;
      node.kind = RawExpr::Kind::Neg;
      node.at = take();
      node.kids.push_back(unary());
      return node;
    }
    return factor();
  }

  RawExpr factor() {
    RawExpr base = atom();
    if (at_symbol("^")) {
      Token op = take();
      if (peek().kind != TokKind::Number) syntax_error("expected a natural exponent" + found(), peek());
      Token n = take();
      if (n.text.size() > 6 || std::stoul(n.text) > kMaxExponent) {
        syntax_error("exponent larger than " + std::to_string(kMaxExponent), n);
      }
      RawExpr node;
      node.kind = RawExpr::Kind::Pow;
      node.at = op;
      node.exponent = static_cast<unsigned>(std::stoul(n.text));
      node.kids.push_back(std::move(base));
      return node;
    }
    return base;
  }

  RawExpr atom() {
    const Token& tok = peek();
    if (tok.kind == TokKind::Number) {
      RawExpr node;
      node.kind = RawExpr::Kind::Num;
      node.at = take();
      node.num = BigInt(node.at.text);
      return node;
    }
    if (tok.kind == TokKind::Ident) {
      if (is_keyword(tok.text)) syntax_error("unexpected keyword '" + tok.text + "'", tok);
      RawExpr node;
      node.kind = RawExpr::Kind::Name;
      node.at = take();
      node.name = node.at.text;
      return node;
    }
    if (at_symbol("(")) {
      take();
      RawExpr inner = expr();
      expect_symbol(")");
      return inner;
    }
    syntax_error("expected a number, variable or '('" + found(), tok);
  }

  RawFormula disjunction() {
    RawFormula lhs = conjunction();
    while (at_word("or")) {
      RawFormula node;
      node.kind = Formula::Kind::Or;
      node.at = take();
      RawFormula rhs = conjunction();
      node.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  RawFormula conjunction() {
    RawFormula lhs = primary();
    while (at_word("and")) {
      RawFormula node;
      node.kind = Formula::Kind::And;
      node.at = take();
      RawFormula rhs = primary();
      node.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  RawFormula primary() {
    if (at_word("exists") || at_word("forall")) {
      RawFormula node;
      node.kind = at_word("exists") ? Formula::Kind::Exists : Formula::Kind::Forall;
      node.at = take();
      if (peek().kind != TokKind::Ident || is_keyword(peek().text)) {
        syntax_error("expected a variable name after '" + node.at.text + "'" + found(), peek());
      }
      if (is_ring_unit(peek().text)) syntax_error("'" + peek().text + "' is reserved", peek());
      node.name = take().text;
      expect_symbol("(");
      node.kids.push_back(disjunction());
      expect_symbol(")");
      return node;
    }
    if (at_word("not")) {
      RawFormula node;
      node.kind = Formula::Kind::Not;
      node.at = take();
      node.kids.push_back(primary());
      return node;
    }
    const std::size_t save = pos_;
    try {
      RawFormula node;
      node.kind = Formula::Kind::Atom;
      node.at = peek();
      node.lhs = expr();
      expect_symbol("=");
      node.rhs = expr();
      return node;
    } catch (const SyntaxError& as_atom) {
      if (tokens_[save].kind != TokKind::Symbol || tokens_[save].text != "(") throw;
      const std::size_t atom_fail = pos_;
      pos_ = save + 1;
      try {
        RawFormula inner = disjunction();
        expect_symbol(")");
        return inner;
      } catch (const SyntaxError&) {
        if (pos_ >= atom_fail) throw;
        throw as_atom;
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Resolver {
 public:
  Resolver(RingDescriptor ring, std::size_t arity) : ring_(ring), arity_(arity) {}

  void bind(const std::string& name, std::size_t index) { scope_.emplace_back(name, index); }
  void unbind() { scope_.pop_back(); }

  std::optional<std::size_t> lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return std::nullopt;
  }

  Polynomial resolve(const RawExpr& e) const {
    switch (e.kind) {
      case RawExpr::Kind::Num:
        return Polynomial::constant(RingElement(ring_, e.num), arity_);
      case RawExpr::Kind::Name:
        return name(e);
      case RawExpr::Kind::Add:
        return resolve(e.kids[0]) + resolve(e.kids[1]);
      case RawExpr::Kind::Sub:
        return resolve(e.kids[0]) - resolve(e.kids[1]);
      case RawExpr::Kind::Mul:
        return resolve(e.kids[0]) * resolve(e.kids[1]);
      case RawExpr::Kind::Neg:
        return -resolve(e.kids[0]);
      case RawExpr::Kind::Pow:
        return resolve(e.kids[0]).pow(e.exponent);
    }
    fail(ErrorCode::InternalInconsistency, "unknown expression node");
  }

 private:
  Polynomial name(const RawExpr& e) const {
    if (auto bound = lookup(e.name)) return Polynomial::variable(ring_, *bound, arity_);
    if (e.name == "sqrtd") {
      if (ring_.kind() != RingKind::QuadReal) {
        syntax_error("'sqrtd' is only available over Z[sqrt(d)], not " + ring_.name(), e.at,
                     ErrorCode::RingLiteralError);
      }
      return Polynomial::constant(RingElement::omega(ring_), arity_);
    }
    if (e.name == "i") {
      if (ring_.kind() != RingKind::GaussianIntegers) {
        syntax_error("'i' is only available over Z[i], not " + ring_.name(), e.at,
                     ErrorCode::RingLiteralError);
      }
      return Polynomial::constant(RingElement::omega(ring_), arity_);
    }
    if (auto k = free_index(e.name)) return Polynomial::variable(ring_, *k, arity_);
    syntax_error("unknown variable '" + e.name + "'", e.at, ErrorCode::UnknownVariable);
  }

  RingDescriptor ring_;
  std::size_t arity_;
  std::vector<std::pair<std::string, std::size_t>> scope_;
};

// Highest free index used in e (names not bound in `scope`), checking names.
void scan_names(const RawExpr& e, const std::vector<std::string>& scope,
                std::optional<std::size_t>& max_free) {
  if (e.kind == RawExpr::Kind::Name) {
    if (std::find(scope.begin(), scope.end(), e.name) != scope.end()) return;
    if (is_ring_unit(e.name)) return;
    auto k = free_index(e.name);
    if (!k) syntax_error("unknown variable '" + e.name + "'", e.at, ErrorCode::UnknownVariable);
    max_free = std::max(max_free.value_or(0), *k);
    return;
  }
  for (const auto& kid : e.kids) scan_names(kid, scope, max_free);
}

void scan_formula(const RawFormula& f, std::vector<std::string>& scope,
                  std::optional<std::size_t>& max_free, std::size_t& bound_count) {
  if (f.kind == Formula::Kind::Atom) {
    scan_names(f.lhs, scope, max_free);
    scan_names(f.rhs, scope, max_free);
    return;
  }
  const bool binds = f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall;
  if (binds) {
    scope.push_back(f.name);
    ++bound_count;
  }
  for (const auto& kid : f.kids) scan_formula(kid, scope, max_free, bound_count);
  if (binds) scope.pop_back();
}

Formula resolve_formula(const RawFormula& f, Resolver& resolver, std::size_t& next_bound) {
  Formula out;
  out.kind = f.kind;
  switch (f.kind) {
    case Formula::Kind::Atom:
      out.lhs = resolver.resolve(f.lhs);
      out.rhs = resolver.resolve(f.rhs);
      return out;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.bound = next_bound++;
      out.bound_name = f.name;
      resolver.bind(f.name, out.bound);
      out.children.push_back(resolve_formula(f.kids[0], resolver, next_bound));
      resolver.unbind();
      return out;
    default:
      for (const auto& kid : f.kids) out.children.push_back(resolve_formula(kid, resolver, next_bound));
      return out;
  }
}

DiophantineSet compile_node(const Formula& f, const ParsedFormula& whole, SetDomain domain) {
  const std::size_t n = whole.arity;
  switch (f.kind) {
    case Formula::Kind::Atom:
      return DiophantineSet(whole.ring, n, 0, {f.lhs - f.rhs}, domain);
    case Formula::Kind::And:
      return set_intersect(compile_node(f.children[0], whole, domain),
                           compile_node(f.children[1], whole, domain));
    case Formula::Kind::Exists: {
      const DiophantineSet body = compile_node(f.children[0], whole, domain);
      IndexSet keep{n, {}};
      for (std::size_t i = 0; i < n; ++i) {
        if (i != f.bound) keep.s.push_back(i + 1);
      }
      if (keep.s.empty()) return body;
      // Project the bound variable away, then put a free slot back in its place.
      const DiophantineSet widened = set_product(set_project(body, keep), fullset(whole.ring, 1, domain));
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) {
        order[i] = i < f.bound ? i : (i == f.bound ? n - 1 : i - 1);
      }
      return set_reorder_params(widened, order);
    }
    case Formula::Kind::Or:
      fail(ErrorCode::UnsupportedConnective,
           "'or' cannot be compiled: a disjunction would need a product of equations, which this "
           "compiler does not build; rewrite the formula without it");
    case Formula::Kind::Not:
      fail(ErrorCode::UnsupportedConnective,
           "'not' cannot be compiled: Diophantine sets are not closed under complement");
    case Formula::Kind::Forall:
      fail(ErrorCode::UnsupportedConnective,
           "'forall' cannot be compiled: Diophantine sets are not closed under universal "
           "quantification (it would give complements of existential sets)");
  }
  fail(ErrorCode::InternalInconsistency, "unknown formula node");
}

void collect_names(const Formula& f, std::vector<std::string>& names) {
  if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall) {
    if (f.bound < names.size()) names[f.bound] = f.bound_name;
  }
  for (const auto& kid : f.children) collect_names(kid, names);
}

std::string print(const Formula& f, const std::vector<std::string>& names) {
  auto wrap_if = [&](const Formula& g, bool paren) {
    return paren ? "(" + print(g, names) + ")" : print(g, names);
  };
  switch (f.kind) {
    case Formula::Kind::Atom:
      return to_text(f.lhs, names) + " = " + to_text(f.rhs, names);
    case Formula::Kind::And:
      return wrap_if(f.children[0], f.children[0].kind == Formula::Kind::Or) + " and " +
             wrap_if(f.children[1], f.children[1].kind == Formula::Kind::Or ||
                                        f.children[1].kind == Formula::Kind::And);
    case Formula::Kind::Or:
      return print(f.children[0], names) + " or " +
             wrap_if(f.children[1], f.children[1].kind == Formula::Kind::Or);
    case Formula::Kind::Not:
      return "not " + wrap_if(f.children[0], f.children[0].kind == Formula::Kind::And ||
                                                 f.children[0].kind == Formula::Kind::Or);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return std::string(f.kind == Formula::Kind::Exists ? "exists " : "forall ") + f.bound_name +
             " (" + print(f.children[0], names) + ")";
  }
  return {};
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, RingDescriptor ring, std::size_t min_arity) {
  Parser parser(tokenize(text));
  const RawExpr raw = parser.expression_only();
  std::optional<std::size_t> max_free;
  scan_names(raw, {}, max_free);
  const std::size_t arity = std::max(min_arity, max_free ? *max_free + 1 : 0);
  return Resolver(ring, arity).resolve(raw);
}

ParsedFormula parse_formula(std::string_view text, RingDescriptor ring) {
  Parser parser(tokenize(text));
  const RawFormula raw = parser.formula_only();
  std::vector<std::string> scope;
  std::optional<std::size_t> max_free;
  std::size_t bound_count = 0;
  scan_formula(raw, scope, max_free, bound_count);

  ParsedFormula out;
  out.ring = ring;
  out.free_count = max_free ? *max_free + 1 : 1;
  out.arity = out.free_count + bound_count;
  Resolver resolver(ring, out.arity);
  std::size_t next_bound = out.free_count;
  out.root = resolve_formula(raw, resolver, next_bound);
  return out;
}

DiophantineSet compile_formula(const ParsedFormula& formula, SetDomain domain) {
  const DiophantineSet all = compile_node(formula.root, formula, domain);
  if (formula.arity == formula.free_count) return all;
  IndexSet keep{formula.arity, {}};
  for (std::size_t i = 1; i <= formula.free_count; ++i) keep.s.push_back(i);
  return set_project(all, keep);
}

std::string to_text(const ParsedFormula& formula) {
  std::vector<std::string> names(formula.arity);
  for (std::size_t i = 0; i < formula.arity; ++i) names[i] = "x" + std::to_string(i);
  collect_names(formula.root, names);
  return print(formula.root, names);
}

}  // namespace diophant
