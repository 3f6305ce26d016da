#pragma once

// Line-oriented problem files:
//
//   vars x y
//   ideal m = (x, y)
//   ideal a3 = m^4 + (x*y)
//   target a3 3
//   filtration J(k) = m^k * (x^k, y)
//   continue cyclic
//
// `#` starts a comment. Exponents are affine in k: 2, 3*k, 3*k+1, k.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vip/error.hpp"
#include "vip/filtration.hpp"
#include "vip/interpolate.hpp"
#include "vip/monomial.hpp"
#include "vip/rational.hpp"

namespace vip::dsl {

struct Span {
  int line = 0;
  int column = 0;  // 1-based
  int length = 0;
};

class ParseError : public Error {
 public:
  ParseError(Span span, const std::string& msg)
      : Error(ErrorKind::Parse, "line " + std::to_string(span.line) + ", column " + std::to_string(span.column) +
                                    ": " + msg),
        span_(span) {}
  const Span& span() const { return span_; }

 private:
  Span span_;
};

inline constexpr long kMaxLiteral = 1'000'000;

struct AffineExpr {
  long slope = 0;
  long offset = 0;
  Span span;
  bool depends_on_k() const { return slope != 0; }
  bool same(const AffineExpr& o) const { return slope == o.slope && offset == o.offset; }
};

struct Atom {
  std::string var;
  AffineExpr exp{0, 1, {}};
  Span span;
};

struct MonomialAst {
  std::vector<Atom> atoms;  // empty: the constant monomial 1
  Span span;
};

struct Factor {
  enum class Kind { Ident, Gens };
  Kind kind = Kind::Ident;
  std::string ident;
  std::vector<MonomialAst> gens;
  std::vector<AffineExpr> powers;  // factor ^ e1 ^ e2 ...
  Span span;
};

struct TermAst {
  std::vector<Factor> factors;
};

struct ExprAst {
  std::vector<TermAst> terms;
};

struct VarsDecl {
  std::vector<std::string> names;
  Span span;
};
struct IdealDecl {
  std::string name;
  ExprAst expr;
  Span span;
};
struct TargetDecl {
  std::string ideal;
  Rational value;
  Span span;
};
struct FiltrationDecl {
  std::string name;
  TermAst term;
  Span span;
};
struct ContinueDecl {
  std::string mode;  // "cyclic"
  Span span;
};

using Statement = std::variant<VarsDecl, IdealDecl, TargetDecl, FiltrationDecl, ContinueDecl>;

struct ProblemFile {
  std::vector<Statement> statements;

  const VarsDecl& vars() const {
    for (const auto& s : statements)
      if (auto* v = std::get_if<VarsDecl>(&s)) return *v;
    throw Error(ErrorKind::Parse, "missing vars declaration");
  }
};

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

enum class Tok { Ident, Int, LParen, RParen, Comma, Plus, Star, Caret, Equals, Slash, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span span;
};

inline std::vector<Token> lex_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t p) { return static_cast<int>(p) + 1; };
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    Token t;
    if (std::isalpha(c) || c == '_') {
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
      t.kind = Tok::Ident;
    } else if (std::isdigit(c)) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      t.kind = Tok::Int;
    } else {
      ++i;
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '+': t.kind = Tok::Plus; break;
        case '*': t.kind = Tok::Star; break;
        case '^': t.kind = Tok::Caret; break;
        case '=': t.kind = Tok::Equals; break;
        case '/': t.kind = Tok::Slash; break;
        default: {
          std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                              : "\\x" + std::string(1, "0123456789abcdef"[c >> 4]) +
                                                    std::string(1, "0123456789abcdef"[c & 15]);
          throw ParseError(Span{line_no, col(start), 1}, "unexpected character '" + shown + "'");
        }
      }
    }
    t.text = std::string(line.substr(start, i - start));
    t.span = Span{line_no, col(start), static_cast<int>(i - start)};
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.span = Span{line_no, col(line.size()), 0};
  out.push_back(end);
  return out;
}

inline bool is_keyword(const std::string& s) {
  return s == "vars" || s == "ideal" || s == "target" || s == "filtration" || s == "continue" || s == "k";
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, bool allow_k) : t_(std::move(toks)), allow_k_(allow_k) {}

  const Token& peek(std::size_t ahead = 0) const { return t_[std::min(pos_ + ahead, t_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return t_[std::min(pos_++, t_.size() - 1)]; }
  Token expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(peek().span, std::string("expected ") + what + describe(peek()));
    return take();
  }
  void expect_end() {
    if (!at(Tok::End)) throw ParseError(peek().span, "unexpected trailing input" + describe(peek()));
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string(" at end of line") : " near '" + t.text + "'";
  }

  static long to_int(const Token& t) {
    if (t.text.size() > 7) throw ParseError(t.span, "integer literal too large");
    long v = std::stol(t.text);
    if (v > kMaxLiteral) throw ParseError(t.span, "integer literal too large");
    return v;
  }

  // exp := INT | INT "*k" ("+" INT)? | "k"
  AffineExpr exp() {
    AffineExpr e;
    const Token& first = peek();
    e.span = first.span;
    if (at(Tok::Ident) && peek().text == "k") {
      take();
      if (!allow_k_) throw ParseError(first.span, "exponent 'k' is only allowed in filtration declarations");
      e.slope = 1;
      e.offset = 0;
      return e;
    }
    Token n = expect(Tok::Int, "an exponent");
    long v = to_int(n);
    if (at(Tok::Star) && peek(1).kind == Tok::Ident && peek(1).text == "k") {
      take();
      Token kt = take();
      if (!allow_k_) throw ParseError(kt.span, "exponent 'k' is only allowed in filtration declarations");
      e.slope = v;
      if (at(Tok::Plus) && peek(1).kind == Tok::Int) {
        take();
        e.offset = to_int(take());
      }
      return e;
    }
    e.offset = v;
    return e;
  }

  // monomial := atom ("*" atom)* ; atom := VAR ("^" exp)?   ("1" is the unit monomial)
  MonomialAst monomial() {
    MonomialAst m;
    m.span = peek().span;
    if (at(Tok::Int) && peek().text == "1") {
      take();
      return m;
    }
    for (;;) {
      Token v = expect(Tok::Ident, "a variable");
      if (v.text == "k") throw ParseError(v.span, "'k' cannot be used as a variable");
      Atom a;
      a.var = v.text;
      a.span = v.span;
      if (at(Tok::Caret)) {
        take();
        a.exp = exp();
      }
      m.atoms.push_back(std::move(a));
      if (!at(Tok::Star)) break;
      take();
    }
    return m;
  }

  // factor := (IDENT | gens) ("^" exp)*
  Factor factor() {
    Factor f;
    f.span = peek().span;
    if (at(Tok::LParen)) {
      take();
      f.kind = Factor::Kind::Gens;
      f.gens.push_back(monomial());
      while (at(Tok::Comma)) {
        take();
        f.gens.push_back(monomial());
      }
      expect(Tok::RParen, "')'");
    } else {
      Token id = expect(Tok::Ident, "an ideal name or '('");
      if (is_keyword(id.text)) throw ParseError(id.span, "keyword '" + id.text + "' used as an ideal name");
      f.kind = Factor::Kind::Ident;
      f.ident = id.text;
    }
    while (at(Tok::Caret)) {
      take();
      f.powers.push_back(exp());
    }
    return f;
  }

  TermAst term() {
    TermAst t;
    t.factors.push_back(factor());
    while (at(Tok::Star)) {
      take();
      t.factors.push_back(factor());
    }
    return t;
  }

  ExprAst expr() {
    ExprAst e;
    e.terms.push_back(term());
    while (at(Tok::Plus)) {
      take();
      e.terms.push_back(term());
    }
    return e;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  bool allow_k_;
};

}  // namespace detail

/// Syntax-level parse into an AST with source spans. Semantic checks that
/// need the environment (definitions before use) happen in `build_model`.
inline ProblemFile parse_problem(std::string_view text) {
  using detail::Token;
  ProblemFile pf;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    auto toks = detail::lex_line(line, line_no);
    if (toks.front().kind != detail::Tok::End) {
      const auto& head = toks.front();
      if (head.kind != detail::Tok::Ident) throw ParseError(head.span, "expected a statement keyword");
      const bool is_filtration = head.text == "filtration";
      detail::LineParser p(toks, is_filtration);
      Token kw = p.take();
      Span span = kw.span;
      if (kw.text == "vars") {
        VarsDecl v;
        v.span = span;
        while (p.at(detail::Tok::Ident)) {
          Token id = p.take();
          if (detail::is_keyword(id.text)) throw ParseError(id.span, "keyword '" + id.text + "' used as a variable");
          for (const auto& existing : v.names)
            if (existing == id.text) throw ParseError(id.span, "variable '" + id.text + "' declared twice");
          v.names.push_back(id.text);
        }
        if (v.names.empty()) throw ParseError(p.peek().span, "vars needs at least one variable");
        p.expect_end();
        pf.statements.emplace_back(std::move(v));
      } else if (kw.text == "ideal") {
        IdealDecl d;
        d.span = span;
        Token name = p.expect(detail::Tok::Ident, "an ideal name");
        if (detail::is_keyword(name.text)) throw ParseError(name.span, "keyword '" + name.text + "' used as a name");
        d.name = name.text;
        p.expect(detail::Tok::Equals, "'='");
        d.expr = p.expr();
        p.expect_end();
        pf.statements.emplace_back(std::move(d));
      } else if (kw.text == "target") {
        TargetDecl d;
        d.span = span;
        Token name = p.expect(detail::Tok::Ident, "an ideal name");
        d.ideal = name.text;
        Token num = p.expect(detail::Tok::Int, "a rational target value");
        std::string lit = num.text;
        if (p.at(detail::Tok::Slash)) {
          p.take();
          Token den = p.expect(detail::Tok::Int, "a denominator");
          lit += "/" + den.text;
          if (mpz_class(den.text, 10) == 0) throw ParseError(den.span, "zero denominator");
        }
        d.value = Rational::parse(lit);
        p.expect_end();
        pf.statements.emplace_back(std::move(d));
      } else if (kw.text == "filtration") {
        FiltrationDecl d;
        d.span = span;
        Token name = p.expect(detail::Tok::Ident, "a filtration name");
        if (detail::is_keyword(name.text)) throw ParseError(name.span, "keyword '" + name.text + "' used as a name");
        d.name = name.text;
        p.expect(detail::Tok::LParen, "'(k)'");
        Token kt = p.expect(detail::Tok::Ident, "'k'");
        if (kt.text != "k") throw ParseError(kt.span, "filtration parameter must be named k");
        p.expect(detail::Tok::RParen, "')'");
        p.expect(detail::Tok::Equals, "'='");
        d.term = p.term();
        p.expect_end();
        pf.statements.emplace_back(std::move(d));
      } else if (kw.text == "continue") {
        ContinueDecl d;
        d.span = span;
        Token mode = p.expect(detail::Tok::Ident, "a continuation mode");
        if (mode.text != "cyclic") throw ParseError(mode.span, "unknown continuation mode '" + mode.text + "'");
        d.mode = mode.text;
        p.expect_end();
        pf.statements.emplace_back(std::move(d));
      } else {
        throw ParseError(kw.span, "unknown statement '" + kw.text + "'");
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  int vars_count = 0;
  for (const auto& s : pf.statements)
    if (std::holds_alternative<VarsDecl>(s)) ++vars_count;
  if (vars_count != 1)
    throw ParseError(Span{vars_count == 0 ? 1 : line_no, 1, 0},
                     vars_count == 0 ? "missing vars declaration" : "more than one vars declaration");
  if (!std::holds_alternative<VarsDecl>(pf.statements.front()))
    throw ParseError(Span{1, 1, 0}, "vars must be declared before any other statement");
  return pf;
}

// ---------------------------------------------------------------------------
// Canonical printer

inline std::string print_exp(const AffineExpr& e) {
  if (e.slope == 0) return std::to_string(e.offset);
  if (e.slope == 1 && e.offset == 0) return "k";
  std::string s = std::to_string(e.slope) + "*k";
  if (e.offset != 0) s += "+" + std::to_string(e.offset);
  return s;
}

inline std::string print_monomial(const MonomialAst& m) {
  if (m.atoms.empty()) return "1";
  std::string s;
  for (const auto& a : m.atoms) {
    if (!s.empty()) s += "*";
    s += a.var;
    if (!(a.exp.slope == 0 && a.exp.offset == 1)) s += "^" + print_exp(a.exp);
  }
  return s;
}

inline std::string print_term(const TermAst& t) {
  std::string s;
  for (const auto& f : t.factors) {
    if (!s.empty()) s += " * ";
    if (f.kind == Factor::Kind::Ident) {
      s += f.ident;
    } else {
      s += "(";
      for (std::size_t i = 0; i < f.gens.size(); ++i) s += (i ? ", " : "") + print_monomial(f.gens[i]);
      s += ")";
    }
    for (const auto& p : f.powers) s += "^" + print_exp(p);
  }
  return s;
}

inline std::string print_expr(const ExprAst& e) {
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) s += (i ? " + " : "") + print_term(e.terms[i]);
  return s;
}

inline std::string print_problem(const ProblemFile& pf) {
  std::string out;
  for (const auto& st : pf.statements) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VarsDecl>) {
            out += "vars";
            for (const auto& n : s.names) out += " " + n;
          } else if constexpr (std::is_same_v<T, IdealDecl>) {
            out += "ideal " + s.name + " = " + print_expr(s.expr);
          } else if constexpr (std::is_same_v<T, TargetDecl>) {
            out += "target " + s.ideal + " " + s.value.short_str();
          } else if constexpr (std::is_same_v<T, FiltrationDecl>) {
            out += "filtration " + s.name + "(k) = " + print_term(s.term);
          } else {
            out += "continue " + s.mode;
          }
        },
        st);
    out += "\n";
  }
  return out;
}

/// Structural equality of two ASTs, ignoring source spans.
inline bool same_ast(const ProblemFile& a, const ProblemFile& b) { return print_problem(a) == print_problem(b); }

// ---------------------------------------------------------------------------
// Evaluation

using Environment = std::map<std::string, MonomialIdeal>;

namespace detail {

inline long instantiate(const AffineExpr& e, std::optional<long> k) {
  if (e.depends_on_k() && !k) throw ParseError(e.span, "exponent depends on k outside a filtration");
  long v = e.slope * k.value_or(0) + e.offset;
  if (v < 0) throw ParseError(e.span, "negative instantiated exponent");
  return v;
}

inline std::size_t var_index(const std::vector<std::string>& vars, const Atom& a) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == a.var) return i;
  throw ParseError(a.span, "undefined variable '" + a.var + "'");
}

inline MonomialIdeal eval_factor(const Factor& f, const Environment& env, const std::vector<std::string>& vars,
                                 std::optional<long> k) {
  const std::size_t n = vars.size();
  MonomialIdeal base;
  if (f.kind == Factor::Kind::Ident) {
    auto it = env.find(f.ident);
    if (it == env.end()) throw ParseError(f.span, "undefined identifier '" + f.ident + "'");
    base = it->second;
  } else {
    std::vector<Exponent> gens;
    for (const auto& m : f.gens) {
      Exponent e(n);
      for (const auto& a : m.atoms) e[var_index(vars, a)] += instantiate(a.exp, k);
      gens.push_back(e);
    }
    base = MonomialIdeal::generated_by(n, std::move(gens));
  }
  for (const auto& p : f.powers) base = power(base, instantiate(p, k));
  return base;
}

inline MonomialIdeal eval_term(const TermAst& t, const Environment& env, const std::vector<std::string>& vars,
                               std::optional<long> k) {
  MonomialIdeal acc = MonomialIdeal::unit(vars.size());
  for (const auto& f : t.factors) acc = product(acc, eval_factor(f, env, vars, k));
  return acc;
}

}  // namespace detail

inline MonomialIdeal eval_ideal_expr(const ExprAst& e, const Environment& env, const std::vector<std::string>& vars) {
  MonomialIdeal acc = MonomialIdeal::zero(vars.size());
  for (const auto& t : e.terms) acc = sum(acc, detail::eval_term(t, env, vars, std::nullopt));
  return acc;
}

inline MonomialIdeal eval_filtration_expr(const TermAst& t, const Environment& env,
                                          const std::vector<std::string>& vars, long k) {
  if (k < 0) throw Error(ErrorKind::Domain, "negative filtration index");
  return detail::eval_term(t, env, vars, k);
}

/// Normal form Π B_i^(p_i k + q_i) · G(k) of a filtration declaration.
inline Filtration filtration_from_decl(const FiltrationDecl& d, const Environment& env,
                                       const std::vector<std::string>& vars, long check_bound = kDefaultAxiomBound) {
  const std::size_t n = vars.size();
  std::vector<PowerFactor> factors;
  std::vector<AffineGenerator> generators;
  bool have_g = false;
  for (const auto& f : d.term.factors) {
    bool k_gens = false;
    if (f.kind == Factor::Kind::Gens)
      for (const auto& m : f.gens)
        for (const auto& a : m.atoms)
          if (a.exp.depends_on_k()) k_gens = true;
    if (k_gens) {
      if (have_g) throw ParseError(f.span, "filtration outside normal form: more than one k-dependent generator list");
      if (!f.powers.empty())
        throw ParseError(f.span, "filtration outside normal form: k-dependent generator list raised to a power");
      have_g = true;
      for (const auto& m : f.gens) {
        AffineGenerator g{Exponent(n), Exponent(n)};
        for (const auto& a : m.atoms) {
          std::size_t i = detail::var_index(vars, a);
          g.slope[i] += a.exp.slope;
          g.offset[i] += a.exp.offset;
        }
        generators.push_back(std::move(g));
      }
      continue;
    }
    Factor bare = f;
    bare.powers.clear();
    MonomialIdeal base = detail::eval_factor(bare, env, vars, std::nullopt);
    AffineExponent e{0, 1};
    for (const auto& p : f.powers) {
      if (e.slope == 0)
        e = AffineExponent{e.offset * p.slope, e.offset * p.offset};
      else if (p.slope == 0)
        e = AffineExponent{e.slope * p.offset, e.offset * p.offset};
      else
        throw ParseError(p.span, "exponent not affine in k");
    }
    factors.push_back(PowerFactor{std::move(base), e});
  }
  return Filtration::parametric(n, std::move(factors), std::move(generators), check_bound);
}

/// Semantic view of a problem file.
struct Model {
  std::vector<std::string> vars;
  Environment ideals;
  std::vector<std::string> ideal_order;
  std::vector<std::pair<std::string, TargetPair>> targets;
  std::vector<std::pair<std::string, FiltrationDecl>> filtrations;
  bool cyclic = false;

  std::size_t dim() const { return vars.size(); }

  const MonomialIdeal& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw Error(ErrorKind::Parse, "undefined identifier '" + name + "'");
    return it->second;
  }

  InterpolationProblem problem() const {
    InterpolationProblem p;
    p.dim = dim();
    for (const auto& t : targets) p.pairs.push_back(t.second);
    p.cyclic_continuation = cyclic;
    return p;
  }

  /// Named parametric filtration, or the interpolation filtration of the
  /// targets when `name` is empty and none is declared (or name == "I").
  Filtration filtration(const std::string& name = "") const {
    if (!name.empty() && name != "I") {
      for (const auto& f : filtrations)
        if (f.first == name) return filtration_from_decl(f.second, ideals, vars);
      throw Error(ErrorKind::Parse, "undefined filtration '" + name + "'");
    }
    if (name.empty() && filtrations.size() == 1) return filtration_from_decl(filtrations[0].second, ideals, vars);
    if (name.empty() && filtrations.size() > 1)
      throw Error(ErrorKind::Parse, "several filtrations declared; choose one with --filtration");
    if (targets.empty()) throw Error(ErrorKind::Parse, "no targets and no filtration declared");
    std::vector<TargetPair> pairs;
    for (const auto& t : targets) pairs.push_back(t.second);
    return Filtration::special_sum(std::move(pairs));
  }
};

inline Model build_model(const ProblemFile& pf) {
  Model m;
  m.vars = pf.vars().names;
  for (const auto& st : pf.statements) {
    if (auto* d = std::get_if<IdealDecl>(&st)) {
      if (m.ideals.count(d->name)) throw ParseError(d->span, "ideal '" + d->name + "' defined twice");
      m.ideals.emplace(d->name, eval_ideal_expr(d->expr, m.ideals, m.vars));
      m.ideal_order.push_back(d->name);
    } else if (auto* t = std::get_if<TargetDecl>(&st)) {
      auto it = m.ideals.find(t->ideal);
      if (it == m.ideals.end()) throw ParseError(t->span, "undefined identifier '" + t->ideal + "'");
      m.targets.emplace_back(t->ideal, TargetPair{it->second, t->value});
    } else if (auto* f = std::get_if<FiltrationDecl>(&st)) {
      for (const auto& existing : m.filtrations)
        if (existing.first == f->name) throw ParseError(f->span, "filtration '" + f->name + "' defined twice");
      // Evaluate once so structural errors surface at load time.
      filtration_from_decl(*f, m.ideals, m.vars);
      m.filtrations.emplace_back(f->name, *f);
    } else if (std::holds_alternative<ContinueDecl>(st)) {
      m.cyclic = true;
    }
  }
  return m;
}

inline Model load_model(std::string_view text) { return build_model(parse_problem(text)); }

}  // namespace vip::dsl
