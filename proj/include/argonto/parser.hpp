#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "argonto/ontology.hpp"

namespace argonto {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

namespace detail {

enum class Tok {
  Ident,
  String,
  LParen,
  RParen,
  Comma,
  Colon,
  Dot,
  Lt,
  Eq,
  Tilde,
  Question,
  Arrow,   // ->
  DArrow,  // =>
  Newline,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 0;
  int col = 0;
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) {
    out.push_back({k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      push(Tok::Newline, "\n", line, col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    if (ident_start(c)) {
      size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      push(Tok::Ident, std::string(src.substr(i, j - i)), tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '"') {
      std::string text;
      size_t j = i + 1;
      int cc = col + 1;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\n') throw ParseError(tl, tc, "unterminated string");
        if (src[j] == '\\' && j + 1 < src.size() && (src[j + 1] == '"' || src[j + 1] == '\\')) {
          text += src[j + 1];
          j += 2;
          cc += 2;
          continue;
        }
        text += src[j];
        ++j;
        ++cc;
      }
      if (j >= src.size()) throw ParseError(tl, tc, "unterminated string");
      push(Tok::String, std::move(text), tl, tc);
      col = cc + 1;
      i = j + 1;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, "(", tl, tc); break;
      case ')': push(Tok::RParen, ")", tl, tc); break;
      case ',': push(Tok::Comma, ",", tl, tc); break;
      case ':': push(Tok::Colon, ":", tl, tc); break;
      case '.': push(Tok::Dot, ".", tl, tc); break;
      case '<': push(Tok::Lt, "<", tl, tc); break;
      case '~': push(Tok::Tilde, "~", tl, tc); break;
      case '?': push(Tok::Question, "?", tl, tc); break;
      case '=':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          push(Tok::DArrow, "=>", tl, tc);
          ++i;
          ++col;
        } else {
          push(Tok::Eq, "=", tl, tc);
        }
        break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          push(Tok::Arrow, "->", tl, tc);
          ++i;
          ++col;
        } else {
          throw ParseError(tl, tc, "unexpected character '-'");
        }
        break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
  }
  push(Tok::End, "", line, col);
  return out;
}

// Cursor over one statement's tokens (statements end at Newline/End).
class Cursor {
 public:
  Cursor(const std::vector<Token>& toks, size_t pos) : toks_(toks), pos_(pos) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  size_t pos() const { return pos_; }

  bool at_end() const {
    return toks_[pos_].kind == Tok::Newline || toks_[pos_].kind == Tok::End;
  }

  const Token& expect(Tok k, const char* what) {
    const Token& t = toks_[pos_];
    if (t.kind != k) throw ParseError(t.line, t.col, std::string("expected ") + what);
    ++pos_;
    return t;
  }

  const Token& expect_ident(const char* what) { return expect(Tok::Ident, what); }

  bool accept(Tok k) {
    if (toks_[pos_].kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_keyword(const char* kw) {
    const Token& t = toks_[pos_];
    if (t.kind == Tok::Ident && t.text == kw) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_statement_end() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::Newline && t.kind != Tok::End)
      throw ParseError(t.line, t.col, "unexpected trailing input");
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_;
};

inline bool is_reserved_word(const std::string& s) {
  static const std::set<std::string> words = {
      "PRINCIPLE", "PRIORITY", "TBOX",   "RULE",   "UNDERCUT",    "ABOX",  "AND",
      "OR",        "NOT",      "EXISTS", "FORALL", "NOTHING",     "EQUIV", "SUBSUMED_BY",
      "strict",    "defeasible"};
  return words.count(s) != 0;
}

inline std::string parse_name(Cursor& cur, const char* what) {
  const Token& t = cur.expect_ident(what);
  if (is_reserved_word(t.text))
    throw ParseError(t.line, t.col, "'" + t.text + "' is a reserved word");
  return t.text;
}

// mode := strict | defeasible ( principle )
inline std::pair<bool, std::string> parse_mode(Cursor& cur) {
  const Token& t = cur.expect_ident("'strict' or 'defeasible'");
  if (t.text == "strict") return {true, ""};
  if (t.text == "defeasible") {
    cur.expect(Tok::LParen, "'('");
    std::string pid = parse_name(cur, "principle id");
    cur.expect(Tok::RParen, "')'");
    return {false, pid};
  }
  throw ParseError(t.line, t.col, "expected 'strict' or 'defeasible'");
}

// Terms in rules follow a case convention: lowercase-initial names are
// variables, anything else is an individual constant. In ABOX statements
// every term is a constant. Fresh markers (?name) are only legal in rule
// heads.
enum class TermContext { RuleBody, RuleHead, Ground };

inline Term parse_term(Cursor& cur, TermContext ctx) {
  if (cur.peek().kind == Tok::Question) {
    const Token& q = cur.next();
    if (ctx != TermContext::RuleHead)
      throw ParseError(q.line, q.col, "fresh marker '?' is only allowed in rule heads");
    const Token& t = cur.expect_ident("fresh variable name");
    return Term::fresh(t.text);
  }
  const Token& t = cur.expect_ident("term");
  if (is_reserved_word(t.text))
    throw ParseError(t.line, t.col, "'" + t.text + "' is a reserved word");
  if (ctx == TermContext::Ground) return Term::constant(t.text);
  if (std::islower(static_cast<unsigned char>(t.text[0]))) return Term::variable(t.text);
  return Term::constant(t.text);
}

inline Literal parse_literal(Cursor& cur, TermContext ctx) {
  Literal lit;
  if (cur.accept(Tok::Tilde)) lit.positive = false;
  const Token& p = cur.expect_ident("predicate");
  if (is_reserved_word(p.text))
    throw ParseError(p.line, p.col, "'" + p.text + "' is a reserved word");
  if (p.text == "applicable")
    throw ParseError(p.line, p.col, "'applicable' is reserved for rule naming");
  lit.pred = p.text;
  cur.expect(Tok::LParen, "'('");
  lit.args.push_back(parse_term(cur, ctx));
  while (cur.accept(Tok::Comma)) lit.args.push_back(parse_term(cur, ctx));
  cur.expect(Tok::RParen, "')'");
  if (lit.args.size() > 2)
    throw ParseError(p.line, p.col, "predicates are unary or binary");
  return lit;
}

// expr     := andexpr [OR andexpr]
// andexpr  := primary (AND primary)*
// primary  := name | NOT name | EXISTS role.primary | FORALL role.primary
//           | NOTHING | ( expr )
inline ConceptExpr parse_concept(Cursor& cur);

inline ConceptExpr parse_concept_primary(Cursor& cur) {
  const Token& t = cur.peek();
  if (cur.accept(Tok::LParen)) {
    ConceptExpr e = parse_concept(cur);
    cur.expect(Tok::RParen, "')'");
    return e;
  }
  if (cur.accept_keyword("NOTHING")) return ConceptExpr::nothing();
  if (cur.accept_keyword("NOT")) {
    std::string n = parse_name(cur, "concept name");
    return ConceptExpr::negated(n);
  }
  if (t.kind == Tok::Ident && (t.text == "EXISTS" || t.text == "FORALL")) {
    cur.next();
    std::string role = parse_name(cur, "role name");
    cur.expect(Tok::Dot, "'.'");
    ConceptExpr filler = parse_concept_primary(cur);
    return ConceptExpr::restriction(
        t.text == "EXISTS" ? ConceptExpr::Kind::Exists : ConceptExpr::Kind::Forall, role,
        filler);
  }
  std::string n = parse_name(cur, "concept expression");
  return ConceptExpr::atomic(n);
}

inline ConceptExpr parse_concept(Cursor& cur) {
  ConceptExpr e = parse_concept_primary(cur);
  while (cur.accept_keyword("AND")) e = ConceptExpr::conj(e, parse_concept_primary(cur));
  if (cur.accept_keyword("OR")) {
    ConceptExpr right = parse_concept_primary(cur);
    const Token& after = cur.peek();
    if (after.kind == Tok::Ident && after.text == "AND")
      throw ParseError(after.line, after.col, "a union operand cannot be a conjunction");
    if (after.kind == Tok::Ident && after.text == "OR")
      throw ParseError(after.line, after.col, "unions are binary");
    e = ConceptExpr::disj(e, right);
  }
  return e;
}

}  // namespace detail

// Parse a class expression on its own, as used in instance-check queries.
inline ConceptExpr parse_concept_expr(std::string_view src) {
  auto toks = detail::lex(src);
  detail::Cursor cur(toks, 0);
  ConceptExpr e = detail::parse_concept(cur);
  while (cur.accept(detail::Tok::Newline)) {
  }
  cur.expect_statement_end();
  return e;
}

// Parse one ground literal, as used in assertion queries.
inline Literal parse_ground_literal(std::string_view src) {
  auto toks = detail::lex(src);
  detail::Cursor cur(toks, 0);
  Literal lit = detail::parse_literal(cur, detail::TermContext::Ground);
  while (cur.accept(detail::Tok::Newline)) {
  }
  cur.expect_statement_end();
  return lit;
}

namespace detail {

struct ArityUse {
  int arity = 0;
  int line = 0;
};

class Validator {
 public:
  explicit Validator(Ontology& o) : o_(o) {}

  void run() {
    check_unique_ids();
    check_principle_refs();
    resolve_arities();
    check_axiom_shapes();
    check_rules();
    build_priorities();
  }

 private:
  Ontology& o_;
  std::map<std::string, ArityUse> arity_;

  void fail(int line, const std::string& msg) { throw ParseError(line, 1, msg); }

  void check_unique_ids() {
    std::map<std::string, int> seen;
    auto claim = [&](const std::string& id, int line) {
      auto [it, fresh] = seen.emplace(id, line);
      if (!fresh)
        fail(line, "duplicate id '" + id + "' (first declared on line " +
                       std::to_string(it->second) + ")");
    };
    for (const auto& a : o_.tbox) claim(a.id, a.line);
    for (const auto& r : o_.rules) claim(r.id, r.line);
    for (const auto& u : o_.undercuts) claim(u.id, u.line);
    std::map<std::string, int> pseen;
    for (const auto& p : o_.principles) {
      auto [it, fresh] = pseen.emplace(p.id, p.line);
      if (!fresh)
        fail(p.line, "duplicate principle '" + p.id + "' (first declared on line " +
                         std::to_string(it->second) + ")");
    }
  }

  void check_principle_refs() {
    std::set<std::string> declared;
    for (const auto& p : o_.principles) declared.insert(p.id);
    auto check = [&](const std::string& pid, int line) {
      if (!declared.count(pid)) fail(line, "undeclared principle '" + pid + "'");
    };
    for (const auto& a : o_.tbox)
      if (!a.strict) check(a.principle, a.line);
    for (const auto& r : o_.rules)
      if (!r.strict) check(r.principle, r.line);
    for (const auto& u : o_.undercuts) check(u.principle, u.line);
    for (const auto& d : o_.priorities) {
      check(d.lo, d.line);
      check(d.hi, d.line);
    }
  }

  void constrain(const std::string& pred, int arity, int line) {
    auto it = arity_.find(pred);
    if (it == arity_.end()) {
      arity_[pred] = {arity, line};
      return;
    }
    if (it->second.arity != arity)
      fail(line, "predicate '" + pred + "' used with arity " + std::to_string(arity) +
                     " but line " + std::to_string(it->second.line) + " used arity " +
                     std::to_string(it->second.arity));
  }

  void constrain_concept(const ConceptExpr& e, int line) {
    using Kind = ConceptExpr::Kind;
    switch (e.kind) {
      case Kind::Atomic:
      case Kind::Negated:
        constrain(e.name, 1, line);
        break;
      case Kind::Nothing:
        break;
      case Kind::Exists:
      case Kind::Forall:
        constrain(e.role, 2, line);
        constrain_concept(e.filler(), line);
        break;
      case Kind::And:
      case Kind::Or:
        constrain_concept(*e.lhs, line);
        constrain_concept(*e.rhs, line);
        break;
    }
  }

  static bool bare_name(const ConceptExpr& e) {
    return e.kind == ConceptExpr::Kind::Atomic;
  }

  void resolve_arities() {
    for (const auto& r : o_.rules) {
      for (const auto& l : r.body) constrain(l.pred, static_cast<int>(l.args.size()), r.line);
      if (r.head.is_literal())
        constrain(r.head.literal().pred, static_cast<int>(r.head.literal().args.size()),
                  r.line);
      if (r.head.is_disjunction()) {
        const auto& d = r.head.disjunction();
        constrain(d.left.pred, static_cast<int>(d.left.args.size()), r.line);
        constrain(d.right.pred, static_cast<int>(d.right.args.size()), r.line);
      }
    }
    for (const auto& u : o_.undercuts)
      for (const auto& l : u.body) constrain(l.pred, static_cast<int>(l.args.size()), u.line);
    for (const auto& a : o_.abox)
      constrain(a.literal.pred, static_cast<int>(a.literal.args.size()), a.line);

    // Axioms whose sides are both bare names stay ambiguous between concept
    // and role subsumptions until other uses pin the names down.
    std::vector<TBoxAxiom*> deferred;
    for (auto& a : o_.tbox) {
      if (bare_name(a.lhs) && bare_name(a.rhs) && a.rhs.kind != ConceptExpr::Kind::Nothing) {
        deferred.push_back(&a);
      } else {
        constrain_concept(a.lhs, a.line);
        constrain_concept(a.rhs, a.line);
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto* a : deferred) {
        auto li = arity_.find(a->lhs.name);
        auto ri = arity_.find(a->rhs.name);
        int l = li == arity_.end() ? 0 : li->second.arity;
        int r = ri == arity_.end() ? 0 : ri->second.arity;
        if (l == 0 && r == 0) continue;
        if ((l == 1 && r == 2) || (l == 2 && r == 1))
          fail(a->line, "axiom '" + a->id + "' mixes a concept and a role");
        if (l != 0 && r != 0) continue;  // both sides already pinned
        int resolved = l ? l : r;
        constrain(a->lhs.name, resolved, a->line);
        constrain(a->rhs.name, resolved, a->line);
        changed = true;
      }
    }
    for (auto* a : deferred)
      if (arity_.count(a->lhs.name) && arity_.at(a->lhs.name).arity == 2) a->role_axiom = true;
    for (auto* a : deferred) {
      if (!arity_.count(a->lhs.name)) {  // nothing pinned either side: concepts
        constrain(a->lhs.name, 1, a->line);
        constrain(a->rhs.name, 1, a->line);
      }
    }
    o_.predicate_arity.clear();
    for (const auto& [pred, use] : arity_) o_.predicate_arity[pred] = use.arity;
  }

  static bool atomic_or_restriction(const ConceptExpr& e) {
    using Kind = ConceptExpr::Kind;
    if (e.kind == Kind::Atomic) return true;
    return e.kind == Kind::Exists && e.filler().kind == Kind::Atomic;
  }

  // Shapes with a rule mapping. Left-hand sides are conjunctions of atomics
  // and existential restrictions; right-hand sides are an atomic, a
  // conjunction of atomics, a binary union of atomics, a restriction with
  // atomic filler, or NOTHING (disjointness over two or more atomics).
  void check_concept_direction(const TBoxAxiom& a, const ConceptExpr& lhs,
                               const ConceptExpr& rhs) {
    using Kind = ConceptExpr::Kind;
    std::vector<const ConceptExpr*> lconj;
    flatten_conjunction(lhs, lconj);
    for (const auto* c : lconj)
      if (!atomic_or_restriction(*c))
        fail(a.line, "axiom '" + a.id +
                         "': left-hand side must be a conjunction of atomic concepts and "
                         "EXISTS restrictions");
    if (rhs.kind == Kind::Nothing) {
      for (const auto* c : lconj)
        if (c->kind != Kind::Atomic)
          fail(a.line,
               "axiom '" + a.id + "': disjointness takes atomic concepts on the left");
      if (lconj.size() < 2)
        fail(a.line, "axiom '" + a.id + "': disjointness needs at least two concepts");
      return;
    }
    switch (rhs.kind) {
      case Kind::Atomic:
        return;
      case Kind::And: {
        std::vector<const ConceptExpr*> rconj;
        flatten_conjunction(rhs, rconj);
        for (const auto* c : rconj)
          if (c->kind != Kind::Atomic)
            fail(a.line, "axiom '" + a.id +
                             "': a conjunction on the right-hand side must be over atomic "
                             "concepts");
        return;
      }
      case Kind::Or:
        if (rhs.lhs->kind != Kind::Atomic || rhs.rhs->kind != Kind::Atomic)
          fail(a.line, "axiom '" + a.id + "': unions are over atomic concepts");
        return;
      case Kind::Exists:
      case Kind::Forall:
        if (rhs.filler().kind != Kind::Atomic)
          fail(a.line, "axiom '" + a.id + "': restriction fillers must be atomic");
        return;
      default:
        fail(a.line, "axiom '" + a.id + "': unsupported right-hand side");
    }
  }

  void check_axiom_shapes() {
    using Kind = ConceptExpr::Kind;
    for (const auto& a : o_.tbox) {
      if (a.role_axiom) continue;  // bare role names on both sides
      for (const ConceptExpr* side : {&a.lhs, &a.rhs}) {
        std::vector<const ConceptExpr*> flat;
        flatten_conjunction(*side, flat);
        for (const auto* c : flat) {
          if (c->kind == Kind::Exists || c->kind == Kind::Forall) {
            if (c->filler().kind != Kind::Atomic)
              fail(a.line, "axiom '" + a.id + "': restriction fillers must be atomic");
          }
          if (c->kind == Kind::Negated)
            fail(a.line,
                 "axiom '" + a.id + "': negated concepts have no rule mapping; use a "
                 "disjointness axiom instead");
        }
      }
      check_concept_direction(a, a.lhs, a.rhs);
      if (a.equivalence) {
        if (a.is_disjointness())
          fail(a.line, "axiom '" + a.id + "': NOTHING cannot appear in an equivalence");
        check_concept_direction(a, a.rhs, a.lhs);
      }
    }
  }

  void check_rules() {
    for (const auto& r : o_.rules) {
      std::set<std::string> body_vars, body_fresh;
      for (const auto& l : r.body) collect_variables(l, body_vars, body_fresh);
      std::set<std::string> head_vars, head_fresh;
      collect_variables(r.head, head_vars, head_fresh);
      for (const auto& v : head_vars)
        if (!body_vars.count(v))
          fail(r.line, "rule '" + r.id + "': head variable '" + v +
                           "' is neither bound by the body nor marked fresh");
    }
    for (const auto& u : o_.undercuts) {
      std::set<std::string> body_vars, body_fresh;
      for (const auto& l : u.body) collect_variables(l, body_vars, body_fresh);
    }
  }

  void build_priorities() {
    o_.priority_order = PriorityOrder::build(o_.principles, o_.priorities);
    for (const auto& [a, b] : o_.priority_order.cycle_pairs())
      o_.diagnostics.push_back("priority cycle: '" + a + "' and '" + b +
                               "' are mutually comparable");
  }
};

}  // namespace detail

// Parse an ontology document. Statements are line-oriented; '#' starts a
// comment. Throws ParseError with line and column on the first problem.
inline Ontology parse_ontology(std::string_view src) {
  using namespace detail;
  auto toks = lex(src);
  Ontology o;
  size_t pos = 0;
  while (toks[pos].kind != Tok::End) {
    if (toks[pos].kind == Tok::Newline) {
      ++pos;
      continue;
    }
    Cursor cur(toks, pos);
    const Token& kw = cur.peek();
    if (kw.kind != Tok::Ident)
      throw ParseError(kw.line, kw.col, "expected a statement keyword");
    int line = kw.line;
    if (cur.accept_keyword("PRINCIPLE")) {
      PrincipleDecl p;
      p.line = line;
      p.id = parse_name(cur, "principle id");
      p.text = cur.expect(Tok::String, "quoted description").text;
      cur.expect_statement_end();
      o.principles.push_back(std::move(p));
    } else if (cur.accept_keyword("PRIORITY")) {
      PriorityDecl d;
      d.line = line;
      d.lo = parse_name(cur, "principle id");
      if (cur.accept(Tok::Lt)) {
        d.equal = false;
      } else if (cur.accept(Tok::Eq)) {
        d.equal = true;
      } else {
        throw ParseError(cur.peek().line, cur.peek().col, "expected '<' or '='");
      }
      d.hi = parse_name(cur, "principle id");
      cur.expect_statement_end();
      o.priorities.push_back(std::move(d));
    } else if (cur.accept_keyword("TBOX")) {
      TBoxAxiom a;
      a.line = line;
      a.id = parse_name(cur, "axiom id");
      auto [strict, pid] = parse_mode(cur);
      a.strict = strict;
      a.principle = pid;
      cur.expect(Tok::Colon, "':'");
      a.lhs = parse_concept(cur);
      if (cur.accept_keyword("SUBSUMED_BY")) {
        a.equivalence = false;
      } else if (cur.accept_keyword("EQUIV")) {
        a.equivalence = true;
      } else {
        throw ParseError(cur.peek().line, cur.peek().col,
                         "expected 'SUBSUMED_BY' or 'EQUIV'");
      }
      a.rhs = parse_concept(cur);
      cur.expect_statement_end();
      o.tbox.push_back(std::move(a));
    } else if (cur.accept_keyword("RULE")) {
      RuleDecl r;
      r.line = line;
      r.id = parse_name(cur, "rule id");
      auto [strict, pid] = parse_mode(cur);
      r.strict = strict;
      r.principle = pid;
      cur.expect(Tok::Colon, "':'");
      r.body.push_back(parse_literal(cur, TermContext::RuleBody));
      while (cur.accept(Tok::Comma)) r.body.push_back(parse_literal(cur, TermContext::RuleBody));
      bool strict_arrow;
      if (cur.accept(Tok::Arrow)) {
        strict_arrow = true;
      } else if (cur.accept(Tok::DArrow)) {
        strict_arrow = false;
      } else {
        throw ParseError(cur.peek().line, cur.peek().col, "expected '->' or '=>'");
      }
      if (strict_arrow != r.strict)
        throw ParseError(line, 1,
                         r.strict ? "strict rules use '->'" : "defeasible rules use '=>'");
      Literal h = parse_literal(cur, TermContext::RuleHead);
      if (cur.accept_keyword("OR")) {
        Literal h2 = parse_literal(cur, TermContext::RuleHead);
        r.head = Formula{Disjunction{std::move(h), std::move(h2)}};
      } else {
        r.head = Formula{std::move(h)};
      }
      cur.expect_statement_end();
      o.rules.push_back(std::move(r));
    } else if (cur.accept_keyword("UNDERCUT")) {
      RuleDecl u;
      u.line = line;
      u.id = parse_name(cur, "rule id");
      auto [strict, pid] = parse_mode(cur);
      if (strict)
        throw ParseError(line, 1, "undercutting rules are defeasible");
      u.strict = false;
      u.principle = pid;
      cur.expect(Tok::Colon, "':'");
      u.body.push_back(parse_literal(cur, TermContext::RuleBody));
      while (cur.accept(Tok::Comma)) u.body.push_back(parse_literal(cur, TermContext::RuleBody));
      cur.expect(Tok::DArrow, "'=>'");
      cur.expect(Tok::Tilde, "'~'");
      const Token& app = cur.expect_ident("'applicable'");
      if (app.text != "applicable")
        throw ParseError(app.line, app.col, "undercut heads have the form ~applicable(rule)");
      cur.expect(Tok::LParen, "'('");
      const Token& target = cur.expect_ident("target rule id");
      cur.expect(Tok::RParen, "')'");
      u.head = Formula{NamingAtom{target.text, false}};
      cur.expect_statement_end();
      o.undercuts.push_back(std::move(u));
    } else if (cur.accept_keyword("ABOX")) {
      ABoxAssertion a;
      a.line = line;
      a.literal = parse_literal(cur, TermContext::Ground);
      cur.expect_statement_end();
      o.abox.push_back(std::move(a));
    } else {
      throw ParseError(kw.line, kw.col, "unknown statement '" + kw.text + "'");
    }
    pos = cur.pos();
  }
  detail::Validator(o).run();
  return o;
}

}  // namespace argonto
