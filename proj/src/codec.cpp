#include "dl4x/codec.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "dl4x/errors.hpp"

namespace dl4x {

namespace {

void emit_variable(std::string& out, const Variable& v) {
  out += 'V';
  out += static_cast<char>('0' + v.sort);
  out += '{';
  out += v.name;
  out += '}';
}

void emit(std::string& out, std::string_view token) {
  if (!out.empty()) out += ' ';
  out += token;
}

void emit_var_token(std::string& out, const Variable& v) {
  if (!out.empty()) out += ' ';
  emit_variable(out, v);
}

void emit_literal(std::string& out, const Literal& l) {
  const Atom& a = l.atom;
  if (a.is_pair()) {
    emit(out, "$OA");
    emit_var_token(out, a.first());
    emit(out, "$CO");
    emit_var_token(out, a.second());
    emit(out, "$AO");
  } else {
    emit_var_token(out, a.first());
  }
  if (a.is_equality())
    emit(out, l.positive ? "$EQ" : "$QE");
  else
    emit(out, l.positive ? "$IN" : "$NI");
  emit_var_token(out, a.target());
}

void emit_matrix(std::string& out, const Matrix& m) {
  auto group = [&](std::span<const Matrix> ops, std::string_view op) {
    emit(out, "(");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) emit(out, op);
      emit_matrix(out, ops[i]);
    }
    emit(out, ")");
  };
  switch (m.connective()) {
    case Connective::Literal: emit_literal(out, m.lit()); break;
    case Connective::True: emit(out, "$TR"); break;
    case Connective::False: emit(out, "$FL"); break;
    case Connective::And: group(m.operands(), "$AD"); break;
    case Connective::Or: group(m.operands(), "$OR"); break;
    case Connective::Implies: group(m.operands(), "$IM"); break;
    case Connective::Iff: group(m.operands(), "$IF"); break;
    case Connective::Not: {
      const Matrix& inner = m.operands()[0];
      if (inner.connective() == Connective::And) {
        group(inner.operands(), "$DA");
      } else if (inner.connective() == Connective::Or) {
        group(inner.operands(), "$RO");
      } else {
        emit(out, "$NG");
        emit_matrix(out, inner);
      }
      break;
    }
  }
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (s[i] == 'V' && i + 2 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])) &&
        s[i + 2] == '{') {
      std::size_t close = s.find('}', i + 3);
      if (close == std::string_view::npos) throw MalformedCoding(start, "'}' closing variable name");
      i = close + 1;
    } else {
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    tokens.push_back({s.substr(start, i - start), start});
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : text_(s), tokens_(tokenize(s)) {}

  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t size() const { return tokens_.size(); }

  std::string_view peek() const { return at_end() ? std::string_view{} : tokens_[pos_].text; }

  std::size_t offset() const { return at_end() ? text_.size() : tokens_[pos_].offset; }

  [[noreturn]] void fail(std::string expected) const { throw MalformedCoding(offset(), std::move(expected)); }

  void expect(std::string_view token) {
    if (peek() != token) fail("'" + std::string(token) + "'");
    ++pos_;
  }

  bool accept(std::string_view token) {
    if (peek() != token || at_end()) return false;
    ++pos_;
    return true;
  }

  bool at_variable() const {
    auto t = peek();
    return t.size() >= 4 && t[0] == 'V' && t[2] == '{' && t.back() == '}';
  }

  Variable variable() {
    if (!at_variable()) fail("variable Vi{name}");
    auto t = peek();
    int sort = t[1] - '0';
    if (sort < 0 || sort > 3) fail("variable sort in 0..3");
    std::string name(t.substr(3, t.size() - 4));
    if (!is_valid_name(name)) fail("non-empty variable name without '$', '{', '}'");
    ++pos_;
    return Variable(sort, std::move(name));
  }

  Variable individual() {
    std::size_t at = offset();
    Variable v = variable();
    if (v.sort != 0) throw MalformedCoding(at, "sort-0 variable");
    return v;
  }

  Literal literal() {
    if (accept("$OA")) {
      Variable x = individual();
      expect("$CO");
      Variable y = individual();
      expect("$AO");
      bool positive = relator({"$IN", "$NI"});
      std::size_t at = offset();
      Variable r = variable();
      if (r.sort != 3) throw MalformedCoding(at, "sort-3 variable after pair term");
      return {Atom::pair_member(std::move(x), std::move(y), std::move(r)), positive};
    }
    Variable x = individual();
    if (peek() == "$EQ" || peek() == "$QE") {
      bool positive = peek() == "$EQ";
      ++pos_;
      Variable y = individual();
      return {Atom::equal(std::move(x), std::move(y)), positive};
    }
    bool positive = relator({"$IN", "$NI"});
    std::size_t at = offset();
    Variable set = variable();
    if (set.sort != 1) throw MalformedCoding(at, "sort-1 variable after $IN/$NI");
    return {Atom::member(std::move(x), std::move(set)), positive};
  }

  Clause clause() {
    std::vector<Literal> lits{literal()};
    while (accept("$OR")) lits.push_back(literal());
    return Clause(std::move(lits));
  }

  Matrix matrix() {
    if (accept("$TR")) return Matrix::truth();
    if (accept("$FL")) return Matrix::falsity();
    if (accept("$NG")) return Matrix::negation(matrix());
    if (!accept("(")) return Matrix::literal(literal());
    std::vector<Matrix> ops{matrix()};
    std::string_view op = peek();
    static const std::set<std::string_view> kOps{"$AD", "$OR", "$DA", "$RO", "$IM", "$IF"};
    if (!kOps.contains(op)) fail("connective");
    while (accept(op)) ops.push_back(matrix());
    bool binary = op == "$IM" || op == "$IF";
    if (binary && ops.size() != 2) fail("')' after binary connective operands");
    expect(")");
    if (op == "$AD") return Matrix::conjunction(std::move(ops));
    if (op == "$OR") return Matrix::disjunction(std::move(ops));
    if (op == "$DA") return Matrix::negation(Matrix::conjunction(std::move(ops)));
    if (op == "$RO") return Matrix::negation(Matrix::disjunction(std::move(ops)));
    if (op == "$IM") return Matrix::implication(ops[0], ops[1]);
    return Matrix::equivalence(ops[0], ops[1]);
  }

  UniversalFormula formula() {
    std::vector<Variable> prefix;
    std::set<std::string> names;
    while (accept("$FA")) {
      std::size_t at = offset();
      Variable v = individual();
      v.binding = Binding::Bound;
      if (!names.insert(v.name).second) throw MalformedCoding(at, "distinct quantified variable");
      prefix.push_back(std::move(v));
    }
    Matrix m = matrix();
    m = map_individuals(m, [&](const Variable& v) {
      if (!names.contains(v.name)) return v;
      return Variable(0, v.name, Binding::Bound);
    });
    UniversalFormula f(std::move(prefix), std::move(m));
    if (!is_well_formed(f)) throw MalformedCoding(0, "every quantified variable to occur in the matrix");
    return f;
  }

  void finish() const {
    if (!at_end()) fail("end of input");
  }

  bool contains(std::string_view token) const {
    return std::ranges::any_of(tokens_, [&](const Token& t) { return t.text == token; });
  }

 private:
  bool relator(std::initializer_list<std::string_view> pair) {
    auto it = pair.begin();
    std::string_view positive = *it++;
    std::string_view negative = *it;
    if (accept(positive)) return true;
    if (accept(negative)) return false;
    fail("relator '" + std::string(positive) + "' or '" + std::string(negative) + "'");
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename T, typename F>
T parse_whole(std::string_view s, F&& f) {
  Parser p(s);
  if (p.at_end()) p.fail("non-empty coding");
  T value = f(p);
  p.finish();
  return value;
}

}  // namespace

std::string encode(const Variable& v) {
  std::string out;
  emit_variable(out, v);
  return out;
}

std::string encode(const Literal& l) {
  std::string out;
  emit_literal(out, l);
  return out;
}

std::string encode(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) emit(out, "$OR");
    emit_literal(out, c[i]);
  }
  return out;
}

std::string encode(const Matrix& m) {
  std::string out;
  emit_matrix(out, m);
  return out;
}

std::string encode(const UniversalFormula& f) {
  std::string out;
  for (const auto& v : f.prefix) {
    emit(out, "$FA");
    emit_var_token(out, v);
  }
  emit_matrix(out, f.matrix);
  return out;
}

Variable decode_variable(std::string_view s) {
  return parse_whole<Variable>(s, [](Parser& p) { return p.variable(); });
}

Literal decode_literal(std::string_view s) {
  return parse_whole<Literal>(s, [](Parser& p) { return p.literal(); });
}

Clause decode_clause(std::string_view s) {
  return parse_whole<Clause>(s, [](Parser& p) { return p.clause(); });
}

UniversalFormula decode_formula(std::string_view s) {
  return parse_whole<UniversalFormula>(s, [](Parser& p) { return p.formula(); });
}

Coded decode(std::string_view s) {
  Parser probe(s);
  if (probe.at_end()) probe.fail("non-empty coding");
  if (probe.size() == 1 && probe.at_variable()) return decode_variable(s);
  bool formula_only = probe.contains("$FA") || probe.contains("(") || probe.contains("$NG") ||
                      probe.contains("$TR") || probe.contains("$FL");
  if (formula_only) return decode_formula(s);
  if (probe.contains("$OR")) return decode_clause(s);
  return decode_literal(s);
}

}  // namespace dl4x
