// Copyright 2026 The lqpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqp/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "lqp/error.hpp"

namespace lqp {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Tok {
  enum Kind { Ident, Number, Sym, End } kind;
  std::string s;
  int line = 1, col = 1;
};

bool is_reserved(const std::string& s) {
  return s == "true" || s == "false" || s == "box" || s == "dia" ||
         s == "top" || s == "adj" || s == "set0" || s == "first" ||
         s == "post" || s == "E";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t k = 0;
    auto push = [&](Tok::Kind kind, std::string s, int l, int c) {
      toks_.push_back({kind, std::move(s), l, c});
    };
    while (k < text.size()) {
      char ch = text[k];
      if (ch == '\n') {
        ++line;
        col = 1;
        ++k;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++col;
        ++k;
        continue;
      }
      int l = line, c = col;
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        size_t start = k;
        while (k < text.size() &&
               std::isalnum(static_cast<unsigned char>(text[k])))
          ++k;
        col += static_cast<int>(k - start);
        push(Tok::Ident, text.substr(start, k - start), l, c);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t start = k;
        while (k < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[k])))
          ++k;
        col += static_cast<int>(k - start);
        push(Tok::Number, text.substr(start, k - start), l, c);
        continue;
      }
      if (ch == '\\' && k + 1 < text.size() && text[k + 1] == '/') {
        push(Tok::Sym, "\\/", l, c);
        k += 2;
        col += 2;
        continue;
      }
      if (ch == '-' && k + 1 < text.size() && text[k + 1] == '>') {
        push(Tok::Sym, "->", l, c);
        k += 2;
        col += 2;
        continue;
      }
      static const std::string singles = "()[]{}<>,;*?!~&+-_";
      if (singles.find(ch) != std::string::npos) {
        push(Tok::Sym, std::string(1, ch), l, c);
        ++k;
        ++col;
        continue;
      }
      throw LqpError(Err::Parse, std::string("unexpected character '") + ch +
                                     "' at " + std::to_string(l) + ":" +
                                     std::to_string(c));
    }
    toks_.push_back({Tok::End, "", line, col});
  }

  std::vector<Tok> toks_;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser over the token stream, with save/restore
// backtracking for the formula-vs-gate ambiguity at program primaries.
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  FPtr formula() {
    FPtr f = f_implies();
    expect_end();
    return f;
  }

  PPtr program() {
    PPtr p = p_choice();
    expect_end();
    return p;
  }

 private:
  Lexer lex_;
  size_t pos_ = 0;

  const Tok& peek(size_t ahead = 0) const {
    size_t k = pos_ + ahead;
    return k < lex_.toks_.size() ? lex_.toks_[k] : lex_.toks_.back();
  }
  const Tok& advance() { return lex_.toks_[pos_++]; }
  bool at_sym(const std::string& s, size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Sym && peek(ahead).s == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Tok::Ident && peek().s == s;
  }
  bool eat_sym(const std::string& s) {
    if (!at_sym(s)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Tok& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.s + "'";
    throw LqpError(Err::Parse, what + ", got " + got + " at " +
                                   std::to_string(t.line) + ":" +
                                   std::to_string(t.col));
  }

  void expect_sym(const std::string& s) {
    if (!eat_sym(s)) fail("expected '" + s + "'");
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("expected end of input");
  }

  int number() {
    if (peek().kind != Tok::Number) fail("expected a number");
    const Tok& t = peek();
    try {
      return std::stoi(advance().s);
    } catch (const std::out_of_range&) {
      throw LqpError(Err::Parse, "number '" + t.s + "' out of range at " +
                                     std::to_string(t.line) + ":" +
                                     std::to_string(t.col));
    }
  }

  std::vector<int> index_list() {
    std::vector<int> idx;
    idx.push_back(index());
    while (eat_sym(",")) idx.push_back(index());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a] == idx[b])
          throw LqpError(Err::Arity,
                         "duplicate index " + std::to_string(idx[a]));
    return idx;
  }

  int index() {
    int i = number();
    if (i < 1) fail("qubit indices are 1-based");
    return i;
  }

  // --- formulas ---

  FPtr f_implies() {
    FPtr a = f_or();
    if (eat_sym("->")) return fimplies(a, f_implies());
    return a;
  }

  FPtr f_or() {
    FPtr a = f_qjoin();
    while (at_sym("\\/")) {
      advance();
      a = for_(a, f_qjoin());
    }
    return a;
  }

  FPtr f_qjoin() {
    FPtr a = f_and();
    while (at_sym("(") && at_sym("+", 1) && at_sym(")", 2)) {
      pos_ += 3;
      a = fqjoin(a, f_and());
    }
    return a;
  }

  FPtr f_and() {
    FPtr a = f_prefix();
    while (at_sym("&")) {
      advance();
      a = fand(a, f_prefix());
    }
    return a;
  }

  FPtr f_prefix() {
    if (eat_sym("!")) return fnot(f_prefix());
    if (eat_sym("~")) return fortho(f_prefix());
    if (at_ident("box")) {
      advance();
      return fmbox(f_prefix());
    }
    if (at_ident("dia")) {
      advance();
      return fmdia(f_prefix());
    }
    if (eat_sym("[")) {
      PPtr p = p_choice();
      expect_sym("]");
      return fbox(p, f_prefix());
    }
    if (at_ident("post") && at_sym("<", 1)) {
      advance();
      advance();
      PPtr p = p_choice();
      expect_sym(">");
      return fpostdia(p, f_prefix());
    }
    if (eat_sym("<")) {
      PPtr p = p_choice();
      expect_sym(">");
      return fdia(p, f_prefix());
    }
    return f_atom();
  }

  FPtr f_atom() {
    if (at_ident("true")) {
      advance();
      return fverum();
    }
    if (at_ident("false")) {
      advance();
      return ffalsum();
    }
    if (eat_sym("(")) {
      FPtr f = f_implies();
      expect_sym(")");
      return f;
    }
    // constants: 0_i, 1_i, +_i, -_i
    if ((peek().kind == Tok::Number && (peek().s == "0" || peek().s == "1")) ||
        at_sym("+") || at_sym("-")) {
      char c = advance().s[0];
      expect_sym("_");
      return fconst(c, index());
    }
    if (at_ident("E") && at_sym("[", 1)) {
      advance();
      advance();
      PPtr p = p_choice();
      expect_sym("]");
      expect_sym("(");
      int i = index();
      expect_sym(",");
      int j = index();
      expect_sym(")");
      if (i == j)
        throw LqpError(Err::Arity, "entanglement atom needs distinct indices");
      return fent(p, i, j);
    }
    if (peek().kind == Tok::Ident && !is_reserved(peek().s)) {
      std::string name = advance().s;
      return fvar(std::move(name), opt_indices());
    }
    fail("expected a formula");
  }

  /// Optional subscript: _\{i,...\} or _i; empty means full arity.
  std::vector<int> opt_indices() {
    if (!at_sym("_")) return {};
    advance();
    if (eat_sym("{")) {
      std::vector<int> idx = index_list();
      expect_sym("}");
      return idx;
    }
    return {index()};
  }

  // --- programs ---

  PPtr p_choice() {
    PPtr a = p_seq();
    while (at_sym("+")) {
      advance();
      a = pchoice(a, p_seq());
    }
    return a;
  }

  PPtr p_seq() {
    PPtr a = p_postfix();
    while (at_sym(";")) {
      advance();
      a = pseq(a, p_postfix());
    }
    return a;
  }

  PPtr p_postfix() {
    PPtr a = p_primary();
    while (at_sym("*")) {
      advance();
      a = pstar(a);
    }
    return a;
  }

  PPtr p_primary() {
    if (at_ident("top")) {
      advance();
      return ptrivial();
    }
    if (at_ident("adj")) {
      advance();
      expect_sym("(");
      PPtr p = p_choice();
      expect_sym(")");
      return padj(p);
    }
    if (at_ident("set0")) {
      advance();
      expect_sym("(");
      std::vector<int> idx = index_list();
      expect_sym(")");
      return pset0(std::move(idx));
    }
    if (at_ident("first")) {
      advance();
      expect_sym("(");
      PPtr p = p_choice();
      expect_sym(")");
      return pfirst(p);
    }
    // Speculative: a formula followed by '?' is a test. Gate atoms look
    // like variable atoms, so only commit when the '?' is actually there.
    {
      size_t save = pos_;
      try {
        FPtr f = f_implies();
        if (eat_sym("?")) return ptest(f);
      } catch (const LqpError&) {
      }
      pos_ = save;
    }
    if (peek().kind == Tok::Ident && !is_reserved(peek().s)) {
      std::string name = advance().s;
      std::vector<int> idx = opt_indices();
      if (idx.empty()) fail("gate '" + name + "' needs qubit indices");
      return pgate(std::move(name), std::move(idx));
    }
    if (eat_sym("(")) {
      PPtr p = p_choice();
      expect_sym(")");
      return p;
    }
    fail("expected a program");
  }
};

}  // namespace

FPtr parse_formula(const std::string& text) {
  return Parser(text).formula();
}

PPtr parse_program(const std::string& text) {
  return Parser(text).program();
}

// ---------------------------------------------------------------------------
// Scalars, vectors, matrices (character-level; whitespace-insensitive)
// ---------------------------------------------------------------------------

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

class ScalarReader {
 public:
  explicit ScalarReader(std::string s) : s_(std::move(s)) {}

  GaussianRational read() {
    GaussianRational z = part();
    while (pos_ < s_.size()) {
      if (s_[pos_] != '+' && s_[pos_] != '-') bad();
      z = z + part();
    }
    if (seen_real_ > 1 || seen_imag_ > 1) bad();
    return z;
  }

 private:
  std::string s_;
  size_t pos_ = 0;
  int seen_real_ = 0, seen_imag_ = 0;

  [[noreturn]] void bad() const {
    throw LqpError(Err::Parse, "bad scalar '" + s_ + "'");
  }

  Rational rational() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) bad();
    std::string num = s_.substr(start, pos_ - start);
    std::string den = "1";
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      size_t dstart = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (pos_ == dstart) bad();
      den = s_.substr(dstart, pos_ - dstart);
      if (mpz_class(den) == 0) bad();
    }
    Rational r(num + "/" + den);
    r.canonicalize();
    return r;
  }

  GaussianRational part() {
    if (pos_ >= s_.size()) bad();
    int sign = 1;
    if (s_[pos_] == '+') {
      ++pos_;
    } else if (s_[pos_] == '-') {
      sign = -1;
      ++pos_;
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      ++seen_imag_;
      return {Rational(0), Rational(sign)};
    }
    Rational r = sign * rational();
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      ++seen_imag_;
      return {Rational(0), r};
    }
    ++seen_real_;
    return {r, Rational(0)};
  }
};

/// Splits "(a, b, c)" into scalar substrings.
std::vector<std::string> split_tuple(const std::string& raw) {
  std::string s = strip_ws(raw);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw LqpError(Err::Parse, "expected a parenthesized vector, got '" + raw + "'");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

GaussianRational parse_scalar(const std::string& text) {
  std::string s = strip_ws(text);
  if (s.empty()) throw LqpError(Err::Parse, "empty scalar");
  return ScalarReader(s).read();
}

Vec parse_vec(const std::string& text) {
  std::vector<std::string> parts = split_tuple(text);
  Vec v(parts.size());
  for (size_t k = 0; k < parts.size(); ++k) v[k] = parse_scalar(parts[k]);
  return v;
}

// ---------------------------------------------------------------------------
// Model files
// ---------------------------------------------------------------------------

namespace {

/// Extracts the parenthesized groups "(...)" of a span block.
std::vector<std::string> paren_groups(const std::string& s, int line) {
  std::vector<std::string> groups;
  size_t k = 0;
  while (k < s.size()) {
    if (s[k] == '(') {
      size_t end = s.find(')', k);
      if (end == std::string::npos)
        throw LqpError(Err::Parse,
                       "unbalanced '(' in model file line " + std::to_string(line));
      groups.push_back(s.substr(k, end - k + 1));
      k = end + 1;
    } else {
      ++k;
    }
  }
  return groups;
}

/// Parses "[[a,b],[c,d]]" into a square matrix.
Mat parse_matrix(const std::string& raw, int line) {
  std::string s = strip_ws(raw);
  auto bad = [&](const std::string& why) -> void {
    throw LqpError(Err::Parse,
                   why + " in model file line " + std::to_string(line));
  };
  if (s.size() < 4 || s.front() != '[' || s.back() != ']')
    bad("expected a bracketed matrix");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::vector<GaussianRational>> rows;
  size_t k = 0;
  while (k < body.size()) {
    if (body[k] == ',') {
      ++k;
      continue;
    }
    if (body[k] != '[') bad("expected '[' starting a matrix row");
    size_t end = body.find(']', k);
    if (end == std::string::npos) bad("unbalanced '[' in matrix row");
    std::string row = body.substr(k + 1, end - k - 1);
    std::vector<GaussianRational> entries;
    std::string cur;
    for (char c : row) {
      if (c == ',') {
        entries.push_back(parse_scalar(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) entries.push_back(parse_scalar(cur));
    rows.push_back(std::move(entries));
    k = end + 1;
  }
  if (rows.empty()) bad("empty matrix");
  Mat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols) bad("ragged matrix rows");
    for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool valid_name(const std::string& s) {
  if (s.empty() || is_reserved(s)) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ModelDecl parse_model(const std::string& text) {
  ModelDecl decl;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_qubits = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto bad = [&](const std::string& why) -> void {
      throw LqpError(Err::Parse,
                     why + " in model file line " + std::to_string(lineno));
    };
    auto read_name = [&]() {
      std::string name;
      if (!(ls >> name) || !valid_name(name)) bad("expected a plain name");
      return name;
    };
    auto read_kw = [&](const std::string& kw) {
      std::string w;
      if (!(ls >> w) || w != kw) bad("expected '" + kw + "'");
    };
    auto rest_of_line = [&]() {
      std::string rest;
      std::getline(ls, rest);
      return rest;
    };
    if (word == "qubits") {
      int n = 0;
      if (!(ls >> n) || n < 1) bad("expected a positive qubit count");
      decl.n = n;
      saw_qubits = true;
    } else if (word == "var") {
      ModelDecl::VarDecl v;
      v.name = read_name();
      read_kw("arity");
      if (!(ls >> v.arity) || v.arity < 1) bad("expected a positive arity");
      read_kw("=");
      read_kw("span");
      std::string rest = rest_of_line();
      std::string stripped = strip_ws(rest);
      if (stripped.size() < 2 || stripped.front() != '{' ||
          stripped.back() != '}')
        bad("expected a braced span block");
      for (const std::string& g : paren_groups(rest, lineno))
        v.span.push_back(parse_vec(g));
      decl.vars.push_back(std::move(v));
    } else if (word == "gate") {
      GateDef g;
      g.name = read_name();
      read_kw("arity");
      if (!(ls >> g.arity) || g.arity < 1) bad("expected a positive arity");
      read_kw("=");
      g.m = parse_matrix(rest_of_line(), lineno);
      decl.gates.push_back(std::move(g));
    } else if (word == "state") {
      ModelDecl::StateDecl s;
      s.name = read_name();
      read_kw("=");
      s.value = parse_vec(rest_of_line());
      decl.states.push_back(std::move(s));
    } else {
      bad("unknown declaration '" + word + "'");
    }
  }
  if (!saw_qubits)
    throw LqpError(Err::Parse, "model file lacks a 'qubits N' line");
  return decl;
}

ModelDecl load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw LqpError(Err::Parse, "cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

}  // namespace lqp
