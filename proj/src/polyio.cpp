#include "einsp/polyio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace einsp {

std::string poly_to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = *p.context();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.c.sign() < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;

    const BigRational a = t.c.abs();
    std::string mono;
    for (std::size_t i = 0; i < ctx.arity(); ++i) {
      if (!t.m.exps[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.name(i);
      if (t.m.exps[i] > 1) mono += "^" + std::to_string(t.m.exps[i]);
    }
    if (mono.empty()) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string text;

  explicit Lexer(const std::string& src) : s(src) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" + s + "'");
  }

  void advance() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    text.clear();
    if (pos == s.size()) {
      tok = Tok::End;
      return;
    }
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) text += s[pos++];
      tok = Tok::Num;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        text += s[pos++];
      tok = Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '^': tok = Tok::Caret; return;
      case '/': tok = Tok::Slash; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: --pos; fail(std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lx;
  VarCtxPtr ctx;

  Parser(const std::string& src, VarCtxPtr c) : lx(src), ctx(std::move(c)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (lx.tok != Tok::End) lx.fail("trailing input");
    return p;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
      const bool sub = lx.tok == Tok::Minus;
      lx.advance();
      MultiPoly t = term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (lx.tok == Tok::Star) {
      lx.advance();
      acc = acc * unary();
    }
    return acc;
  }

  // unary minus binds looser than '^': -x^2 parses as -(x^2)
  MultiPoly unary() {
    if (lx.tok == Tok::Plus) {
      lx.advance();
      return unary();
    }
    if (lx.tok == Tok::Minus) {
      lx.advance();
      return -unary();
    }
    return factor();
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (lx.tok == Tok::Caret) {
      lx.advance();
      if (lx.tok != Tok::Num) lx.fail("exponent must be a nonnegative integer");
      const unsigned long e = std::stoul(lx.text);
      lx.advance();
      base = base.pow(e);
    }
    return base;
  }

  MultiPoly atom() {
    if (lx.tok == Tok::Num) {
      const BigInt num(lx.text);
      lx.advance();
      if (lx.tok == Tok::Slash) {
        lx.advance();
        if (lx.tok != Tok::Num) lx.fail("denominator must be an integer literal");
        const BigInt den(lx.text);
        lx.advance();
        if (den == 0) lx.fail("zero denominator");
        return MultiPoly::constant(ctx, BigRational(num, den));
      }
      return MultiPoly::constant(ctx, BigRational(num));
    }
    if (lx.tok == Tok::Ident) {
      const std::string name = lx.text;
      lx.advance();
      if (!ctx->find(name)) lx.fail("unknown variable '" + name + "'");
      return MultiPoly::variable(ctx, name);
    }
    if (lx.tok == Tok::LParen) {
      lx.advance();
      MultiPoly inner = expr();
      if (lx.tok != Tok::RParen) lx.fail("expected ')'");
      lx.advance();
      return inner;
    }
    lx.fail("expected number, variable or '('");
  }
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

MultiPoly poly_from_text(const std::string& text, const VarCtxPtr& ctx) {
  return Parser(text, ctx).parse();
}

PolyFile parse_poly_file_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  PolyFile file;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!file.ctx) {
      if (t.rfind("vars:", 0) != 0) throw ParseError("poly file must start with a vars: line");
      std::vector<std::string> names;
      std::string rest = t.substr(5);
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        const std::string name =
            trim(comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start));
        if (!valid_ident(name)) throw ParseError("bad variable name '" + name + "'");
        names.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      file.ctx = VarContext::make(std::move(names));
      continue;
    }
    file.polys.push_back(poly_from_text(t, file.ctx));
  }
  if (!file.ctx) throw ParseError("poly file missing vars: line");
  return file;
}

std::string poly_file_to_text(const PolyFile& file) {
  std::string out = "vars:";
  for (std::size_t i = 0; i < file.ctx->arity(); ++i)
    out += (i ? ", " : " ") + file.ctx->name(i);
  out += "\n";
  for (const auto& p : file.polys) out += poly_to_text(p) + "\n";
  return out;
}

PolyFile read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open poly file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_poly_file_text(ss.str());
}

void write_poly_file(const std::string& path, const PolyFile& file) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write poly file '" + path + "'");
  out << poly_file_to_text(file);
}

}  // namespace einsp
