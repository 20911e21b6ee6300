#include "nilclass/expr.hpp"

#include "nilclass/errors.hpp"

namespace nilclass {

void TextCursor::skip_ws(bool skip_newlines) {
  while (!eof()) {
    char c = s_[pos_];
    if (c == ' ' || c == '\t' || c == '\r' || (skip_newlines && c == '\n')) {
      get();
    } else {
      break;
    }
  }
}

char TextCursor::get() {
  if (eof()) fail("unexpected end of input");
  char c = s_[pos_++];
  if (c == '\n') {
    ++line_;
    col_ = 1;
  } else {
    ++col_;
  }
  return c;
}

bool TextCursor::accept(char c) {
  if (peek() == c) {
    get();
    return true;
  }
  return false;
}

void TextCursor::expect(char c, const char* what) {
  if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
}

void TextCursor::fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

std::string TextCursor::read_ident() {
  std::string id;
  while (!eof()) {
    char c = peek();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
        c == '~') {
      id += get();
    } else {
      break;
    }
  }
  if (id.empty()) fail("expected identifier");
  return id;
}

std::string TextCursor::read_uint() {
  std::string num;
  while (!eof() && peek() >= '0' && peek() <= '9') num += get();
  if (num.empty()) fail("expected number");
  return num;
}

namespace {

Scalar parse_sum(TextCursor& cur, const Bindings& bindings);

Scalar parse_atom(TextCursor& cur, const Bindings& bindings) {
  cur.skip_ws();
  if (cur.peek() == '(') {
    cur.get();
    Scalar v = parse_sum(cur, bindings);
    cur.skip_ws();
    cur.expect(')', "closing a parenthesized expression");
    return v;
  }
  if (cur.peek() >= '0' && cur.peek() <= '9') {
    return Scalar(Rational::from_string(cur.read_uint()));
  }
  if (cur.ident_start()) {
    std::string id = cur.read_ident();
    if (id == "i") return Scalar::i();
    if (id == "sqrt") {
      cur.skip_ws();
      cur.expect('(', "after sqrt");
      Scalar arg = parse_sum(cur, bindings);
      cur.skip_ws();
      cur.expect(')', "closing sqrt");
      if (!arg.is_rational()) cur.fail("sqrt argument must be rational");
      auto root = QuadExt::sqrt_in_tower(arg.rational());
      if (!root) cur.fail("sqrt(" + arg.to_string() + ") does not lie in Q(sqrt(2),sqrt(3))");
      return Scalar(*root);
    }
    auto it = bindings.find(id);
    if (it != bindings.end()) return it->second;
    return Scalar::var(id);
  }
  cur.fail("expected a number, identifier or parenthesized expression");
}

Scalar parse_factor(TextCursor& cur, const Bindings& bindings) {
  cur.skip_ws();
  bool neg = cur.accept('-');
  Scalar v = parse_atom(cur, bindings);
  cur.skip_ws();
  if (cur.accept('^')) {
    cur.skip_ws();
    std::string e = cur.read_uint();
    unsigned long n = std::stoul(e);
    Scalar p = Scalar::one();
    for (unsigned long k = 0; k < n; ++k) p *= v;
    v = p;
  }
  return neg ? -v : v;
}

Scalar parse_term(TextCursor& cur, const Bindings& bindings) {
  Scalar v = parse_factor(cur, bindings);
  while (true) {
    cur.skip_ws();
    if (cur.accept('*')) {
      v *= parse_factor(cur, bindings);
    } else if (cur.accept('/')) {
      v /= parse_factor(cur, bindings);
    } else {
      break;
    }
  }
  return v;
}

Scalar parse_sum(TextCursor& cur, const Bindings& bindings) {
  Scalar v = parse_term(cur, bindings);
  while (true) {
    cur.skip_ws();
    if (cur.accept('+')) {
      v += parse_term(cur, bindings);
    } else if (cur.peek() == '-') {
      // leave the sign to the next factor
      v += parse_term(cur, bindings);
    } else {
      break;
    }
  }
  return v;
}

}  // namespace

Scalar parse_expr_at(TextCursor& cur, const Bindings& bindings) { return parse_sum(cur, bindings); }

Scalar parse_scalar_expr(const std::string& text, const Bindings& bindings) {
  TextCursor cur(text);
  Scalar v = parse_sum(cur, bindings);
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after expression");
  return v;
}

}  // namespace nilclass
