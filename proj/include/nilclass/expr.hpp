// Small recursive-descent parser for scalar coefficient expressions shared
// by the real-notation parser, the complex-equation DSL, --params values
// and certificate files.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' uint]
//   atom   := uint | 'i' | 'sqrt' '(' expr ')' | ident | '(' expr ')'
//
// 'i' is the imaginary unit. Identifiers bound in `bindings` evaluate to
// their values; unbound identifiers become polynomial variables (names with
// an upper-case first letter are complex parameters, lower-case are real).
// sqrt(r) requires r to be a rational whose root lies in Q(sqrt(2),sqrt(3)).
#pragma once

#include <map>
#include <string>

#include "nilclass/scalar.hpp"

namespace nilclass {

using Bindings = std::map<std::string, Scalar>;

Scalar parse_scalar_expr(const std::string& text, const Bindings& bindings = {});

// Cursor over a text buffer with line/column tracking; shared by the
// notation parsers.
class TextCursor {
 public:
  explicit TextCursor(const std::string& text) : s_(text) {}

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  char peek2() const { return pos_ + 1 >= s_.size() ? '\0' : s_[pos_ + 1]; }
  void skip_ws(bool skip_newlines = true);
  char get();
  bool accept(char c);
  void expect(char c, const char* what);
  [[noreturn]] void fail(const std::string& msg) const;

  int line() const { return line_; }
  int col() const { return col_; }

  bool ident_start() const {
    char c = peek();
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  std::string read_ident();
  std::string read_uint();

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Parses one expression starting at the cursor (used inside larger
// grammars).
Scalar parse_expr_at(TextCursor& cur, const Bindings& bindings);

}  // namespace nilclass
