#include "nilclass/complex_dsl.hpp"

#include <algorithm>

#include "nilclass/errors.hpp"

namespace nilclass {

namespace {

// wab | wa~b | w~a~b (rejected later); also w~ab.
void parse_wmono(TextCursor& cur, ComplexTerm* term) {
  // caller consumed 'w'
  term->a_bar = cur.accept('~');
  char ca = cur.get();
  if (ca < '0' || ca > '9') cur.fail("expected a generator index");
  term->a = ca - '0';
  term->b_bar = cur.accept('~');
  char cb = cur.get();
  if (cb < '0' || cb > '9') cur.fail("expected a generator index");
  term->b = cb - '0';
}

bool is_w_monomial_ahead(TextCursor& cur) {
  // 'w' followed by a digit or '~'
  if (cur.peek() != 'w') return false;
  char c2 = cur.peek2();
  return (c2 >= '0' && c2 <= '9') || c2 == '~';
}

ComplexTerm parse_cterm(TextCursor& cur, const Bindings& bindings, bool negative) {
  ComplexTerm term;
  term.coeff = negative ? Scalar(-1) : Scalar(1);
  while (true) {
    cur.skip_ws(false);
    if (cur.peek() == '-') {
      cur.get();
      term.coeff = -term.coeff;
      continue;
    }
    if (is_w_monomial_ahead(cur)) {
      cur.get();  // 'w'
      parse_wmono(cur, &term);
      return term;
    }
    // a coefficient factor, then '*'
    if (cur.peek() == '(') {
      cur.get();
      Scalar v = parse_expr_at(cur, bindings);
      cur.skip_ws(false);
      cur.expect(')', "closing a coefficient");
      term.coeff *= v;
    } else if (cur.peek() >= '0' && cur.peek() <= '9') {
      std::string num = cur.read_uint();
      Scalar v(Rational::from_string(num));
      cur.skip_ws(false);
      if (cur.accept('/')) {
        cur.skip_ws(false);
        v /= Scalar(Rational::from_string(cur.read_uint()));
      }
      term.coeff *= v;
    } else if (cur.ident_start()) {
      std::string id = cur.read_ident();
      if (id == "i") {
        term.coeff *= Scalar::i();
      } else if (id == "sqrt") {
        cur.skip_ws(false);
        cur.expect('(', "after sqrt");
        Scalar arg = parse_expr_at(cur, bindings);
        cur.skip_ws(false);
        cur.expect(')', "closing sqrt");
        if (!arg.is_rational()) cur.fail("sqrt argument must be rational");
        auto root = QuadExt::sqrt_in_tower(arg.rational());
        if (!root) cur.fail("sqrt(" + arg.to_string() + ") does not lie in Q(sqrt(2),sqrt(3))");
        term.coeff *= Scalar(*root);
      } else {
        auto it = bindings.find(id);
        term.coeff *= it != bindings.end() ? it->second : Scalar::var(id);
      }
    } else {
      cur.fail("expected a coefficient or w-monomial");
    }
    cur.skip_ws(false);
    cur.expect('*', "between coefficient factors of a w-monomial");
  }
}

}  // namespace

ComplexEqAST parse_complex(const std::string& text, const Bindings& bindings) {
  TextCursor cur(text);
  std::vector<std::pair<int, std::vector<ComplexTerm>>> lines;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) break;
    if (cur.accept(';')) continue;
    // "dw<k> ="
    std::string head = cur.read_ident();
    if (head.size() < 3 || head.substr(0, 2) != "dw")
      cur.fail("expected an equation of the form dw<k> = ...");
    int k = std::stoi(head.substr(2));
    cur.skip_ws(false);
    cur.expect('=', "after the left-hand side");
    cur.skip_ws(false);
    std::vector<ComplexTerm> terms;
    if (cur.peek() == '0' && !is_w_monomial_ahead(cur)) {
      cur.get();
    } else {
      bool neg = false;
      while (true) {
        terms.push_back(parse_cterm(cur, bindings, neg));
        cur.skip_ws(false);
        if (cur.accept('+')) {
          neg = false;
        } else if (cur.peek() == '-') {
          neg = false;  // sign handled inside the term
        } else {
          break;
        }
      }
    }
    lines.emplace_back(k, std::move(terms));
    cur.skip_ws(false);
    if (cur.eof()) break;
    if (cur.accept(';') || cur.accept('\n')) continue;
    cur.fail("expected ';' or newline between equations");
  }
  if (lines.empty()) throw ParseError("no equations", 1, 1);
  int n = 0;
  for (const auto& [k, t] : lines) n = std::max(n, k);
  ComplexEqAST ast;
  ast.n = n;
  ast.rhs.assign(static_cast<size_t>(n), {});
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (auto& [k, t] : lines) {
    if (k < 1) throw ParseError("bad generator index dw" + std::to_string(k), 1, 1);
    if (seen[static_cast<size_t>(k - 1)])
      throw ParseError("duplicate equation for dw" + std::to_string(k), 1, 1);
    seen[static_cast<size_t>(k - 1)] = true;
    ast.rhs[static_cast<size_t>(k - 1)] = std::move(t);
  }
  for (int k = 1; k <= n; ++k)
    if (!seen[static_cast<size_t>(k - 1)])
      throw ParseError("missing equation for dw" + std::to_string(k), 1, 1);
  return ast;
}

ComplexStructEqs ComplexEqAST::to_eqs() const {
  ComplexStructEqs eqs(n);
  for (int k = 1; k <= n; ++k)
    for (const auto& t : rhs[static_cast<size_t>(k - 1)]) {
      if (t.a < 1 || t.a > n || t.b < 1 || t.b > n)
        throw ParseError("generator index out of range in dw" + std::to_string(k), 1, 1);
      if (t.a_bar && t.b_bar)
        throw IntegrabilityError("(0,2) monomial w~" + std::to_string(t.a) + "~" +
                                 std::to_string(t.b) + " in dw" + std::to_string(k));
      int a = t.a_bar ? t.a + n : t.a;
      int b = t.b_bar ? t.b + n : t.b;
      eqs.add_term(k, a, b, t.coeff);
    }
  return eqs;
}

std::string ComplexEqAST::print() const {
  std::string s;
  for (int k = 1; k <= n; ++k) {
    s += "dw" + std::to_string(k) + " = ";
    const auto& terms = rhs[static_cast<size_t>(k - 1)];
    if (terms.empty()) {
      s += "0";
    } else {
      bool first = true;
      for (const auto& t : terms) {
        std::string pre;
        if (t.coeff == Scalar(1))
          pre = "";
        else if (t.coeff == Scalar(-1))
          pre = "-";
        else {
          std::string cs = t.coeff.to_string();
          bool composite = false;
          for (size_t q = 1; q < cs.size(); ++q)
            if (cs[q] == '+' || cs[q] == '-') composite = true;
          pre = (composite ? "(" + cs + ")" : cs) + "*";
        }
        if (!first && (pre.empty() || pre[0] != '-')) s += " + ";
        else if (!first) s += " ";
        s += pre + "w" + (t.a_bar ? "~" : "") + std::to_string(t.a) + (t.b_bar ? "~" : "") +
             std::to_string(t.b);
        first = false;
      }
    }
    if (k < n) s += "\n";
  }
  return s;
}

}  // namespace nilclass
