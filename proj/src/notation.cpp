#include "nilclass/notation.hpp"

#include <algorithm>

#include "nilclass/errors.hpp"

namespace nilclass {

namespace {

// A term is [coeff '*'] pair. The pair is either a two-digit juxtaposition
// or "(i,j)". A leading '(' is ambiguous between a coefficient expression
// and a pair; "(a,b" resolves to a pair, "(...)" followed by '*' to a
// coefficient.
RealTerm parse_term(TextCursor& cur, const Bindings& bindings, bool negative) {
  RealTerm term;
  term.coeff = negative ? Scalar(-1) : Scalar(1);

  cur.skip_ws();
  bool have_pair = false;
  while (!have_pair) {
    cur.skip_ws();
    if (cur.peek() == '(') {
      cur.get();
      Scalar first = parse_expr_at(cur, bindings);
      cur.skip_ws();
      if (cur.accept(',')) {
        // index-pair form
        cur.skip_ws();
        Scalar second = parse_expr_at(cur, bindings);
        cur.skip_ws();
        cur.expect(')', "closing an index pair");
        if (!first.is_rational() || !first.rational().is_integer() || !second.is_rational() ||
            !second.rational().is_integer())
          cur.fail("index pair must contain integers");
        term.i = static_cast<int>(first.rational().num().get_si());
        term.j = static_cast<int>(second.rational().num().get_si());
        have_pair = true;
      } else {
        cur.expect(')', "closing a coefficient");
        cur.skip_ws();
        cur.expect('*', "between coefficient and index pair");
        term.coeff *= first;
      }
    } else if (cur.peek() >= '0' && cur.peek() <= '9') {
      std::string digits = cur.read_uint();
      cur.skip_ws();
      if (cur.accept('*')) {
        term.coeff *= Scalar(Rational::from_string(digits));
      } else if (cur.accept('/')) {
        // fractional coefficient "p/q*ij"
        std::string den = cur.read_uint();
        cur.skip_ws();
        cur.expect('*', "after a fractional coefficient");
        term.coeff *= Scalar(Rational::from_string(digits)) / Scalar(Rational::from_string(den));
      } else {
        if (digits.size() != 2)
          cur.fail("expected a two-digit index pair (use \"(i,j)\" for indices >= 10)");
        term.i = digits[0] - '0';
        term.j = digits[1] - '0';
        have_pair = true;
      }
    } else if (cur.ident_start()) {
      // identifier (or expression) coefficient, e.g. "g*34"
      Scalar c = [&] {
        std::string id = cur.read_ident();
        if (id == "i") return Scalar::i();
        auto it = bindings.find(id);
        return it != bindings.end() ? it->second : Scalar::var(id);
      }();
      cur.skip_ws();
      cur.expect('*', "between coefficient and index pair");
      term.coeff *= c;
    } else if (cur.peek() == '-') {
      cur.get();
      term.coeff = -term.coeff;
    } else {
      cur.fail("expected a structure-equation term");
    }
  }
  return term;
}

}  // namespace

RealNotationAST parse_real(const std::string& text, const Bindings& bindings) {
  TextCursor cur(text);
  cur.skip_ws();
  cur.expect('(', "opening the structure-equation list");
  RealNotationAST ast;
  while (true) {
    cur.skip_ws();
    if (cur.peek() == '0' && !(cur.peek2() >= '0' && cur.peek2() <= '9')) {
      // "0" or "0^count"
      cur.get();
      cur.skip_ws();
      RealEntry e;
      if (cur.accept('^')) {
        cur.skip_ws();
        e.zeros = std::stoi(cur.read_uint());
        if (e.zeros < 1) cur.fail("zero run must be positive");
      } else {
        e.zeros = 1;
      }
      ast.entries.push_back(e);
    } else {
      RealEntry e;
      bool neg = false;
      while (true) {
        e.terms.push_back(parse_term(cur, bindings, neg));
        cur.skip_ws();
        if (cur.accept('+')) {
          neg = false;
        } else if (cur.accept('-')) {
          neg = true;
        } else {
          break;
        }
      }
      ast.entries.push_back(std::move(e));
    }
    cur.skip_ws();
    if (cur.accept(',')) continue;
    cur.expect(')', "closing the structure-equation list");
    break;
  }
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after structure equations");
  return ast;
}

LieAlgebra RealNotationAST::to_lie() const {
  int n = dim();
  LieAlgebra g(n);
  int k = 0;
  for (const auto& e : entries) {
    if (e.zeros > 0) {
      k += e.zeros;
      continue;
    }
    ++k;
    for (const auto& t : e.terms) {
      if (t.i < 1 || t.j < 1 || t.i > n || t.j > n)
        throw ParseError("index out of range in term for de^" + std::to_string(k), 1, 1);
      if (t.i >= t.j)
        throw ParseError("indices must satisfy i < j in term for de^" + std::to_string(k), 1, 1);
      g.add_constant(t.i, t.j, k, t.coeff);
    }
  }
  return g;
}

namespace {

std::string coeff_prefix(const Scalar& c) {
  if (c == Scalar(1)) return "";
  if (c == Scalar(-1)) return "-";
  std::string s = c.to_string();
  bool composite = false;
  for (size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') composite = true;
  if (composite) s = "(" + s + ")";
  return s + "*";
}

std::string pair_str(int i, int j, int dim) {
  if (dim <= 9) return std::to_string(i) + std::to_string(j);
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::string RealNotationAST::print() const {
  std::string s = "(";
  int n = dim();
  bool first_entry = true;
  for (const auto& e : entries) {
    if (!first_entry) s += ", ";
    first_entry = false;
    if (e.zeros == 1) {
      s += "0";
    } else if (e.zeros > 1) {
      s += "0^" + std::to_string(e.zeros);
    } else {
      bool first = true;
      for (const auto& t : e.terms) {
        std::string pre = coeff_prefix(t.coeff);
        if (!first && (pre.empty() || pre[0] != '-')) s += "+";
        s += pre + pair_str(t.i, t.j, n);
        first = false;
      }
    }
  }
  return s + ")";
}

RealNotationAST notation_of(const LieAlgebra& g) {
  RealNotationAST ast;
  int n = g.dim();
  std::vector<std::vector<RealTerm>> per_k(static_cast<size_t>(n));
  for (const auto& [key, c] : g.constants())
    per_k[static_cast<size_t>(key[2] - 1)].push_back({c, key[0], key[1]});
  for (auto& terms : per_k)
    std::sort(terms.begin(), terms.end(), [](const RealTerm& a, const RealTerm& b) {
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
  int k = 0;
  while (k < n) {
    if (per_k[static_cast<size_t>(k)].empty()) {
      int run = 0;
      while (k < n && per_k[static_cast<size_t>(k)].empty()) {
        ++run;
        ++k;
      }
      RealEntry e;
      e.zeros = run;
      ast.entries.push_back(e);
    } else {
      RealEntry e;
      e.terms = per_k[static_cast<size_t>(k)];
      ast.entries.push_back(std::move(e));
      ++k;
    }
  }
  if (n == 0) ast.entries.clear();
  return ast;
}

}  // namespace nilclass
