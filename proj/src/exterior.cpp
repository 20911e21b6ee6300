#include "nilclass/exterior.hpp"

namespace nilclass {

std::string ExtForm::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name_of = [&](int idx) -> std::string {
    if (!names.empty()) return names[static_cast<size_t>(idx - 1)];
    return "e" + std::to_string(idx);
  };
  std::string s;
  for (const auto& [t, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) mono += "^";
      mono += name_of(t[i]);
    }
    std::string cs = c.to_string();
    if (cs == "1" && !mono.empty()) {
      s += s.empty() ? mono : "+" + mono;
    } else if (cs == "-1" && !mono.empty()) {
      s += "-" + mono;
    } else {
      bool composite = false;
      for (size_t k = 1; k < cs.size(); ++k)
        if (cs[k] == '+' || cs[k] == '-') composite = true;
      if (composite) cs = "(" + cs + ")";
      if (!s.empty() && cs[0] != '-') s += "+";
      s += cs + (mono.empty() ? "" : "*" + mono);
    }
  }
  return s;
}

Differential ce_differential_of(const LieAlgebra& g) {
  Differential d;
  int n = g.dim();
  d.d_gen.assign(static_cast<size_t>(n), ExtForm(n, 2));
  for (const auto& [key, c] : g.constants())
    d.d_gen[static_cast<size_t>(key[2] - 1)].add_term({key[0], key[1]}, c);
  return d;
}

std::vector<std::vector<int>> basis_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) t[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(t);
    int pos = k - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++t[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] + 1;
  }
  return out;
}

Matrix differential_matrix(const Differential& d, int k) {
  int n = d.generators();
  std::vector<std::vector<int>> dom = basis_tuples(n, k);
  std::vector<std::vector<int>> cod = basis_tuples(n, k + 1);
  std::map<std::vector<int>, int> cod_index;
  for (size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
  Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    ExtForm w(n, k);
    w.add_term(dom[j], Scalar::one());
    ExtForm dw = d.apply(w);
    for (const auto& [t, c] : dw.terms()) m(cod_index.at(t), static_cast<int>(j)) = c;
  }
  return m;
}

}  // namespace nilclass
