#include "nilclass/jacobi_conditions.hpp"

namespace nilclass {

namespace {

Scalar sv(const std::string& n) { return Scalar::var(n); }

Poly pv(const std::string& n) { return Poly::variable(n); }

Poly pi() { return Poly::constant(gauss_i()); }

}  // namespace

ComplexStructEqs generic_equations() {
  ComplexStructEqs eqs(4);
  Scalar i = Scalar::i();
  // dw2
  eqs.add_11(2, 1, 1, sv("A"));
  eqs.add_20(2, 1, 4, -sv("B"));
  eqs.add_11(2, 1, 4, sv("B"));
  // dw3
  eqs.add_11(3, 1, 1, sv("F"));
  eqs.add_11(3, 2, 2, sv("K"));
  eqs.add_20(3, 1, 2, sv("C"));
  eqs.add_11(3, 1, 2, sv("D"));
  eqs.add_11(3, 2, 1, sv("G"));
  eqs.add_20(3, 1, 4, -sv("E"));
  eqs.add_11(3, 1, 4, sv("E"));
  eqs.add_20(3, 2, 4, -sv("H"));
  eqs.add_11(3, 2, 4, sv("H"));
  // dw4
  eqs.add_11(4, 1, 1, sv("L"));
  eqs.add_11(4, 2, 2, i * sv("s"));
  eqs.add_11(4, 3, 3, i * sv("t"));
  eqs.add_11(4, 1, 2, sv("M"));
  eqs.add_11(4, 2, 1, -sv("M~"));
  eqs.add_11(4, 1, 3, sv("N"));
  eqs.add_11(4, 3, 1, -sv("N~"));
  eqs.add_11(4, 2, 3, sv("P"));
  eqs.add_11(4, 3, 2, -sv("P~"));
  return eqs;
}

const std::vector<NamedCondition>& jacobi_conditions_general() {
  static const std::vector<NamedCondition> conditions = [] {
    std::vector<NamedCondition> c;
    Poly A = pv("A"), B = pv("B"), C = pv("C"), D = pv("D"), E = pv("E"), F = pv("F"),
         G = pv("G"), H = pv("H"), K = pv("K"), L = pv("L"), M = pv("M"), N = pv("N"),
         P = pv("P");
    Poly Bb = pv("B~"), Cb = pv("C~"), Eb = pv("E~"), Hb = pv("H~"), Lb = pv("L~"),
         Mb = pv("M~"), Nb = pv("N~"), Pb = pv("P~");
    Poly s = pv("s"), t = pv("t");
    Poly i = pi();

    c.push_back({"AH - BG + ~B D = 0", {A * H - B * G + Bb * D}});
    c.push_back({"AK = BK = 0", {A * K, B * K}});
    c.push_back({"tH = tK = tC = 0", {t * H, t * K, t * C}});
    c.push_back({"K~N - P~C - ~P G = 0", {K * Nb - P * Cb - Pb * G}});
    c.push_back({"H Re L = 0", {H * (L + Lb)}});
    c.push_back({"tD = tG = 0", {t * D, t * G}});
    c.push_back({"isA - F~P - N~C + ~N D = 0", {i * s * A - F * Pb - N * Cb + Nb * D}});
    c.push_back({"Re(P~H) = 0", {P * Hb + Pb * H}});
    c.push_back({"itE + BP = 0", {i * t * E + B * P}});
    c.push_back({"isB - E~P - N~H = 0", {i * s * B - E * Pb - N * Hb}});
    c.push_back({"Re(M~B + N~E) = 0", {M * Bb + Mb * B + N * Eb + Nb * E}});
    c.push_back({"itF + AP = 0", {i * t * F + A * P}});
    return c;
  }();
  return conditions;
}

const std::vector<CenterPredicate>& center_conditions() {
  static const std::vector<CenterPredicate> preds = {
      {"(B, E, H) != (0,0,0)", {"B", "E", "H"}},
      {"(N, P, t) != (0,0,0)", {"N", "P", "t"}},
      {"(C, D, G, H, K, M, P, s) != (0,...,0)", {"C", "D", "G", "H", "K", "M", "P", "s"}},
  };
  return preds;
}

namespace {

bool same_up_to_scalar_and_conj(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  Poly am = a.monic();
  if (am == b.monic()) return true;
  return am == b.conj().monic();
}

// Over real parameter points X~ is the conjugate of X, so a product
// condition like BK = 0 is equivalent to any bar pattern of its factors.
// Variants of a single-term atom: all bar patterns of its variables.
std::vector<Poly> bar_variants(const Poly& atom) {
  std::vector<std::string> factors;
  const auto& term = *atom.terms().begin();
  for (size_t i = 0; i < atom.variables().size(); ++i)
    for (unsigned e = 0; e < term.first[i]; ++e) factors.push_back(atom.variables()[i]);
  std::vector<Poly> out;
  size_t combos = size_t{1} << factors.size();
  for (size_t mask = 0; mask < combos; ++mask) {
    Poly p = Poly::constant(Rational(1));
    for (size_t f = 0; f < factors.size(); ++f) {
      std::string name = factors[f];
      if (mask & (size_t{1} << f)) name = Poly::conj_name(name);
      p *= Poly::variable(name);
    }
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

// Membership of `target` in the Q(i)-span of `basis`, over the monomial
// coordinates of the polynomials.
bool in_span(const std::vector<Poly>& basis, const Poly& target) {
  Poly probe = target;
  for (const auto& b : basis) probe += b;  // align variable universes
  std::map<std::vector<unsigned>, int, detail::GrlexDesc> index;
  auto collect = [&](const Poly& p) {
    Poly aligned = p + (probe - probe);  // reuse aligned var order via addition with zero
    for (const auto& [m, c] : aligned.terms()) {
      (void)c;
      if (!index.count(m)) {
        int next = static_cast<int>(index.size());
        index[m] = next;
      }
    }
    return aligned;
  };
  std::vector<Poly> cols;
  for (const auto& b : basis) cols.push_back(collect(b));
  Poly tgt = collect(target);
  Matrix a(static_cast<int>(index.size()), static_cast<int>(cols.size()));
  Matrix aug(static_cast<int>(index.size()), static_cast<int>(cols.size()) + 1);
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : cols[j].terms()) {
      a(index.at(m), static_cast<int>(j)) = Scalar(c);
      aug(index.at(m), static_cast<int>(j)) = Scalar(c);
    }
  for (const auto& [m, c] : tgt.terms()) aug(index.at(m), static_cast<int>(cols.size())) = Scalar(c);
  return rank_over_field(a) == rank_over_field(aug);
}

}  // namespace

std::vector<std::string> match_jacobi_residuals() {
  std::vector<std::string> problems;
  std::vector<Scalar> residuals = generic_equations().jacobi_residual_coefficients();

  struct Atom {
    std::string name;
    Poly poly;
    bool monomial;
    bool seen = false;
  };
  std::vector<Atom> atoms;
  for (const auto& cond : jacobi_conditions_general())
    for (size_t k = 0; k < cond.polys.size(); ++k)
      atoms.push_back({cond.name + " [" + std::to_string(k) + "]", cond.polys[k],
                       cond.polys[k].terms().size() == 1});

  // Pass 1: term-by-term matches (bar patterns allowed on product
  // conditions, global conjugation on composite ones).
  std::vector<Poly> leftovers;
  for (const Scalar& r : residuals) {
    Poly rp = r.to_poly();
    bool found = false;
    for (auto& atom : atoms) {
      if (atom.monomial) {
        for (const Poly& variant : bar_variants(atom.poly))
          if (same_up_to_scalar_and_conj(rp, variant)) {
            found = true;
            break;
          }
      } else if (same_up_to_scalar_and_conj(rp, atom.poly)) {
        found = true;
      }
      if (found) {
        atom.seen = true;
        break;
      }
    }
    if (!found) leftovers.push_back(rp);
  }

  // Pass 2: leftover slots must decompose over the variant span (this is
  // where H Re L appears, summed with ~A K).
  std::vector<Poly> variant_basis;
  for (const auto& atom : atoms) {
    if (atom.monomial) {
      for (const Poly& v : bar_variants(atom.poly)) variant_basis.push_back(v);
    } else {
      variant_basis.push_back(atom.poly);
      variant_basis.push_back(atom.poly.conj());
    }
  }
  for (const Poly& rp : leftovers)
    if (!in_span(variant_basis, rp))
      problems.push_back("unmatched residual coefficient: " + rp.to_string());

  // Every hand-entered condition must be recovered: directly, or (for the
  // composite ones) as a combination of residual slots and bar variants of
  // directly-matched product conditions.
  std::vector<Poly> residual_basis;
  for (const Scalar& r : residuals) {
    residual_basis.push_back(r.to_poly());
    residual_basis.push_back(r.to_poly().conj());
  }
  for (const auto& atom : atoms)
    if (atom.monomial && atom.seen)
      for (const Poly& v : bar_variants(atom.poly)) residual_basis.push_back(v);
  for (const auto& atom : atoms) {
    if (atom.seen) continue;
    if (!in_span(residual_basis, atom.poly))
      problems.push_back("condition not produced by d^2: " + atom.name);
  }
  return problems;
}

}  // namespace nilclass
