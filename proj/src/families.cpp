#include "nilclass/families.hpp"

#include "nilclass/errors.hpp"

namespace nilclass {

namespace {

bool numeric(const Scalar& s) { return s.kind() != RingKind::Poly; }

void check_binary(int v, const char* name) {
  if (v != 0 && v != 1) throw InvalidParams(std::string(name) + " must be 0 or 1");
}

}  // namespace

void FamilyIParams::check() const {
  check_binary(eps, "epsilon");
  check_binary(nu, "nu");
  if (delta != 1 && delta != -1) throw InvalidParams("delta = +-1");
  if (numeric(a)) {
    if (!a.is_real()) throw InvalidParams("a must be real");
    if (a.sign() < 0) throw InvalidParams("a >= 0");
  }
  if (numeric(b) && !b.is_real()) throw InvalidParams("b must be real");
  if (numeric(a) && numeric(b) && a.is_zero() && b.is_zero())
    throw InvalidParams("(a,b) != (0,0)");
}

void FamilyIIParams::check() const {
  check_binary(eps, "epsilon");
  check_binary(mu, "mu");
  check_binary(nu, "nu");
  if (mu * nu != 0) throw InvalidParams("mu*nu = 0");
  if (eps == 0 && mu == 0) throw InvalidParams("(epsilon,mu) != (0,0)");
  if (numeric(a) && !a.is_real()) throw InvalidParams("a must be real");
  if (numeric(b) && !b.is_real()) throw InvalidParams("b must be real");
}

ComplexStructEqs family_I_raw(int eps, int nu, int delta, const Scalar& a, const Scalar& b) {
  ComplexStructEqs eqs(4);
  Scalar i = Scalar::i();
  Scalar d(delta);
  // dw2 = eps w11~
  if (eps) eqs.add_11(2, 1, 1, Scalar(eps));
  // dw3 = w14 + w14~ + a w21~ + i delta eps b w12~
  eqs.add_20(3, 1, 4, Scalar::one());
  eqs.add_11(3, 1, 4, Scalar::one());
  eqs.add_11(3, 2, 1, a);
  if (eps) eqs.add_11(3, 1, 2, i * d * Scalar(eps) * b);
  // dw4 = i nu w11~ + b w22~ + i delta (w13~ - w31~)
  if (nu) eqs.add_11(4, 1, 1, i * Scalar(nu));
  eqs.add_11(4, 2, 2, b);
  eqs.add_11(4, 1, 3, i * d);
  eqs.add_11(4, 3, 1, -(i * d));
  return eqs;
}

ComplexStructEqs family_II_raw(int eps, int mu, int nu, const Scalar& a, const Scalar& b) {
  ComplexStructEqs eqs(4);
  Scalar i = Scalar::i();
  // dw2 = w14 + w14~
  eqs.add_20(2, 1, 4, Scalar::one());
  eqs.add_11(2, 1, 4, Scalar::one());
  // dw3 = a w11~ + eps (w12 + w12~ - w21~) + i mu (w24 + w24~)
  eqs.add_11(3, 1, 1, a);
  if (eps) {
    eqs.add_20(3, 1, 2, Scalar(eps));
    eqs.add_11(3, 1, 2, Scalar(eps));
    eqs.add_11(3, 2, 1, Scalar(-eps));
  }
  if (mu) {
    eqs.add_20(3, 2, 4, i * Scalar(mu));
    eqs.add_11(3, 2, 4, i * Scalar(mu));
  }
  // dw4 = i nu w11~ - mu w22~ + i b (w12~ - w21~) + i (w13~ - w31~)
  if (nu) eqs.add_11(4, 1, 1, i * Scalar(nu));
  if (mu) eqs.add_11(4, 2, 2, Scalar(-mu));
  eqs.add_11(4, 1, 2, i * b);
  eqs.add_11(4, 2, 1, -(i * b));
  eqs.add_11(4, 1, 3, i);
  eqs.add_11(4, 3, 1, -i);
  return eqs;
}

ComplexStructEqs family_I(const FamilyIParams& p) {
  p.check();
  return family_I_raw(p.eps, p.nu, p.delta, p.a, p.b);
}

ComplexStructEqs family_II(const FamilyIIParams& p) {
  p.check();
  return family_II_raw(p.eps, p.mu, p.nu, p.a, p.b);
}

std::vector<int> predicted_ascending_type_I(const FamilyIParams& p) {
  p.check();
  if (!numeric(p.a) || !numeric(p.b))
    throw InvalidParams("ascending type prediction needs numeric a, b");
  bool a_zero = p.a.is_zero();
  if (!a_zero) {
    if (p.eps == 0 && p.nu == 0) return {1, 3, 8};
    return {1, 3, 6, 8};
  }
  if (p.eps == 1) {
    if (p.nu == 1 && p.b == Scalar(2 * p.delta)) return {1, 4, 8};
    return {1, 4, 6, 8};
  }
  if (p.nu == 0) return {1, 5, 8};
  return {1, 5, 6, 8};
}

std::vector<int> predicted_ascending_type_II(const FamilyIIParams& p) {
  p.check();
  if (p.nu == 0) return {1, 3, 5, 8};
  return {1, 3, 5, 6, 8};
}

std::optional<std::string> table1_row(const FamilyIParams& p) {
  if (!numeric(p.a) || !numeric(p.b)) return std::nullopt;
  const Scalar& a = p.a;
  const Scalar& b = p.b;
  bool breal = b.is_real();
  if (!breal) return std::nullopt;
  if (p.eps == 0 && p.nu == 0 && a == Scalar(1) && (b.is_zero() || b == Scalar(1)))
    return "(1,3,8)";
  if (p.eps == 1 && p.nu == 0 && a == Scalar(1) && b.sign() >= 0) return "(1,3,6,8)";
  if (p.eps == 0 && p.nu == 1 && a == Scalar(1)) return "(1,3,6,8)";
  if (p.eps == 1 && p.nu == 1 && a.sign() > 0) return "(1,3,6,8)";
  if (p.eps == 1 && p.nu == 1 && a.is_zero() && b == Scalar(2 * p.delta)) return "(1,4,8)";
  if (p.eps == 1 && p.nu == 0 && a.is_zero() && b == Scalar(1)) return "(1,4,6,8)";
  if (p.eps == 1 && p.nu == 1 && a.is_zero() && !b.is_zero() && b != Scalar(2 * p.delta))
    return "(1,4,6,8)";
  if (p.eps == 0 && p.nu == 0 && a.is_zero() && b == Scalar(1)) return "(1,5,8)";
  if (p.eps == 0 && p.nu == 1 && a.is_zero() && (b == Scalar(1) || b == Scalar(-1)))
    return "(1,5,6,8)";
  return std::nullopt;
}

std::optional<std::string> table2_row(const FamilyIIParams& p) {
  if (!numeric(p.a) || !numeric(p.b)) return std::nullopt;
  const Scalar& a = p.a;
  const Scalar& b = p.b;
  bool a01 = a.is_zero() || a == Scalar(1);
  if (p.eps == 0 && p.mu == 1 && p.nu == 0 && a01 && b.is_zero()) return "(1,3,5,8)";
  if (p.eps == 1 && p.mu == 0 && p.nu == 0 && a01) return "(1,3,5,8)";
  if (p.eps == 1 && p.mu == 1 && p.nu == 0) return "(1,3,5,8)";
  if (p.eps == 1 && p.mu == 0 && p.nu == 1) return "(1,3,5,6,8)";
  return std::nullopt;
}

}  // namespace nilclass
