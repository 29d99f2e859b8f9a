// field.cpp -- base-field invariants.

#include "shv/field.hpp"

#include "shv/errors.hpp"

namespace shv {

FieldData make_field(long D) {
  if (D < 3 || D % 4 != 3)
    throw CalcError(ErrKind::NotFundamental,
                    "D must be positive with D = 3 (mod 4)");
  FieldData f;
  f.D = D;
  for (auto [p, e] : factorize(D)) {
    if (e > 1)
      throw CalcError(ErrKind::NotFundamental, "D must be squarefree");
    f.primes.push_back(p);
  }
  f.oD = static_cast<int>(f.primes.size());
  f.w = (D == 3) ? 6 : 2;

  // L(0,eps) = -B_{1,eps} and L(0,eps) = 2h/w for the odd character eps.
  Rational L0 = -gen_bernoulli(1, f.eps());
  Rational h = L0 * Rational(f.w, 2);
  if (!h.is_integer() || h.sgn() <= 0)
    throw CalcError(ErrKind::NotFundamental,
                    "class number computation returned a non-integer");
  f.h = h.to_long();

  // Independent check: count reduced primitive forms of discriminant -D.
  long h_forms = class_number_forms(D);
  if (h_forms != f.h)
    throw CalcError(ErrKind::PrecisionLoss,
                    "class number disagreement between the L-value route (" +
                        h.str() + ") and the reduced-forms count (" +
                        std::to_string(h_forms) + ")");
  return f;
}

}  // namespace shv
