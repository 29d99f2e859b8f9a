// field.hpp -- invariants of the imaginary quadratic base field.
//
// The field is determined by a squarefree D = 3 (mod 4); its discriminant is
// -D and its quadratic character is eps(a) = (a|D).  make_field computes the
// class number exactly from the generalized Bernoulli number via
// L(0,eps) = 2h/w = -B_{1,eps}, and cross-checks it against the independent
// reduced-forms counter.
#pragma once

#include <vector>

#include "shv/numtheory.hpp"
#include "shv/rational.hpp"

namespace shv {

struct FieldData {
  long D = 0;                // squarefree, D = 3 (mod 4)
  std::vector<long> primes;  // prime divisors of D, ascending
  int oD = 0;                // number of prime divisors
  long h = 0;                // class number
  long w = 0;                // number of roots of unity (6 for D=3, else 2)

  CharSpec eps() const { return CharSpec::field_char(D); }
};

// Validates D and fills in all invariants.  Throws NotFundamental if -D is
// not the discriminant of an imaginary quadratic field with odd D.
FieldData make_field(long D);

}  // namespace shv
