#pragma once
// Hermitian spaces of signature (n-1,1) over the imaginary quadratic field of
// discriminant -D, described purely by their dimension and the local invariants
// inv_l = (det V, -D)_l at the ramified primes l | D.  Companion spaces,
// residue-level diagonal models, and the per-prime derived signs l* and beta_l
// consumed by the volume and Borcherds modules live here too.

#include <map>
#include <string>
#include <vector>

#include "shv/field.hpp"
#include "shv/rational.hpp"

namespace shv {

struct SpaceSpec {
  FieldData field;
  long n = 0;                 // dimension, >= 1
  std::map<long, int> inv;    // prime l | D  ->  +1 / -1
};

struct LocalGram {
  long p = 0;                 // prime dividing D
  std::vector<long> units;    // n integers coprime to p, diagonal of the local model
};

// Throws InvalidInvariantProduct / UnknownPrime / BadInput on a malformed spec.
void validate_space(const SpaceSpec& spec);

// All 2^(o(D)-1) sign assignments with product -1, primes ascending and +1
// ordered before -1 at each position.
std::vector<SpaceSpec> enumerate_spaces(const FieldData& field, long n);

// Nearby space of dimension n-1 attached to a prime p split in the field:
// inv'(l) = hilbert(p, -D)_l * inv(l).  Requires n >= 3.
SpaceSpec companion_space(const SpaceSpec& spec, long p);

// Diagonal unit model of the local hermitian lattice at p | D: all ones when
// inv(p) = +1, else the least positive non-residue mod p in the first slot.
LocalGram local_gram(const SpaceSpec& spec, long p);

// l* = (-1/l) inv(l) l   (base-case volume constant at l | D).
long ell_star(const SpaceSpec& spec, long ell);

// beta_l = (-1)^(n+1) (-1/l)^floor(n/2) inv(l) l^floor(n/2); the exponent uses
// n/2 for even n and (n-1)/2 for odd n.
Rational beta_ell(const SpaceSpec& spec, long ell);

// Canonical round-trip form "D=7;n=3;inv=7:-1" (primes ascending).
std::string spec_to_string(const SpaceSpec& spec);
SpaceSpec parse_space(const std::string& text);

}  // namespace shv
