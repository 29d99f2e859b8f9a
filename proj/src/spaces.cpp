#include "shv/spaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "shv/errors.hpp"
#include "shv/numtheory.hpp"

namespace shv {

void validate_space(const SpaceSpec& spec) {
  if (spec.n < 1) throw CalcError(ErrKind::BadInput, "dimension must be >= 1");
  int prod = 1;
  for (const auto& [ell, sign] : spec.inv) {
    if (std::find(spec.field.primes.begin(), spec.field.primes.end(), ell) ==
        spec.field.primes.end()) {
      throw CalcError(ErrKind::UnknownPrime,
                      "invariant key " + std::to_string(ell) +
                          " does not divide " + std::to_string(spec.field.D));
    }
    if (sign != 1 && sign != -1) {
      throw CalcError(ErrKind::BadInput, "invariant values must be +1 or -1");
    }
    prod *= sign;
  }
  if (spec.inv.size() != spec.field.primes.size()) {
    throw CalcError(ErrKind::BadInput,
                    "need an invariant at every prime dividing the discriminant");
  }
  if (prod != -1) {
    throw CalcError(ErrKind::InvalidInvariantProduct,
                    "product of local invariants must be -1");
  }
}

std::vector<SpaceSpec> enumerate_spaces(const FieldData& field, long n) {
  if (n < 1) throw CalcError(ErrKind::BadInput, "dimension must be >= 1");
  const auto& primes = field.primes;
  std::vector<SpaceSpec> out;
  const size_t o = primes.size();
  // Lexicographic over sign vectors with +1 before -1: counting bit patterns
  // in increasing order with bit 0 of the mask steering the smallest prime
  // (0 -> +1, 1 -> -1) does exactly that once the mask is read MSB-last.
  for (unsigned long mask = 0; mask < (1ul << o); ++mask) {
    int prod = 1;
    SpaceSpec spec;
    spec.field = field;
    spec.n = n;
    for (size_t i = 0; i < o; ++i) {
      int sign = (mask >> i) & 1 ? -1 : 1;
      spec.inv[primes[i]] = sign;
      prod *= sign;
    }
    if (prod == -1) out.push_back(std::move(spec));
  }
  // Masks enumerate with the low bit (smallest prime) varying fastest; sort to
  // make the leftmost (smallest) prime the most significant lexicographic key.
  std::sort(out.begin(), out.end(), [&](const SpaceSpec& a, const SpaceSpec& b) {
    for (long p : primes) {
      int sa = a.inv.at(p), sb = b.inv.at(p);
      if (sa != sb) return sa > sb;  // +1 sorts before -1
    }
    return false;
  });
  return out;
}

SpaceSpec companion_space(const SpaceSpec& spec, long p) {
  validate_space(spec);
  if (spec.n < 3) {
    throw CalcError(ErrKind::DimensionTooSmall,
                    "companion space needs dimension >= 3");
  }
  if (!is_prime(p) || kronecker(-spec.field.D, p) != 1) {
    throw CalcError(ErrKind::NotSplit,
                    std::to_string(p) + " is not split in the field");
  }
  SpaceSpec out = spec;
  out.n = spec.n - 1;
  for (auto& [ell, sign] : out.inv) {
    sign *= hilbert_symbol_ll(p, -spec.field.D, ell);
  }
  validate_space(out);
  return out;
}

LocalGram local_gram(const SpaceSpec& spec, long p) {
  validate_space(spec);
  auto it = spec.inv.find(p);
  if (it == spec.inv.end()) {
    throw CalcError(ErrKind::UnknownPrime,
                    std::to_string(p) + " does not divide the discriminant");
  }
  LocalGram g;
  g.p = p;
  g.units.assign(static_cast<size_t>(spec.n), 1);
  if (it->second == -1) {
    long u = 2;
    while (kronecker(u, p) != -1) ++u;
    g.units[0] = u;
  }
  return g;
}

long ell_star(const SpaceSpec& spec, long ell) {
  auto it = spec.inv.find(ell);
  if (it == spec.inv.end()) {
    throw CalcError(ErrKind::UnknownPrime,
                    std::to_string(ell) + " does not divide the discriminant");
  }
  return kronecker(-1, ell) * it->second * ell;
}

Rational beta_ell(const SpaceSpec& spec, long ell) {
  auto it = spec.inv.find(ell);
  if (it == spec.inv.end()) {
    throw CalcError(ErrKind::UnknownPrime,
                    std::to_string(ell) + " does not divide the discriminant");
  }
  const long half = spec.n / 2;  // n/2 for even n, (n-1)/2 for odd n
  long sign = (spec.n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
  if (half % 2 == 1) sign *= kronecker(-1, ell);
  sign *= it->second;
  Rational out(BigInt::pow(BigInt(ell), static_cast<unsigned long>(half)), BigInt(1));
  return Rational(sign) * out;
}

std::string spec_to_string(const SpaceSpec& spec) {
  std::ostringstream os;
  os << "D=" << spec.field.D << ";n=" << spec.n << ";inv=";
  bool first = true;
  for (const auto& [ell, sign] : spec.inv) {  // std::map: ascending primes
    if (!first) os << ",";
    os << ell << ":" << (sign == 1 ? "+1" : "-1");
    first = false;
  }
  return os.str();
}

namespace {

long parse_long_field(const std::string& part, const std::string& key) {
  if (part.rfind(key + "=", 0) != 0) {
    throw CalcError(ErrKind::BadInput, "expected '" + key + "=' in spec string");
  }
  const std::string val = part.substr(key.size() + 1);
  char* end = nullptr;
  long v = std::strtol(val.c_str(), &end, 10);
  if (end == val.c_str() || *end != '\0') {
    throw CalcError(ErrKind::BadInput, "bad integer for '" + key + "'");
  }
  return v;
}

}  // namespace

SpaceSpec parse_space(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) {
    throw CalcError(ErrKind::BadInput, "spec string must be D=..;n=..;inv=..");
  }
  SpaceSpec spec;
  spec.field = make_field(parse_long_field(parts[0], "D"));
  spec.n = parse_long_field(parts[1], "n");
  if (parts[2].rfind("inv=", 0) != 0) {
    throw CalcError(ErrKind::BadInput, "expected 'inv=' in spec string");
  }
  std::string invs = parts[2].substr(4);
  std::string item;
  std::vector<std::string> items;
  for (char c : invs) {
    if (c == ',') {
      items.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  if (!item.empty() || invs.empty()) items.push_back(item);
  for (const std::string& kv : items) {
    auto pos = kv.find(':');
    if (pos == std::string::npos) {
      throw CalcError(ErrKind::BadInput, "invariant entries look like 7:-1");
    }
    const std::string ps = kv.substr(0, pos);
    const std::string ss = kv.substr(pos + 1);
    char* end = nullptr;
    long p = std::strtol(ps.c_str(), &end, 10);
    if (end == ps.c_str() || *end != '\0') {
      throw CalcError(ErrKind::BadInput, "bad prime in invariant entry");
    }
    int sign = 0;
    if (ss == "1" || ss == "+1") sign = 1;
    else if (ss == "-1") sign = -1;
    else throw CalcError(ErrKind::BadInput, "invariant sign must be +1 or -1");
    if (spec.inv.count(p)) {
      throw CalcError(ErrKind::BadInput, "duplicate invariant prime");
    }
    spec.inv[p] = sign;
  }
  validate_space(spec);
  return spec;
}

}  // namespace shv
