#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/weyl.hpp"
#include "shell.hpp"

namespace qweyl::testing {

inline Context rational_ctx(long num, long den = 1) {
  return Context(FieldSpec::rationals(), Scalar(FieldSpec::rationals(), num, den));
}

inline Context prime_ctx(std::uint64_t p, long q) {
  const FieldSpec f = FieldSpec::prime(p);
  return Context(f, Scalar(f, q));
}

// A small random scalar: integers in [-bound, bound] over Q, occasionally a
// fraction; any residue over F_p.
inline Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng, long bound = 5) {
  if (!field.is_rational()) {
    return Scalar(field, static_cast<long>(rng() % field.modulus()));
  }
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return (rng() % 3 == 0) ? Scalar(field, num(rng), den(rng)) : Scalar(field, num(rng));
}

inline WeylPoly random_poly(const Context& ctx, std::mt19937_64& rng, unsigned max_degree, unsigned terms,
                            long bound = 5) {
  WeylPoly f(ctx);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  for (unsigned t = 0; t < terms; ++t) {
    unsigned d = deg(rng);
    unsigned x = std::uniform_int_distribution<unsigned>(0, d)(rng);
    f.add_term({x, d - x}, random_scalar(ctx.field(), rng, bound));
  }
  return f;
}

}  // namespace qweyl::testing
