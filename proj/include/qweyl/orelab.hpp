#pragma once

// Ore-extension calculus over the rational-function field F(x): the Eulerian
// quasi-derivation (sigma, delta), skew polynomials in t, and the q = -1
// recentering t = y - (2x)^-1 that turns F(x)[y; sigma, delta] into F(x)[t; sigma].

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/upoly.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  explicit RatFunc(const FieldSpec& field);
  RatFunc(UPoly num, UPoly den);  // throws DivisionByZero for den = 0
  static RatFunc constant(const Scalar& c);
  static RatFunc x(const FieldSpec& field);
  static RatFunc from_poly(const UPoly& p);

  const FieldSpec& field() const noexcept { return num_.field(); }
  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const;

  RatFunc operator-() const;
  RatFunc inv() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str() const;

 private:
  void canonicalize();

  UPoly num_;
  UPoly den_;
};

// r(qx).
RatFunc sigma_q(const RatFunc& r, const Scalar& q);
// (sigma(r) - r) / ((q - 1) x) on polynomials, extended by the sigma-Leibniz
// rule. Throws QIsOne.
RatFunc delta_q(const RatFunc& r, const Scalar& q);

enum class Derivation {
  Eulerian,  // t r = sigma(r) t + delta(r): the algebra itself, t = y
  None,      // t r = sigma(r) t
};

/// Sum of coefficient_i t^i with coefficients in F(x).
class SkewPoly {
 public:
  SkewPoly(const Context& ctx, Derivation derivation, std::vector<RatFunc> coeffs = {});
  static SkewPoly t(const Context& ctx, Derivation derivation);
  static SkewPoly constant(const Context& ctx, Derivation derivation, const RatFunc& r);
  // Image of a Weyl polynomial in F(x)[y; sigma, delta].
  static SkewPoly from_weyl(const WeylPoly& f);

  const Context& context() const noexcept { return ctx_; }
  Derivation derivation() const noexcept { return derivation_; }
  const std::vector<RatFunc>& coeffs() const noexcept { return coeffs_; }
  std::optional<unsigned> degree() const;
  RatFunc coeff(unsigned i) const;

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

  std::string str() const;

 private:
  void trim();
  void check_compatible(const SkewPoly& other) const;

  Context ctx_;
  Derivation derivation_;
  std::vector<RatFunc> coeffs_;
};

// Product under the ring's commutation rule. Throws ContextMismatch.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

// The recentering shift (2x)^-1.
RatFunc recenter_shift(const FieldSpec& field);

struct Recentered {
  Scalar a, k;    // f / c = y^2 + a x^2 + k
  RatFunc p;      // image t^2 - p
  SkewPoly image;
};

// Image of c y^2 + a x^2 + k in F(x)[t; sigma] under t = y - (2x)^-1.
// Throws QNotMinusOne, then WrongShape.
Recentered recenter_q_minus_1(const WeylPoly& f);

struct OreDecision {
  bool reducible = false;
  std::string branch;                                // which part of the norm analysis decided
  std::vector<std::pair<std::string, Scalar>> witnesses;
  std::optional<RatFunc> w;                          // t^2 - p = (t - sigma(w))(t + w)
};

// Whether t^2 - p is reducible in F(x)[t; sigma] for p from y^2 + a x^2 + k.
// With w = u / (2x) this asks for g = 4a x^4 + 4k x^2 + 1 = u(x) u(-x), decided
// from the factorization of 4a z^2 + 4k z + 1. Throws QNotMinusOne, ZeroLeadingCoefficient.
OreDecision factor_t2_minus_v_decide(const Context& ctx, const Scalar& a, const Scalar& k);

// w with t + w the right factor, from a factorization left * right of
// y^2 + a x^2 + k in the algebra. Throws WrongShape if right has no y-term.
RatFunc reconstruct_w(const WeylPoly& left, const WeylPoly& right);

// (t - sigma(w))(t + w) equals the recentered image of y^2 + a x^2 + k, and
// (y - sigma(w'))(y + w') with w' = w - (2x)^-1 equals it in the algebra's ring.
bool verify_w(const Context& ctx, const Scalar& a, const Scalar& k, const RatFunc& w);

struct LemmaCheck {
  std::string name;
  bool passed;
  std::optional<RatFunc> counterexample;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

// Checks for t^2 - v to be normal: (1) t v = v t, (2) delta^2(r) = v r - sigma^2(r) v,
// (3) delta sigma = -sigma delta, the last two on every sample. Throws QIsOne.
LemmaReport normal_lemma_verify(const RatFunc& v, const std::vector<RatFunc>& samples, const Scalar& q);

}  // namespace qweyl
