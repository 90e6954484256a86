#pragma once

// Normal-ordered arithmetic in the quantized Weyl algebra: x, y with yx = qxy + 1.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/field.hpp"

namespace qweyl {

/// Coefficient field plus deformation parameter q (nonzero).
class Context {
 public:
  Context(const FieldSpec& field, const Scalar& q);
  static Context parse(std::string_view field, std::string_view q);

  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& q() const noexcept { return q_; }
  Scalar scalar(long value) const { return Scalar(field_, value); }

  // The q = 1 algebra is constructible; results that need q != 1 call this.
  void require_q_not_one() const;

  friend bool operator==(const Context& a, const Context& b) { return a.field_ == b.field_ && a.q_ == b.q_; }

 private:
  FieldSpec field_;
  Scalar q_;
};

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned degree() const noexcept { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Descending degree-lex: higher total degree first, then higher x-exponent.
struct DescendingDegLex {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

/// A sparse element sum c_ij x^i y^j with x left of y; no zero coefficients are stored.
class WeylPoly {
 public:
  using Terms = std::map<Monomial, Scalar, DescendingDegLex>;

  explicit WeylPoly(const Context& ctx) : ctx_(ctx) {}

  static WeylPoly constant(const Context& ctx, const Scalar& c);
  static WeylPoly monomial(const Context& ctx, Monomial m, const Scalar& c);
  static WeylPoly x(const Context& ctx) { return monomial(ctx, {1, 0}, ctx.scalar(1)); }
  static WeylPoly y(const Context& ctx) { return monomial(ctx, {0, 1}, ctx.scalar(1)); }

  const Context& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Zero or a nonzero constant.
  bool is_constant() const noexcept;
  Scalar coefficient(Monomial m) const;

  void add_term(Monomial m, const Scalar& c);

  WeylPoly operator-() const;
  WeylPoly& operator+=(const WeylPoly& rhs);
  WeylPoly& operator-=(const WeylPoly& rhs);
  friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
  friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
  friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b);
  friend WeylPoly operator*(const Scalar& c, const WeylPoly& f);

  friend bool operator==(const WeylPoly& a, const WeylPoly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  void check_context(const WeylPoly& other) const;

  Context ctx_;
  Terms terms_;
};

WeylPoly pow(const WeylPoly& f, unsigned exponent);

// Normal form of x^i y^j * x^k y^l.
WeylPoly reorder_monomial(unsigned i, unsigned j, unsigned k, unsigned l, const Context& ctx);

// f(lambda x, mu y).
WeylPoly substitute(const WeylPoly& f, const Scalar& lambda, const Scalar& mu);

std::optional<unsigned> total_degree(const WeylPoly& f);

enum class Side { Right, Left };

/// c = a * cofactor (Right) or c = cofactor * a (Left).
struct DivisionWitness {
  Side side;
  WeylPoly cofactor;
};

// Two-sided divisibility a | c, solved as a linear system over the field.
// Right is tried before Left. Throws ZeroDivisor when a = 0.
std::optional<DivisionWitness> divides(const WeylPoly& a, const WeylPoly& c);

struct NormalityWitness {
  WeylPoly gx;  // f x = gx f
  WeylPoly gy;  // f y = gy f
};

std::optional<NormalityWitness> is_normal(const WeylPoly& f);

bool is_central(const WeylPoly& f);

// u = (q - 1)xy + 1. Throws QIsOne.
WeylPoly u_poly(const Context& ctx);

// Coefficients of x^i y^i in u^m for i = 0..m, from the ratio recursion
// mu_{m,j+1} = (q^m - q^j) / [j+1]_q * mu_{m,j}, evaluated with q generic
// and then specialized, so roots of unity where [j+1]_q = 0 are handled.
std::vector<Scalar> u_power_coeffs(unsigned m, const Context& ctx);

}  // namespace qweyl
