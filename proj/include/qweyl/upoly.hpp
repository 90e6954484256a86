#pragma once

// Dense commutative polynomials in one variable over a FieldSpec.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/field.hpp"

namespace qweyl {

class UPoly {
 public:
  explicit UPoly(const FieldSpec& field) : field_(field) {}
  // Coefficients from the constant term upwards; trailing zeros are trimmed.
  UPoly(const FieldSpec& field, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  static UPoly monomial(const Scalar& c, unsigned exponent);
  static UPoly variable(const FieldSpec& field) { return monomial(Scalar::one(field), 1); }

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<unsigned> degree() const;
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(unsigned exponent) const;
  const Scalar& lead() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Scalar& c) const;

  // Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);
  // Quotient when den divides num exactly, else nullopt.
  static std::optional<UPoly> exact_quotient(const UPoly& num, const UPoly& den);

  UPoly monic() const;
  // p(lambda * x).
  UPoly dilated(const Scalar& lambda) const;
  Scalar eval(const Scalar& at) const;

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string str(char var = 'x') const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

struct FactorSearch {
  enum class Outcome { Irreducible, Reducible, Inconclusive };
  Outcome outcome;
  std::optional<std::pair<UPoly, UPoly>> factors;
};

// Looks for a factorization into two polynomials of positive degree.
// Over F_p candidates are enumerated; over Q Kronecker's method is used.
// Outcome is Inconclusive when the work budget runs out.
FactorSearch find_factor(const UPoly& f, std::uint64_t budget = 2'000'000);

}  // namespace qweyl
