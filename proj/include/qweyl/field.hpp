#pragma once

// Exact coefficient fields: the rationals and prime fields F_p, p odd.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "qweyl/error.hpp"

namespace qweyl {

class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  // Throws CharacteristicTwo for p = 2 and InvalidModulus for non-primes.
  static FieldSpec prime(std::uint64_t p);
  // "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// An exact field element tagged with its field. Rationals are kept in lowest
/// terms with a positive denominator; residues live in [0, p).
class Scalar {
 public:
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& value);
  // Rationals only.
  Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
  explicit Scalar(const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }
  // Scalar text syntax: [sign] digits ["/" digits] over Q, digits over F_p.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

std::optional<Scalar> square_root(const Scalar& x);

// Least n >= 1 with q^n = 1, or nullopt for infinite order.
std::optional<std::uint64_t> multiplicative_order(const Scalar& q);

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Scalar q_int(unsigned n, const Scalar& q);

namespace detail {
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
}  // namespace detail

}  // namespace qweyl
