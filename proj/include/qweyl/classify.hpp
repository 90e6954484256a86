#pragma once

// Decision procedures: quantum discriminant, reducibility of quadratic forms
// with explicit factorizations, and the primality classifier.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

/// f = a x^2 + b xy + c y^2 + d x + e y + k.
struct QuadraticForm {
  Context ctx;
  Scalar a, b, c, d, e, k;

  // Reads the coefficients of f; throws WrongShape above total degree 2.
  static QuadraticForm from_poly(const WeylPoly& f);
  WeylPoly to_poly() const;
  bool has_linear_terms() const { return !d.is_zero() || !e.is_zero(); }
  bool is_degree_two() const { return !a.is_zero() || !b.is_zero() || !c.is_zero(); }
};

// Which construction produced a factorization.
enum class QuadCase {
  YRightFactor,    // a = k = 0:          (bx + cy) y
  XLeftFactor,     // c = k = 0:          x (ax + by)
  UnivariateY,     // a = b = 0, -ck = s^2
  UnivariateX,     // b = c = 0, -ak = s^2
  ConstantPivot,   // k != 0, disc = (b - 2qk)^2:  (ax + ky)(x + c/k y)
  QSymmetric,      // q != -1, b != 0, disc = ((1-q)/[2]_q b)^2, s^2 = a(b/[2]_q - k)
  QMinusOne,       // q = -1, b = 0, ac = tau^2 != 0, (tau - k)c = omega^2
  GeneralLeadX,    // linear-term solver, left factor x + mu y + nu
  GeneralLeadY,    // linear-term solver, left factor y + nu
};

std::string_view case_name(QuadCase c);

struct Factorization {
  QuadCase label;
  WeylPoly left;
  WeylPoly right;
  // Named scalar witnesses used by the construction (s, tau, omega, mu, ...).
  std::vector<std::pair<std::string, Scalar>> witnesses;
};

struct ReducibilityVerdict {
  std::optional<Factorization> factorization;
  bool reducible() const { return factorization.has_value(); }
};

// b^2 - 4acq.
Scalar quantum_discriminant(const QuadraticForm& f);

// f = ax^2 + bxy + cy^2 + k. Reports the first firing case in declaration
// order. Throws DegreeTooLow when a = b = c = 0.
ReducibilityVerdict classify_quadratic_no_linear(const Context& ctx, const Scalar& a, const Scalar& b,
                                                 const Scalar& c, const Scalar& k);

// Every firing case with its factorization, in declaration order.
std::vector<Factorization> firing_cases(const Context& ctx, const Scalar& a, const Scalar& b, const Scalar& c,
                                        const Scalar& k);

// Solves for (lambda x + mu y + nu)(alpha x + beta y + gamma) = f directly.
ReducibilityVerdict classify_quadratic_general(const QuadraticForm& f);

// Dispatches to the no-linear classifier when d = e = 0.
ReducibilityVerdict classify_quadratic(const QuadraticForm& f);

// Some k with f = k u (k = 0 for f = 0). Throws QIsOne.
std::optional<Scalar> is_scalar_multiple_of_u(const WeylPoly& f);

struct PrimalityVerdict {
  enum class Kind { Prime, NotPrime, Undecided };

  // Either f = first * second (a factorization into nonunits), or a pair
  // with f | first*second while f divides neither.
  struct Witness {
    bool factorization;
    WeylPoly first;
    WeylPoly second;
  };

  Kind kind;
  std::string criterion;  // for Prime the criterion used, otherwise the reason
  std::optional<Witness> witness;
};

std::string_view kind_name(PrimalityVerdict::Kind kind);

// Throws QIsOne.
PrimalityVerdict classify_prime(const WeylPoly& f);

// True when f | b*c while f divides neither b nor c.
bool is_prime_counterexample(const WeylPoly& f, const WeylPoly& b, const WeylPoly& c);

}  // namespace qweyl
