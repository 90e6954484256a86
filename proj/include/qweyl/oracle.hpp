#pragma once

// Brute-force ground truth over small prime fields.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

/// All polynomials over F_p (p <= 7) of total degree <= max_total_degree,
/// optionally restricted to a set of monomials.
struct EnumSpace {
  Context ctx;
  unsigned max_total_degree = 2;
  std::optional<std::vector<Monomial>> support;
  std::uint64_t cap = 100'000'000;

  // Throws InvalidArgument for fields other than F_p with p <= 7 or degree > 3.
  void validate() const;
  // Monomials of the space in descending degree-lex order.
  std::vector<Monomial> basis() const;
  // Number of nonzero polynomials.
  std::uint64_t cardinality() const;
};

// Visits every nonzero polynomial exactly once, by increasing total degree and
// then odometer order over the coefficients. The visitor returns false to stop.
// Throws SpaceTooLarge when the cardinality exceeds the cap.
void enumerate_polys(const EnumSpace& space, const std::function<bool(const WeylPoly&)>& visit);

// Nonzero polynomials of total degree exactly d; leading coefficient 1 when normalized.
void enumerate_degree(const EnumSpace& space, unsigned d, bool normalized,
                      const std::function<bool(const WeylPoly&)>& visit);

// g * h = f with both of positive degree, factors from the space.
// Throws ZeroInput, UnitInput.
std::optional<std::pair<WeylPoly, WeylPoly>> brute_factor(const WeylPoly& f, const EnumSpace& space);

// Exhaustive search for the cofactor, Right before Left. Throws ZeroDivisor.
std::optional<DivisionWitness> brute_divides(const WeylPoly& a, const WeylPoly& c, const EnumSpace& space);

// Some (b, c) from the space with f | bc while f divides neither.
// Throws ZeroInput, UnitInput.
std::optional<std::pair<WeylPoly, WeylPoly>> prime_counterexample_search(const WeylPoly& f, const EnumSpace& space);

/// Every product g * h with g normalized of degree dg and h of degree dh,
/// for repeated factorization lookups.
class ProductTable {
 public:
  ProductTable(const EnumSpace& space, unsigned dg, unsigned dh);
  std::optional<std::pair<WeylPoly, WeylPoly>> lookup(const WeylPoly& f) const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::map<std::string, std::pair<WeylPoly, WeylPoly>> table_;
};

struct Disagreement {
  std::string description;
  std::string repro;
};

/// Differential-test tally.
struct DifferentialReport {
  std::uint64_t agreements = 0;
  std::vector<Disagreement> disagreements;

  void record(bool agree, const std::string& description, const std::string& repro);
  bool clean() const noexcept { return disagreements.empty(); }
};

// A CLI invocation reproducing a computation.
std::string repro_command(const Context& ctx, const std::string& subcommand, const std::vector<std::string>& args);

}  // namespace qweyl
